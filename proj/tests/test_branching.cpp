#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "sympgt/branching.hpp"
#include "sympgt/errors.hpp"
#include "sympgt/patterns.hpp"

using namespace sympgt;

namespace {

HighestWeight hw(std::vector<Entry> v) {
  return HighestWeight::validate(std::move(v));
}

Rational half_int(long twice) { return Rational(twice) / Rational(2); }

// Direct count of interleaving tuples nu, with no factorization shortcut.
Int brute_force_multiplicity(const HighestWeight& lam, const HighestWeight& mu) {
  const int n = lam.rank();
  std::vector<Entry> nu(static_cast<std::size_t>(n));
  Int count = 0;
  const std::function<void(int)> scan = [&](int i) {
    if (i > n) {
      count += 1;
      return;
    }
    // Global bounds; all chain inequalities are re-checked explicitly.
    for (Entry v = lam.at(n); v <= 0; ++v) {
      nu[static_cast<std::size_t>(i - 1)] = v;
      bool fine = true;
      if (i == 1 && v > 0) fine = false;
      if (fine && i >= 2 && nu[static_cast<std::size_t>(i - 2)] < v) fine = false;
      if (fine && v < lam.at(i)) fine = false;
      if (fine && i >= 2 && lam.at(i - 1) < v) fine = false;
      if (fine && i <= n - 1 && mu.at(i) > v) fine = false;
      if (fine && i >= 2 && mu.at(i - 1) < v) fine = false;
      if (fine) scan(i + 1);
    }
  };
  scan(1);
  return count;
}

std::map<std::vector<Entry>, Int> branch_table(const HighestWeight& lam) {
  std::map<std::vector<Entry>, Int> table;
  for (const auto& term : branch(lam)) {
    table[term.mu.entries()] = term.multiplicity;
  }
  return table;
}

// Every weakly decreasing non-positive mu with entries down past lam_n, so
// the sweep includes weights outside the admissible band.
std::vector<HighestWeight> all_candidate_mus(const HighestWeight& lam) {
  const int m = lam.rank() - 1;
  std::vector<HighestWeight> out;
  std::vector<Entry> mu(static_cast<std::size_t>(m));
  const std::function<void(int, Entry)> scan = [&](int i, Entry hi) {
    if (i > m) {
      out.push_back(HighestWeight::validate(mu));
      return;
    }
    for (Entry v = lam.at(lam.rank()) - 1; v <= hi; ++v) {
      mu[static_cast<std::size_t>(i - 1)] = v;
      scan(i + 1, v);
    }
  };
  scan(1, 0);
  return out;
}

}  // namespace

TEST_CASE("product dimensions of the corpus") {
  const std::map<std::vector<Entry>, Int> expected = {
      {{-1}, 2},        {{-2}, 3},         {{0, -1}, 4},      {{-1, -1}, 5},
      {{0, -2}, 10},    {{-2, -2}, 14},    {{0, 0, -1}, 6},   {{0, -1, -1}, 14},
      {{-1, -1, -1}, 14}, {{0, 0, -2}, 21}, {{0}, 1},         {{0, 0, 0}, 1},
      {{-2, -2, -2}, 84}, {{-3, -3, -3}, 330}};
  for (const auto& [labels, dim] : expected) {
    const std::string ctx = hw(labels).to_string();
    CAPTURE(ctx);
    CHECK(weyl_dim(hw(labels)) == dim);
  }
}

TEST_CASE("the two multiplicity routes and the brute force all agree") {
  for (const auto& labels : std::vector<std::vector<Entry>>{
           {0, -1}, {-2, -2}, {0, -2}, {0, -1, -1}, {0, 0, -2}, {0, -1, -2}}) {
    const auto lam = hw(labels);
    const std::string ctx = lam.to_string();
    CAPTURE(ctx);
    for (const auto& mu : all_candidate_mus(lam)) {
      const std::string ctx = mu.to_string();
      CAPTURE(ctx);
      const Int direct = multiplicity_c(lam, mu);
      const Int product = multiplicity_product(lam, mu);
      const Int brute = brute_force_multiplicity(lam, mu);
      CHECK(direct == product);
      CHECK(direct == brute);
    }
  }
}

TEST_CASE("interval data of the worked example") {
  const auto lam = hw({0, -1});
  std::vector<Rational> alphas, betas;

  CHECK(multiplicity_product(lam, hw({0}), &alphas, &betas) == 2);
  CHECK(alphas == std::vector<Rational>{half_int(-1), half_int(-3)});
  CHECK(betas == std::vector<Rational>{half_int(-1), half_int(-5)});

  CHECK(multiplicity_product(lam, hw({-1}), &alphas, &betas) == 1);
  CHECK(multiplicity_product(lam, hw({-2})) == 0);
  CHECK(multiplicity_c(lam, hw({-2})) == 0);
}

TEST_CASE("interval differences are non-negative integers wherever c > 0") {
  for (const auto& labels : std::vector<std::vector<Entry>>{
           {0, -2}, {-2, -2}, {0, -1, -1}, {0, 0, -2}}) {
    const auto lam = hw(labels);
    for (const auto& term : branch(lam)) {
      REQUIRE(term.alphas.size() == term.betas.size());
      for (std::size_t i = 0; i < term.alphas.size(); ++i) {
        const Rational diff = term.alphas[i] - term.betas[i];
        const std::string ctx = lam.to_string();
        CAPTURE(ctx);
        const std::string ctx1 = term.mu.to_string();
        CAPTURE(ctx1);
        CAPTURE(i);
        CHECK(denominator(diff) == 1);
        CHECK(diff >= 0);
      }
    }
  }
}

TEST_CASE("restriction tables match the frozen decompositions") {
  using Table = std::map<std::vector<Entry>, Int>;
  const std::map<std::vector<Entry>, Table> expected = {
      {{0, -1}, {{{-1}, 1}, {{0}, 2}}},
      {{-1, -1}, {{{-1}, 2}, {{0}, 1}}},
      {{0, -2}, {{{-2}, 1}, {{-1}, 2}, {{0}, 3}}},
      {{-2, -2}, {{{-2}, 3}, {{-1}, 2}, {{0}, 1}}},
      {{0, 0, -1}, {{{0, -1}, 1}, {{0, 0}, 2}}},
      {{0, -1, -1}, {{{-1, -1}, 1}, {{0, -1}, 2}, {{0, 0}, 1}}},
      {{-1, -1, -1}, {{{-1, -1}, 2}, {{0, -1}, 1}}},
      {{0, 0, -2}, {{{0, -2}, 1}, {{0, -1}, 2}, {{0, 0}, 3}}},
      {{0, 0}, {{{0}, 1}}}};
  for (const auto& [labels, table] : expected) {
    const std::string ctx = hw(labels).to_string();
    CAPTURE(ctx);
    CHECK(branch_table(hw(labels)) == table);
  }
  CHECK_THROWS_AS(branch(hw({-1})), DomainError);
}

TEST_CASE("terms come back ascending in lex order with positive counts") {
  for (const auto& labels : std::vector<std::vector<Entry>>{
           {0, -2}, {-2, -2}, {0, 0, -2}}) {
    const auto terms = branch(hw(labels));
    REQUIRE(!terms.empty());
    for (std::size_t t = 0; t < terms.size(); ++t) {
      CHECK(terms[t].multiplicity > 0);
      if (t > 0) {
        CHECK(std::lexicographical_compare(
            terms[t - 1].mu.entries().begin(), terms[t - 1].mu.entries().end(),
            terms[t].mu.entries().begin(), terms[t].mu.entries().end()));
      }
    }
  }
}

TEST_CASE("restricted dimensions add up") {
  for (const auto& labels : std::vector<std::vector<Entry>>{
           {0, -1}, {-1, -1}, {0, -2}, {-2, -2}, {0, 0, -1}, {0, -1, -1},
           {-1, -1, -1}, {0, 0, -2}}) {
    const auto lam = hw(labels);
    Int total = 0;
    for (const auto& term : branch(lam)) {
      total += term.multiplicity * weyl_dim(term.mu);
    }
    const std::string ctx = lam.to_string();
    CAPTURE(ctx);
    CHECK(total == weyl_dim(lam));
  }
}

TEST_CASE("patterns grouped by their next-to-top row refine the restriction") {
  for (const auto& labels : std::vector<std::vector<Entry>>{
           {0, -1}, {-1, -1}, {0, 0, -1}, {0, -2}}) {
    const auto lam = hw(labels);
    const int n = lam.rank();
    std::map<std::vector<Entry>, Int> observed;
    for (const auto& p : enumerate_patterns(lam, Int(1000))) {
      observed[p.unprimed_rows()[static_cast<std::size_t>(n - 2)]] += 1;
    }
    std::map<std::vector<Entry>, Int> predicted;
    for (const auto& term : branch(lam)) {
      predicted[term.mu.entries()] =
          term.multiplicity * count_patterns(term.mu);
    }
    const std::string ctx = lam.to_string();
    CAPTURE(ctx);
    CHECK(observed == predicted);
  }
  // Frozen counts for the first case: rows (-1) and (0) appear twice each.
  std::map<std::vector<Entry>, Int> first;
  for (const auto& p : enumerate_patterns(hw({0, -1}), Int(100))) {
    first[p.unprimed_rows()[0]] += 1;
  }
  CHECK(first == std::map<std::vector<Entry>, Int>{{{-1}, 2}, {{0}, 2}});
}

TEST_CASE("pattern character equals the determinantal character") {
  for (const auto& labels : std::vector<std::vector<Entry>>{
           {-1}, {-2}, {0, -1}, {-1, -1}, {0, -2}, {-2, -2}, {0, 0, -1},
           {0, -1, -1}, {-1, -1, -1}, {0, 0, -2}}) {
    const auto lam = hw(labels);
    const std::string ctx = lam.to_string();
    CAPTURE(ctx);
    CHECK(character(lam) == character_determinantal(lam));
  }
}

TEST_CASE("characters are invariant under signed permutations of the axes") {
  for (const auto& labels :
       std::vector<std::vector<Entry>>{{0, -2}, {0, -1, -1}}) {
    const auto chi = character(hw(labels));
    const std::size_t n = labels.size();
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    do {
      for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::map<Weight, Int> moved;
        for (const auto& [w, mult] : chi) {
          Weight image(n);
          for (std::size_t i = 0; i < n; ++i) {
            image[i] = (mask >> i) & 1u ? -w[perm[i]] : w[perm[i]];
          }
          moved[image] += mult;
        }
        CHECK(moved == chi);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST_CASE("weight multiset facts frozen by hand") {
  CHECK(character(hw({0, -1})) ==
        std::map<Weight, Int>{{{-1, 0}, 1}, {{0, -1}, 1}, {{0, 1}, 1}, {{1, 0}, 1}});
  CHECK(character(hw({-1, -1})) ==
        std::map<Weight, Int>{{{-1, -1}, 1},
                              {{-1, 1}, 1},
                              {{0, 0}, 1},
                              {{1, -1}, 1},
                              {{1, 1}, 1}});

  // A single lowered label gives the defining module: weights +/- e_k once.
  for (int n : {1, 2, 3}) {
    std::vector<Entry> labels(static_cast<std::size_t>(n), 0);
    labels.back() = -1;
    std::map<Weight, Int> expected;
    for (int k = 0; k < n; ++k) {
      Weight up(static_cast<std::size_t>(n), 0);
      up[static_cast<std::size_t>(k)] = 1;
      expected[up] = 1;
      Weight down(static_cast<std::size_t>(n), 0);
      down[static_cast<std::size_t>(k)] = -1;
      expected[down] = 1;
    }
    CAPTURE(n);
    CHECK(character(hw(labels)) == expected);
  }
}

TEST_CASE("character enumeration respects the guard") {
  CHECK_THROWS_AS(character(hw({0, -2}), Int(5)), GuardError);
}
