#include <doctest.h>

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "sympgt/errors.hpp"
#include "sympgt/patterns.hpp"

using namespace sympgt;

namespace {

HighestWeight hw(std::vector<Entry> v) {
  return HighestWeight::validate(std::move(v));
}

}  // namespace

TEST_CASE("validate_pattern checks both interleaving chains") {
  const auto lam = hw({0, -1});

  CHECK(validate_pattern(Pattern({{0}, {0, -1}}, {{0}, {0, -1}}), lam));
  CHECK(validate_pattern(Pattern({{-1}, {0, -1}}, {{0}, {0, -1}}), lam));

  // Top row must equal the highest weight.
  CHECK_FALSE(validate_pattern(Pattern({{0}, {0, 0}}, {{0}, {0, 0}}), lam));
  // Unprimed chain: lambda'_11 >= lambda_11 fails.
  CHECK_FALSE(validate_pattern(Pattern({{0}, {0, -1}}, {{-1}, {0, -1}}), lam));
  // Second chain: lambda_11 must interleave the primed top row; -2 escapes.
  CHECK_FALSE(validate_pattern(Pattern({{-2}, {0, -1}}, {{-2}, {0, -1}}), lam));
  // Primed entries must stay non-positive.
  CHECK_FALSE(validate_pattern(Pattern({{0}, {0, -1}}, {{1}, {0, -1}}), lam));

  CHECK_THROWS_AS(validate_pattern(Pattern({{0}}, {{0}}), lam),
                  StructuralError);
}

TEST_CASE("pattern counts match the classical dimensions") {
  const std::map<std::vector<Entry>, Int> expected = {
      {{-1}, 2},          {{-2}, 3},         {{0, -1}, 4},
      {{-1, -1}, 5},      {{0, -2}, 10},     {{-2, -2}, 14},
      {{0, 0, -1}, 6},    {{0, -1, -1}, 14}, {{-1, -1, -1}, 14},
      {{0, 0, -2}, 21},   {{0}, 1},          {{0, 0}, 1},
  };
  for (const auto& [labels, count] : expected) {
    const std::string ctx = hw(labels).to_string();
    CAPTURE(ctx);
    CHECK(count_patterns(hw(labels)) == count);
  }
}

TEST_CASE("enumeration is sorted, duplicate-free, valid, and count-consistent") {
  for (const auto& labels : std::vector<std::vector<Entry>>{
           {-2}, {0, -2}, {-2, -2}, {0, -1, -1}, {0, 0, -2}}) {
    const auto lam = hw(labels);
    const auto pats = enumerate_patterns(lam, Int(1000));
    const std::string ctx = lam.to_string();
    CAPTURE(ctx);
    CHECK(Int(pats.size()) == count_patterns(lam));
    CHECK(std::is_sorted(pats.begin(), pats.end()));
    CHECK(std::adjacent_find(pats.begin(), pats.end()) == pats.end());
    for (const auto& p : pats) CHECK(validate_pattern(p, lam));
  }
}

TEST_CASE("the guard bounds enumeration up front") {
  const auto lam = hw({0, -2});
  CHECK_THROWS_AS(enumerate_patterns(lam, Int(9)), GuardError);
  try {
    enumerate_patterns(lam, Int(9));
  } catch (const GuardError& e) {
    CHECK(e.count == 10);
  }
  CHECK(enumerate_patterns(lam, Int(10)).size() == 10);
}

TEST_CASE("apply_delta shifts one cell and validates the result") {
  const auto lam = hw({0, -1});
  const Pattern top({{0}, {0, -1}}, {{0}, {0, -1}});

  const auto down = apply_delta(top, {false, 1, 1, -1}, lam);
  REQUIRE(down.has_value());
  CHECK(down->unprimed(1, 1) == -1);

  // Raising the same cell from the top pattern leaves the chains.
  CHECK_FALSE(apply_delta(top, {false, 1, 1, +1}, lam).has_value());
  CHECK_FALSE(apply_delta(top, {true, 2, 1, +1}, lam).has_value());

  CHECK_THROWS_AS(apply_delta(top, {false, 3, 1, -1}, lam), StructuralError);
  CHECK_THROWS_AS(apply_delta(top, {true, 2, 3, -1}, lam), StructuralError);
}

TEST_CASE("apply_delta is undone by the opposite shift") {
  const auto lam = hw({0, -2});
  for (const auto& p : enumerate_patterns(lam, Int(100))) {
    for (bool primed : {false, true}) {
      for (int k = 1; k <= lam.rank(); ++k) {
        for (int i = 1; i <= k; ++i) {
          for (int sign : {-1, +1}) {
            if (!primed && k == lam.rank()) continue;  // top row is fixed
            const auto shifted = apply_delta(p, {primed, k, i, sign}, lam);
            if (!shifted) continue;
            const auto back = apply_delta(*shifted, {primed, k, i, -sign}, lam);
            REQUIRE(back.has_value());
            CHECK(*back == p);
          }
        }
      }
    }
  }
}

TEST_CASE("weight_of sums row differences") {
  const auto lam = hw({0, -1});
  const Pattern top({{0}, {0, -1}}, {{0}, {0, -1}});
  CHECK(weight_of(top) == Weight{0, -1});
  const Pattern bottom({{-1}, {0, -1}}, {{-1}, {0, -1}});
  CHECK(weight_of(bottom) == Weight{-1, 0});
}

TEST_CASE("highest_pattern repeats the weight down the triangle") {
  const auto lam = hw({0, -1, -2});
  const auto top = highest_pattern(lam);
  CHECK(validate_pattern(top, lam));
  CHECK(weight_of(top) == Weight{0, -1, -2});
  for (int k = 1; k <= 3; ++k) {
    for (int i = 1; i <= k; ++i) {
      CHECK(top.unprimed(k, i) == lam.at(i));
      CHECK(top.primed(k, i) == lam.at(i));
    }
  }
  // Canonical order interleaves it with patterns whose primed entries
  // exceed the truncated labels, so it sits mid-list at a fixed index.
  const auto pats = enumerate_patterns(lam, Int(10000));
  const auto it = std::find(pats.begin(), pats.end(), top);
  REQUIRE(it != pats.end());
  CHECK(it - pats.begin() == 33);
}
