#include "sympgt/branching.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "sympgt/errors.hpp"

namespace sympgt {

namespace {

void require_branch_ranks(const HighestWeight& lam, const HighestWeight& mu) {
  if (lam.rank() < 2) {
    throw DomainError("branching needs rank at least 2");
  }
  if (mu.rank() != lam.rank() - 1) {
    throw StructuralError("restriction weight must have rank n-1");
  }
}

}  // namespace

Int multiplicity_c(const HighestWeight& lam, const HighestWeight& mu) {
  require_branch_ranks(lam, mu);
  const int n = lam.rank();
  // nu_i is pinned between both chains; with lam and mu fixed the intervals
  // decouple. Sentinels lam_0 = mu_0 = 0; mu places no bound under nu_n.
  Int count = 1;
  for (int i = 1; i <= n; ++i) {
    Entry lo = lam.at(i);
    if (i <= n - 1) lo = std::max(lo, mu.at(i));
    Entry hi = (i == 1) ? 0 : std::min(lam.at(i - 1), mu.at(i - 1));
    if (hi < lo) return 0;
    count *= Int(hi - lo + 1);
  }
  return count;
}

Int multiplicity_product(const HighestWeight& lam, const HighestWeight& mu,
                         std::vector<Rational>* alphas,
                         std::vector<Rational>* betas) {
  require_branch_ranks(lam, mu);
  const int n = lam.rank();
  if (alphas) alphas->clear();
  if (betas) betas->clear();

  // Weight-diagram gate: lam_{i+1} <= mu_i <= lam_{i-1} with lam_0 := 0.
  for (int i = 1; i <= n - 1; ++i) {
    const Entry upper = (i == 1) ? 0 : lam.at(i - 1);
    if (mu.at(i) < lam.at(i + 1) || mu.at(i) > upper) return 0;
  }

  const Rational half(1, 2);
  std::vector<Rational> a(static_cast<std::size_t>(n));
  std::vector<Rational> b(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const Entry prev =
        (i == 1) ? 0 : std::min(lam.at(i - 1), mu.at(i - 1));
    a[static_cast<std::size_t>(i - 1)] = Rational(prev - i) + half;
    const Entry cur = (i == n) ? lam.at(n) : std::max(lam.at(i), mu.at(i));
    b[static_cast<std::size_t>(i - 1)] = Rational(cur - i) + half;
  }

  Int product = 1;
  for (int i = 0; i < n; ++i) {
    const Rational factor = a[static_cast<std::size_t>(i)] -
                            b[static_cast<std::size_t>(i)] + 1;
    if (denominator(factor) != 1) {
      throw ConsistencyError("multiplicity factor is not an integer");
    }
    product *= numerator(factor);
  }
  if (alphas) *alphas = std::move(a);
  if (betas) *betas = std::move(b);
  return product;
}

std::vector<BranchTerm> branch(const HighestWeight& lam) {
  const int n = lam.rank();
  if (n < 2) {
    throw DomainError("branching needs rank at least 2; sp(2) has no "
                      "symplectic subalgebra in the chain");
  }

  // Candidates live in the gate box mu_i in [lam_{i+1}, lam_{i-1}] (0 cap at
  // i = 1); ascending nested iteration emits terms in lex order.
  std::vector<BranchTerm> terms;
  std::vector<Entry> mu(static_cast<std::size_t>(n - 1));
  auto scan = [&](auto&& self, int i) -> void {
    if (i > n - 1) {
      for (std::size_t t = 1; t < mu.size(); ++t) {
        if (mu[t] > mu[t - 1]) return;  // not weakly decreasing
      }
      const HighestWeight candidate = HighestWeight::validate(mu);
      std::vector<Rational> alphas;
      std::vector<Rational> betas;
      const Int by_product =
          multiplicity_product(lam, candidate, &alphas, &betas);
      const Int by_count = multiplicity_c(lam, candidate);
      if (by_product != by_count) {
        throw ConsistencyError("multiplicity routes disagree at mu = " +
                               candidate.to_string() + ": product " +
                               by_product.str() + " vs count " +
                               by_count.str());
      }
      if (by_product > 0) {
        terms.push_back(BranchTerm{candidate, by_product, std::move(alphas),
                                   std::move(betas)});
      }
      return;
    }
    const Entry lo = lam.at(i + 1);
    const Entry hi = (i == 1) ? 0 : lam.at(i - 1);
    for (Entry v = lo; v <= hi; ++v) {
      mu[static_cast<std::size_t>(i - 1)] = v;
      self(self, i + 1);
    }
  };
  scan(scan, 1);
  return terms;
}

Int weyl_dim(const HighestWeight& lam) {
  const int n = lam.rank();
  // Convert to non-negative labels a_i = -lam_{n+1-i}, then run the product
  // formula with l_i = a_i + n - i + 1 against the rho-values m_i = n - i + 1.
  std::vector<Entry> l(static_cast<std::size_t>(n));
  std::vector<Entry> m(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const Entry a = -lam.at(n + 1 - i);
    l[static_cast<std::size_t>(i - 1)] = a + n - i + 1;
    m[static_cast<std::size_t>(i - 1)] = n - i + 1;
  }
  Int num = 1;
  Int den = 1;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      num *= Int(l[static_cast<std::size_t>(i)]) * l[static_cast<std::size_t>(i)] -
             Int(l[static_cast<std::size_t>(j)]) * l[static_cast<std::size_t>(j)];
      den *= Int(m[static_cast<std::size_t>(i)]) * m[static_cast<std::size_t>(i)] -
             Int(m[static_cast<std::size_t>(j)]) * m[static_cast<std::size_t>(j)];
    }
    num *= Int(l[static_cast<std::size_t>(i)]);
    den *= Int(m[static_cast<std::size_t>(i)]);
  }
  if (num % den != 0) {
    throw ConsistencyError("dimension product is not an integer");
  }
  return num / den;
}

std::map<Weight, Int> character(const HighestWeight& lam, const Int& guard) {
  std::map<Weight, Int> result;
  for (const auto& p : enumerate_patterns(lam, guard)) {
    result[weight_of(p)] += 1;
  }
  return result;
}

namespace {

// Laurent polynomials in n variables: exponent vector -> integer
// coefficient, keyed in lexicographic order so rbegin() is the leading term.
using Poly = std::map<std::vector<Entry>, Int>;

int permutation_sign(const std::vector<std::size_t>& perm) {
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = i + 1; j < perm.size(); ++j) {
      if (perm[i] > perm[j]) sign = -sign;
    }
  }
  return sign;
}

// Alternating sum over the hyperoctahedral group: sum of sgn(w) x^{w(exps)}
// with w running over all coordinate permutations and sign flips, and
// sgn(w) = sgn(permutation) * (-1)^{#flips}.
Poly alternant(const std::vector<Entry>& exps) {
  const std::size_t n = exps.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  Poly result;
  do {
    const int perm_sign = permutation_sign(perm);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<Entry> mono(n);
      int sign = perm_sign;
      for (std::size_t t = 0; t < n; ++t) {
        Entry v = exps[perm[t]];
        if ((mask >> t) & 1u) {
          v = -v;
          sign = -sign;
        }
        mono[t] = v;
      }
      auto& coeff = result[mono];
      coeff += sign;
      if (coeff == 0) result.erase(mono);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return result;
}

// Exact division by leading-term peeling under lex order. The divisor's
// leading coefficient is +1 (the identity element of the alternant), and the
// subtraction cancels the dividend's leading term each round, so the leading
// monomial strictly decreases and the loop terminates.
Poly divide_exact(Poly dividend, const Poly& divisor) {
  if (divisor.empty()) throw ConsistencyError("division by the zero alternant");
  const auto lead_div = std::prev(divisor.end());
  if (lead_div->second != 1) {
    throw ConsistencyError("alternant leading coefficient is not 1");
  }
  const std::size_t n = lead_div->first.size();
  Poly quotient;
  long steps = 0;
  while (!dividend.empty()) {
    if (++steps > 10000000L) {
      throw ConsistencyError("character division failed to terminate");
    }
    const auto lead = std::prev(dividend.end());
    std::vector<Entry> shift(n);
    for (std::size_t t = 0; t < n; ++t) {
      shift[t] = lead->first[t] - lead_div->first[t];
    }
    const Int coeff = lead->second;
    quotient[shift] += coeff;
    for (const auto& [exp, c] : divisor) {
      std::vector<Entry> target(n);
      for (std::size_t t = 0; t < n; ++t) target[t] = exp[t] + shift[t];
      auto& v = dividend[target];
      v -= coeff * c;
      if (v == 0) dividend.erase(target);
    }
  }
  for (auto it = quotient.begin(); it != quotient.end();) {
    it = (it->second == 0) ? quotient.erase(it) : std::next(it);
  }
  return quotient;
}

}  // namespace

std::map<Weight, Int> character_determinantal(const HighestWeight& lam) {
  const int n = lam.rank();
  if (n > 12) {
    throw DomainError("alternating-sum character oracle is factorial in the "
                      "rank; refusing n > 12");
  }
  // Same conversion as weyl_dim; the character is invariant under the
  // relabeling (it is a hyperoctahedral group element), so the resulting
  // weight map matches the pattern-side convention directly.
  std::vector<Entry> num_exp(static_cast<std::size_t>(n));
  std::vector<Entry> den_exp(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const Entry a = -lam.at(n + 1 - i);
    num_exp[static_cast<std::size_t>(i - 1)] = a + n - i + 1;
    den_exp[static_cast<std::size_t>(i - 1)] = n - i + 1;
  }
  return divide_exact(alternant(num_exp), alternant(den_exp));
}

}  // namespace sympgt
