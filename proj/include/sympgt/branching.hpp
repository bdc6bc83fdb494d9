#pragma once

#include <map>
#include <vector>

#include "sympgt/patterns.hpp"
#include "sympgt/rational.hpp"
#include "sympgt/weights.hpp"

namespace sympgt {

// One restriction summand: a rank n-1 highest weight, its multiplicity, and
// the half-integer interval data (as exact rationals) behind the product
// formula for that multiplicity.
struct BranchTerm {
  HighestWeight mu;
  Int multiplicity;
  std::vector<Rational> alphas;
  std::vector<Rational> betas;
};

// Multiplicity of mu in the restriction to the rank n-1 subalgebra, counted
// directly: the number of interleaving n-tuples nu with
//   0 >= nu_1 >= lam_1 >= nu_2 >= ... >= nu_n >= lam_n  and
//   0 >= nu_1 >= mu_1 >= nu_2 >= ... >= mu_{n-1} >= nu_n.
// Given lam and mu the nu_i decouple, so the count is a product of interval
// lengths [max(lam_i, mu_i), min(lam_{i-1}, mu_{i-1})] with sentinels
// lam_0 = mu_0 = 0 and no mu bound on nu_n's lower end.
Int multiplicity_c(const HighestWeight& lam, const HighestWeight& mu);

// The same multiplicity via the closed product prod_i (alpha_i - beta_i + 1),
// where alpha_1 = -1/2, alpha_i = min(lam_{i-1}, mu_{i-1}) - i + 1/2,
// beta_i = max(lam_i, mu_i) - i + 1/2 for i < n and beta_n = lam_n - n + 1/2.
// Zero whenever the betweenness condition lam_{i+1} <= mu_i <= lam_{i-1}
// fails. The interval endpoints are reported through the out-parameters.
Int multiplicity_product(const HighestWeight& lam, const HighestWeight& mu,
                         std::vector<Rational>* alphas = nullptr,
                         std::vector<Rational>* betas = nullptr);

// All mu with nonzero multiplicity, ascending in lex order on the weight
// entries. Both multiplicity routes are evaluated and must agree;
// disagreement throws ConsistencyError. Rank 1 throws DomainError (nothing
// below sp(2) in the chain).
std::vector<BranchTerm> branch(const HighestWeight& lam);

// Product formula for the dimension of the irreducible with highest weight
// lam (always a positive integer; exact arithmetic throughout).
Int weyl_dim(const HighestWeight& lam);

// Formal character as a map from weights to multiplicities, computed by
// enumerating the pattern basis.
std::map<Weight, Int> character(const HighestWeight& lam,
                                const Int& guard = kDefaultGuard);

// Independent character: the alternating-sum quotient over the signed
// permutation group, evaluated as an exact Laurent-polynomial division.
// Different failure modes from character() by construction.
std::map<Weight, Int> character_determinantal(const HighestWeight& lam);

}  // namespace sympgt
