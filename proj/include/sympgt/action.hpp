#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sympgt/pattern.hpp"
#include "sympgt/patterns.hpp"
#include "sympgt/rational.hpp"
#include "sympgt/sparse.hpp"
#include "sympgt/weights.hpp"

namespace sympgt {

// Coefficients of the generator action on the pattern basis. All coefficient
// values are evaluated at the source pattern; whether a term survives is
// decided solely by the validity of its target array.
//
//   A_{ki} = prod_{a != i} 1 / (l'_{ka} - l'_{ki})
//   B_{ki} = 4 A_{ki} l'_{ki} prod_a (l_{ka} - l'_{ki})
//                            prod_a (l_{k-1,a} - l'_{ki})
//   C_{ki} = 1 / (2 l_{k-1,i}) prod_{a != i} 1 / (l_{k-1,i}^2 - l_{k-1,a}^2)
//   D_{kijm} = A_{ki} A_{k-1,m} C_{kj}
//              * prod_{a != i} (l_{k-1,j} - l'_{ka}) (l_{k-1,j} + l'_{ka} + 1)
//              * prod_{a != m} (l_{k-1,j} - l'_{k-1,a}) (l_{k-1,j} + l'_{k-1,a} + 1)
//
// Every denominator is nonzero on a valid pattern: primed shifted labels are
// strictly decreasing along a row, l_{k-1,i} <= -i < 0, and the squares of a
// strictly decreasing negative row are distinct. Evaluation asserts this.
Rational coeff_A(const Pattern& p, int k, int i);
Rational coeff_B(const Pattern& p, int k, int i);
Rational coeff_C(const Pattern& p, int k, int i);
Rational coeff_D(const Pattern& p, int k, int i, int j, int m);

using ActionTerms = std::vector<std::pair<Pattern, Rational>>;

// F_{k,-k}: terms (Lambda + delta'_{ki}, A_{ki}) over i = 1..k.
ActionTerms apply_raise(const Pattern& p, int k, const HighestWeight& lam);

// F_{-k,k}: terms (Lambda - delta'_{ki}, B_{ki}); B can vanish on a valid
// target through a zero factor, and vanished terms are dropped.
ActionTerms apply_lower(const Pattern& p, int k, const HighestWeight& lam);

// F_{k-1,-k}, k >= 2: C-terms (Lambda - delta_{k-1,i}) over i = 1..k-1 plus
// D-terms (Lambda + delta'_{ki} + delta_{k-1,j} + delta'_{k-1,m}) over
// i = 1..k, j,m = 1..k-1. Terms on one target are summed. k = 1 throws
// DomainError.
ActionTerms apply_mixed(const Pattern& p, int k, const HighestWeight& lam);

// Identifies an algebra element F[i,j] by its signed index pair. The four
// direct kinds -- F[k,k], F[k,-k], F[-k,k] for k = 1..n and F[k-1,-k] for
// k = 2..n -- have closed-form actions; every other valid pair is General
// and is reached through bracket closure instead.
struct GeneratorId {
  int i = 0;
  int j = 0;

  enum class Kind { Diagonal, Raise, Lower, Mixed, General };

  // Classifies (i, j) within rank n; throws StructuralError when either
  // index is 0 or out of range. level() is k in the formulas above and is
  // defined only for the four direct kinds.
  Kind classify(int n) const;
  int level() const;

  std::string name() const;  // "F[i,j]"
  static GeneratorId parse(const std::string& text);
};

// Diagonal matrix of component k of weight_of over the canonical basis.
SparseOperator diag_matrix(const HighestWeight& lam, int k,
                           const Int& guard = kDefaultGuard);

// Assembles the sparse matrix of one direct-kind generator: column p holds
// the action terms on pattern p. General pairs throw StructuralError (they
// have no closed-form action here). Columns are independent; jobs > 1
// splits them across threads with a deterministic merge.
SparseOperator build_generator_matrix(const HighestWeight& lam,
                                      const GeneratorId& gen,
                                      const Int& guard = kDefaultGuard,
                                      int jobs = 1);

}  // namespace sympgt
