#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "sympgt/action.hpp"
#include "sympgt/defining.hpp"
#include "sympgt/sparse.hpp"

namespace sympgt {

// An algebra element carried in two representations at once: its image in
// the 2n-dimensional defining representation and its image on the pattern
// basis. Brackets are taken componentwise, so the pair stays consistent.
struct AlgebraElement {
  DefiningMatrix defining;
  SparseOperator big;
};

AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y);

// Incremental exact row space with combination tracking: each inserted
// vector that enlarges the span is remembered, and solve() expresses a
// target in terms of exactly those vectors.
class RationalSpan {
 public:
  // Returns true when v was independent of the current span (and is now
  // member number size()-1).
  bool insert(const std::vector<Rational>& v);
  std::optional<std::vector<Rational>> solve(const std::vector<Rational>& v) const;
  std::size_t dim() const { return rows_.size(); }

 private:
  struct Row {
    std::size_t pivot;
    std::vector<Rational> vec;
    std::vector<Rational> combo;  // coordinates over inserted members
  };
  std::size_t reduce(std::vector<Rational>& residual,
                     std::vector<Rational>& combo) const;
  std::vector<Row> rows_;
};

// Everything the bracket closure produces for one highest weight: the full
// family of operators on the pattern basis, indexed by canonical pairs.
class ClosedAlgebra {
 public:
  int n() const { return n_; }
  SparseOperator::Index dimension() const { return dim_; }
  const std::vector<std::pair<int, int>>& canonical() const { return canonical_; }
  std::size_t span_dim() const { return span_dim_; }

  // Operator for any signed pair; non-canonical pairs are reconstructed via
  // F_{-j,-i} = -theta_ij F_ij.
  SparseOperator operator_for(int i, int j) const;

 private:
  friend ClosedAlgebra close_algebra(const HighestWeight&, const Int&, int);
  int n_ = 0;
  SparseOperator::Index dim_ = 0;
  std::size_t span_dim_ = 0;
  std::vector<std::pair<int, int>> canonical_;
  std::map<std::pair<int, int>, SparseOperator> ops_;
};

// Recovers every operator from the 3n-1 generators by iterated brackets.
// Defining images drive the search: an element is retained only when it
// enlarges the defining-image span, and once the span reaches n(2n+1) each
// canonical F_ij is expressed in the retained set by an exact solve and the
// same coordinates are applied to the pattern-basis images. Faithfulness of
// the defining representation makes those images correct.
ClosedAlgebra close_algebra(const HighestWeight& lam,
                            const Int& guard = kDefaultGuard, int jobs = 1);

// [F_ij, F_kl] expanded in the F basis directly from the index algebra:
//   delta_kj F_il - delta_il F_kj - theta_{k,-j} delta_{i,-k} F_{-j,l}
//   + theta_{i,-l} delta_{-l,j} F_{k,-i}
// Used as an independent cross-check against brackets computed in the
// defining representation.
std::map<std::pair<int, int>, Rational> bracket_in_basis(int i, int j, int k,
                                                         int l);

// Confirms that for all canonical pairs the defining-representation bracket
// expands exactly as bracket_in_basis predicts.
bool verify_structure_constants(int n);

struct RelationFailure {
  std::pair<int, int> left;
  std::pair<int, int> right;
};

struct RelationReport {
  std::size_t pairs_checked = 0;
  std::vector<RelationFailure> failures;
  bool structure_constants_ok = false;
  bool ok() const { return failures.empty() && structure_constants_ok; }
};

// For every unordered pair of canonical basis elements, checks that the
// commutator of the pattern-basis operators equals the operator of the
// bracket expansion solved in the defining representation. Failures are
// data in the report, not exceptions.
RelationReport verify_relations(const ClosedAlgebra& alg, int jobs = 1);

// Sum over all signed pairs of F_ij F_ji on the pattern basis. Must be an
// exact scalar multiple of the identity; returns the matrix and the scalar.
// A non-scalar result throws ConsistencyError.
std::pair<SparseOperator, Rational> casimir(const ClosedAlgebra& alg);

// Same double sum evaluated in the defining representation itself, as an
// independently constructed comparison point. Acts by (4n + 2) / (2n) * ...
// -- the value is not assumed here; scalarity is asserted and the scalar
// returned.
Rational casimir_defining_scalar(int n);

// Index (canonical order) of the unique basis vector of weight lam
// annihilated by every F_ij with i < j. Asserts the weight-lam subspace is
// one-dimensional and equals the all-truncations pattern; violations throw
// ConsistencyError.
SparseOperator::Index highest_vector(const ClosedAlgebra& alg,
                                     const HighestWeight& lam);

}  // namespace sympgt
