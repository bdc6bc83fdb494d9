#pragma once

#include <vector>

#include "sympgt/rational.hpp"

namespace sympgt {

// sgn(i) * sgn(j) for nonzero signed indices.
inline int theta(int i, int j) { return (i > 0 ? 1 : -1) * (j > 0 ? 1 : -1); }

// Dense 2n x 2n rational matrix with rows and columns indexed by
// -n, ..., -1, 1, ..., n (index 0 skipped). Used for the defining
// representation, where structure constants are solved exactly.
class DefiningMatrix {
 public:
  explicit DefiningMatrix(int n);

  int n() const { return n_; }
  int size() const { return 2 * n_; }

  // Signed index -> storage offset in [0, 2n). Throws StructuralError on 0
  // or out-of-range values.
  int offset(int i) const;

  Rational& at(int i, int j) { return a_[flat(i, j)]; }
  const Rational& at(int i, int j) const { return a_[flat(i, j)]; }

  // Row-major flattening over storage offsets, for span arithmetic.
  const std::vector<Rational>& flattened() const { return a_; }

  bool is_zero() const;

  // Membership in sp(2n): X_{-j,-i} = -theta_ij X_ij entrywise.
  bool is_symplectic() const;

  DefiningMatrix& operator+=(const DefiningMatrix& o);
  DefiningMatrix& operator-=(const DefiningMatrix& o);
  DefiningMatrix& operator*=(const Rational& s);
  friend DefiningMatrix operator*(const Rational& s, DefiningMatrix m) {
    m *= s;
    return m;
  }

  DefiningMatrix multiply(const DefiningMatrix& o) const;
  DefiningMatrix commutator(const DefiningMatrix& o) const;

  bool operator==(const DefiningMatrix& o) const = default;

 private:
  int flat(int i, int j) const { return offset(i) * 2 * n_ + offset(j); }
  int n_;
  std::vector<Rational> a_;
};

// The element F_ij = E_ij - theta_ij E_{-j,-i} in the defining
// representation. For j = -i the two contributions land on one cell and add,
// giving 2 E_{i,-i}.
DefiningMatrix defining_rep(int i, int j, int n);

// Representatives of the symmetry classes {F_ij, F_{-j,-i}}: the pairs with
// i + j > 0 together with every (i, -i). Deterministic order; exactly
// n(2n+1) pairs, and the corresponding F_ij form a basis of sp(2n).
std::vector<std::pair<int, int>> canonical_pairs(int n);

}  // namespace sympgt
