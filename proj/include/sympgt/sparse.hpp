#pragma once

#include <cstdint>
#include <map>
#include <utility>

#include "sympgt/rational.hpp"

namespace sympgt {

// Exact sparse matrix over the rationals, indexed by positions in the
// canonical pattern order. Zero entries are never stored.
class SparseOperator {
 public:
  using Index = std::int64_t;
  using Key = std::pair<Index, Index>;  // (row, col)

  SparseOperator() = default;
  explicit SparseOperator(Index dimension) : dim_(dimension) {}

  static SparseOperator identity(Index dimension);

  Index dimension() const { return dim_; }
  const std::map<Key, Rational>& entries() const { return entries_; }
  std::size_t nnz() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }

  Rational at(Index row, Index col) const;

  // Accumulates; erases the cell when the sum cancels to zero.
  void add(Index row, Index col, const Rational& value);
  void set(Index row, Index col, const Rational& value);

  SparseOperator& operator+=(const SparseOperator& o);
  SparseOperator& operator-=(const SparseOperator& o);
  SparseOperator& operator*=(const Rational& s);

  friend SparseOperator operator+(SparseOperator a, const SparseOperator& b) {
    a += b;
    return a;
  }
  friend SparseOperator operator-(SparseOperator a, const SparseOperator& b) {
    a -= b;
    return a;
  }
  friend SparseOperator operator*(const Rational& s, SparseOperator a) {
    a *= s;
    return a;
  }

  SparseOperator multiply(const SparseOperator& o) const;
  SparseOperator commutator(const SparseOperator& o) const;

  // Column col as (row, value) pairs: the image of the col-th basis vector.
  std::map<Index, Rational> column(Index col) const;

  Rational trace() const;

  // Scalar s with *this == s * identity, when such s exists.
  bool is_scalar(Rational& scalar_out) const;

  bool operator==(const SparseOperator& o) const = default;

 private:
  Index dim_ = 0;
  std::map<Key, Rational> entries_;
};

}  // namespace sympgt
