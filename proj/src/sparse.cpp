#include "sympgt/sparse.hpp"

#include <utility>
#include <vector>

#include "sympgt/errors.hpp"

namespace sympgt {

namespace {

void require_same_dimension(const SparseOperator& a, const SparseOperator& b) {
  if (a.dimension() != b.dimension()) {
    throw StructuralError("operator dimensions differ");
  }
}

void require_in_range(const SparseOperator& m, SparseOperator::Index row,
                      SparseOperator::Index col) {
  if (row < 0 || col < 0 || row >= m.dimension() || col >= m.dimension()) {
    throw StructuralError("entry index out of range");
  }
}

}  // namespace

SparseOperator SparseOperator::identity(Index dimension) {
  SparseOperator m(dimension);
  for (Index i = 0; i < dimension; ++i) m.set(i, i, Rational(1));
  return m;
}

Rational SparseOperator::at(Index row, Index col) const {
  require_in_range(*this, row, col);
  const auto it = entries_.find({row, col});
  return it == entries_.end() ? Rational(0) : it->second;
}

void SparseOperator::add(Index row, Index col, const Rational& value) {
  require_in_range(*this, row, col);
  if (value == 0) return;
  auto [it, inserted] = entries_.emplace(Key{row, col}, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) entries_.erase(it);
  }
}

void SparseOperator::set(Index row, Index col, const Rational& value) {
  require_in_range(*this, row, col);
  if (value == 0) {
    entries_.erase({row, col});
  } else {
    entries_[{row, col}] = value;
  }
}

SparseOperator& SparseOperator::operator+=(const SparseOperator& o) {
  require_same_dimension(*this, o);
  for (const auto& [key, value] : o.entries_) add(key.first, key.second, value);
  return *this;
}

SparseOperator& SparseOperator::operator-=(const SparseOperator& o) {
  require_same_dimension(*this, o);
  for (const auto& [key, value] : o.entries_) add(key.first, key.second, -value);
  return *this;
}

SparseOperator& SparseOperator::operator*=(const Rational& s) {
  if (s == 0) {
    entries_.clear();
    return *this;
  }
  for (auto& [key, value] : entries_) value *= s;
  return *this;
}

SparseOperator SparseOperator::multiply(const SparseOperator& o) const {
  require_same_dimension(*this, o);
  // Group our entries by column once so each entry of o is matched against
  // exactly the rows that can meet it.
  std::map<Index, std::vector<std::pair<Index, Rational>>> by_col;
  for (const auto& [key, value] : entries_) {
    by_col[key.second].emplace_back(key.first, value);
  }
  SparseOperator result(dim_);
  for (const auto& [key, value] : o.entries_) {
    const auto mid = by_col.find(key.first);
    if (mid == by_col.end()) continue;
    for (const auto& [row, left] : mid->second) {
      result.add(row, key.second, left * value);
    }
  }
  return result;
}

SparseOperator SparseOperator::commutator(const SparseOperator& o) const {
  SparseOperator result = multiply(o);
  result -= o.multiply(*this);
  return result;
}

std::map<SparseOperator::Index, Rational> SparseOperator::column(
    Index col) const {
  require_in_range(*this, 0, col);
  std::map<Index, Rational> result;
  for (const auto& [key, value] : entries_) {
    if (key.second == col) result.emplace(key.first, value);
  }
  return result;
}

Rational SparseOperator::trace() const {
  Rational sum(0);
  for (const auto& [key, value] : entries_) {
    if (key.first == key.second) sum += value;
  }
  return sum;
}

bool SparseOperator::is_scalar(Rational& scalar_out) const {
  for (const auto& [key, value] : entries_) {
    if (key.first != key.second) return false;
  }
  const Rational candidate = dim_ > 0 ? at(0, 0) : Rational(0);
  for (Index i = 0; i < dim_; ++i) {
    if (at(i, i) != candidate) return false;
  }
  scalar_out = candidate;
  return true;
}

}  // namespace sympgt
