#include "sympgt/defining.hpp"

#include <string>

#include "sympgt/errors.hpp"

namespace sympgt {

DefiningMatrix::DefiningMatrix(int n) : n_(n) {
  if (n < 1) throw StructuralError("rank must be at least 1");
  a_.assign(static_cast<std::size_t>(2 * n) * static_cast<std::size_t>(2 * n),
            Rational(0));
}

int DefiningMatrix::offset(int i) const {
  if (i >= -n_ && i <= -1) return i + n_;
  if (i >= 1 && i <= n_) return n_ + i - 1;
  throw StructuralError("signed index " + std::to_string(i) +
                        " outside {-" + std::to_string(n_) + "..-1, 1.." +
                        std::to_string(n_) + "}");
}

bool DefiningMatrix::is_zero() const {
  for (const auto& v : a_) {
    if (v != 0) return false;
  }
  return true;
}

bool DefiningMatrix::is_symplectic() const {
  for (int i = -n_; i <= n_; ++i) {
    if (i == 0) continue;
    for (int j = -n_; j <= n_; ++j) {
      if (j == 0) continue;
      if (at(-j, -i) != Rational(-theta(i, j)) * at(i, j)) return false;
    }
  }
  return true;
}

DefiningMatrix& DefiningMatrix::operator+=(const DefiningMatrix& o) {
  if (n_ != o.n_) throw StructuralError("matrix sizes differ");
  for (std::size_t t = 0; t < a_.size(); ++t) a_[t] += o.a_[t];
  return *this;
}

DefiningMatrix& DefiningMatrix::operator-=(const DefiningMatrix& o) {
  if (n_ != o.n_) throw StructuralError("matrix sizes differ");
  for (std::size_t t = 0; t < a_.size(); ++t) a_[t] -= o.a_[t];
  return *this;
}

DefiningMatrix& DefiningMatrix::operator*=(const Rational& s) {
  for (auto& v : a_) v *= s;
  return *this;
}

DefiningMatrix DefiningMatrix::multiply(const DefiningMatrix& o) const {
  if (n_ != o.n_) throw StructuralError("matrix sizes differ");
  const int size2n = 2 * n_;
  DefiningMatrix result(n_);
  for (int r = 0; r < size2n; ++r) {
    for (int c = 0; c < size2n; ++c) {
      Rational sum(0);
      for (int m = 0; m < size2n; ++m) {
        const auto& left = a_[static_cast<std::size_t>(r * size2n + m)];
        if (left == 0) continue;
        sum += left * o.a_[static_cast<std::size_t>(m * size2n + c)];
      }
      result.a_[static_cast<std::size_t>(r * size2n + c)] = sum;
    }
  }
  return result;
}

DefiningMatrix DefiningMatrix::commutator(const DefiningMatrix& o) const {
  DefiningMatrix result = multiply(o);
  result -= o.multiply(*this);
  return result;
}

DefiningMatrix defining_rep(int i, int j, int n) {
  DefiningMatrix m(n);
  m.at(i, j) += 1;
  m.at(-j, -i) += -theta(i, j);  // coincides with (i, j) when j = -i
  return m;
}

std::vector<std::pair<int, int>> canonical_pairs(int n) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<std::size_t>(n) * (2 * n + 1));
  for (int i = -n; i <= n; ++i) {
    if (i == 0) continue;
    for (int j = -n; j <= n; ++j) {
      if (j == 0) continue;
      if (i + j > 0 || j == -i) pairs.emplace_back(i, j);
    }
  }
  return pairs;
}

}  // namespace sympgt
