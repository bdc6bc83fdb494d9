#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "sympgt/weights.hpp"

namespace sympgt {

// Interlacing array indexing one basis vector. Two rows per level k = 1..n:
// an unprimed row lambda_{k,1..k} and a primed row lambda'_{k,1..k}. The top
// unprimed row is the highest weight itself; reading top-down the rows are
// lambda_n, lambda'_n, lambda_{n-1}, lambda'_{n-1}, ..., lambda_1, lambda'_1.
//
// Validity means both chains hold at every level:
//   chain 1 (k = 1..n):
//     0 >= l'_{k1} >= l_{k1} >= l'_{k2} >= l_{k2} >= ... >= l'_{kk} >= l_{kk}
//   chain 2 (k = 2..n):
//     0 >= l'_{k1} >= l_{k-1,1} >= l'_{k2} >= ... >= l_{k-1,k-1} >= l'_{kk}
class Pattern {
 public:
  Pattern(std::vector<std::vector<Entry>> unprimed,
          std::vector<std::vector<Entry>> primed);

  int rank() const { return static_cast<int>(unprimed_.size()); }

  // 1-based accessors matching the usual double-index notation.
  Entry unprimed(int k, int i) const {
    return unprimed_[static_cast<size_t>(k - 1)][static_cast<size_t>(i - 1)];
  }
  Entry primed(int k, int i) const {
    return primed_[static_cast<size_t>(k - 1)][static_cast<size_t>(i - 1)];
  }

  // Shifted labels l_{ki} = lambda_{ki} - i and l'_{ki} = lambda'_{ki} - i;
  // strictly decreasing along each row of a valid pattern.
  Entry shifted_unprimed(int k, int i) const { return unprimed(k, i) - i; }
  Entry shifted_primed(int k, int i) const { return primed(k, i) - i; }

  const std::vector<std::vector<Entry>>& unprimed_rows() const { return unprimed_; }
  const std::vector<std::vector<Entry>>& primed_rows() const { return primed_; }

  std::vector<Entry> top_row() const { return unprimed_.back(); }

  // Flattened comparison key (lambda'_n, lambda_{n-1}, lambda'_{n-1}, ...,
  // lambda_1, lambda'_1). The fixed top row is excluded. Ascending
  // lexicographic order on this key is the canonical basis order.
  std::vector<Entry> flatten_key() const;

  bool operator==(const Pattern& o) const = default;
  std::strong_ordering operator<=>(const Pattern& o) const;

  // Rows top-down, entries space-separated, rows joined by " / ".
  std::string to_string() const;

 private:
  friend class PatternBuilder;
  std::vector<std::vector<Entry>> unprimed_;  // unprimed_[k-1] has length k
  std::vector<std::vector<Entry>> primed_;    // primed_[k-1] has length k
};

// One-entry shift: the arrays Lambda +/- delta_{ki} and Lambda +/- delta'_{ki}
// replace a single entry by its value +/- 1.
struct PatternDelta {
  bool primed = false;
  int level = 0;     // k, 1-based
  int position = 0;  // i, 1-based, requires 1 <= i <= k <= n
  int sign = +1;     // +1 or -1
};

// Sorts into canonical order. All patterns must share one top row;
// otherwise throws StructuralError.
std::vector<Pattern> canonical_order(std::vector<Pattern> patterns);

}  // namespace sympgt
