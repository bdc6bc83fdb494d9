#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sympgt {

using Entry = std::int64_t;

// Label of an irreducible sp(2n) representation: n integers with
// 0 >= lambda_1 >= lambda_2 >= ... >= lambda_n. The non-positive convention
// is canonical everywhere inside the library; the common non-negative
// convention enters only through from_nonnegative().
class HighestWeight {
 public:
  // Validates the chain; throws ValidationError naming the offending entry
  // (1-based) on a positive value or an increase.
  static HighestWeight validate(std::vector<Entry> entries);

  // Conversion from non-negative labels a_1 >= ... >= a_n >= 0 via
  // lambda_i = -a_{n+1-i}.
  static HighestWeight from_nonnegative(const std::vector<Entry>& labels);

  int rank() const { return static_cast<int>(entries_.size()); }
  const std::vector<Entry>& entries() const { return entries_; }
  Entry at(int i) const { return entries_[static_cast<size_t>(i - 1)]; }  // 1-based

  bool operator==(const HighestWeight& o) const = default;

  std::string to_string() const;

 private:
  explicit HighestWeight(std::vector<Entry> e) : entries_(std::move(e)) {}
  std::vector<Entry> entries_;
};

// Simultaneous eigenvalues of F_11, ..., F_nn on a basis vector.
using Weight = std::vector<Entry>;

std::string weight_to_string(const Weight& w);

}  // namespace sympgt
