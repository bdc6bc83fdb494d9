#include "sympgt/weights.hpp"

#include <sstream>

#include "sympgt/errors.hpp"

namespace sympgt {

HighestWeight HighestWeight::validate(std::vector<Entry> entries) {
  if (entries.empty()) {
    throw ValidationError("highest weight needs at least one entry");
  }
  for (std::size_t idx = 0; idx < entries.size(); ++idx) {
    const std::string where = "entry " + std::to_string(idx + 1);
    if (entries[idx] > 0) {
      throw ValidationError(where + " positive: labels must satisfy 0 >= lambda_1 >= ... >= lambda_n");
    }
    if (idx > 0 && entries[idx] > entries[idx - 1]) {
      throw ValidationError(where + " increases: labels must be weakly decreasing");
    }
  }
  return HighestWeight(std::move(entries));
}

HighestWeight HighestWeight::from_nonnegative(const std::vector<Entry>& labels) {
  std::vector<Entry> entries(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    entries[i] = -labels[labels.size() - 1 - i];
  }
  return validate(std::move(entries));
}

std::string HighestWeight::to_string() const {
  return weight_to_string(entries_);
}

std::string weight_to_string(const Weight& w) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out << ',';
    out << w[i];
  }
  out << ')';
  return out.str();
}

}  // namespace sympgt
