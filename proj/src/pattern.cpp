#include "sympgt/pattern.hpp"

#include <algorithm>
#include <sstream>

#include "sympgt/errors.hpp"

namespace sympgt {

Pattern::Pattern(std::vector<std::vector<Entry>> unprimed,
                 std::vector<std::vector<Entry>> primed)
    : unprimed_(std::move(unprimed)), primed_(std::move(primed)) {
  if (unprimed_.empty() || unprimed_.size() != primed_.size()) {
    throw StructuralError("pattern needs matching unprimed/primed row sets");
  }
  for (std::size_t k = 0; k < unprimed_.size(); ++k) {
    if (unprimed_[k].size() != k + 1 || primed_[k].size() != k + 1) {
      throw StructuralError("pattern row " + std::to_string(k + 1) +
                            " has wrong length");
    }
  }
}

std::vector<Entry> Pattern::flatten_key() const {
  const int n = rank();
  std::vector<Entry> key;
  key.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  // Primed row n first, then unprimed/primed pairs going down. The fixed top
  // unprimed row carries no information and is excluded.
  for (int i = 1; i <= n; ++i) key.push_back(primed(n, i));
  for (int k = n - 1; k >= 1; --k) {
    for (int i = 1; i <= k; ++i) key.push_back(unprimed(k, i));
    for (int i = 1; i <= k; ++i) key.push_back(primed(k, i));
  }
  return key;
}

std::strong_ordering Pattern::operator<=>(const Pattern& o) const {
  return flatten_key() <=> o.flatten_key();
}

std::string Pattern::to_string() const {
  std::ostringstream out;
  for (int k = rank(); k >= 1; --k) {
    for (int i = 1; i <= k; ++i) {
      if (i > 1) out << ' ';
      out << unprimed(k, i);
    }
    out << " / ";
    for (int i = 1; i <= k; ++i) {
      if (i > 1) out << ' ';
      out << primed(k, i);
    }
    if (k > 1) out << " / ";
  }
  return out.str();
}

std::vector<Pattern> canonical_order(std::vector<Pattern> patterns) {
  if (!patterns.empty()) {
    const auto top = patterns.front().top_row();
    for (const auto& p : patterns) {
      if (p.top_row() != top) {
        throw StructuralError("canonical order is defined per highest weight; "
                              "mixed top rows");
      }
    }
  }
  std::sort(patterns.begin(), patterns.end());
  return patterns;
}

}  // namespace sympgt
