#include "sympgt/patterns.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "sympgt/errors.hpp"

namespace sympgt {

bool validate_pattern(const Pattern& p, const HighestWeight& lam) {
  const int n = lam.rank();
  if (p.rank() != n) {
    throw StructuralError("pattern rank does not match highest weight rank");
  }
  if (p.top_row() != lam.entries()) return false;

  for (int k = 1; k <= n; ++k) {
    // Chain 1: 0 >= l'_{k1} >= l_{k1} >= l'_{k2} >= ... >= l'_{kk} >= l_{kk}.
    if (p.primed(k, 1) > 0) return false;
    for (int i = 1; i <= k; ++i) {
      if (p.primed(k, i) < p.unprimed(k, i)) return false;
      if (i < k && p.unprimed(k, i) < p.primed(k, i + 1)) return false;
    }
    // Chain 2: 0 >= l'_{k1} >= l_{k-1,1} >= l'_{k2} >= ... >= l_{k-1,k-1} >= l'_{kk}.
    if (k >= 2) {
      for (int i = 1; i <= k - 1; ++i) {
        if (p.primed(k, i) < p.unprimed(k - 1, i)) return false;
        if (p.unprimed(k - 1, i) < p.primed(k, i + 1)) return false;
      }
    }
  }
  return true;
}

namespace {

// Number of primed rows admissible between unprimed row `upper` (level k) and
// unprimed row `lower` (level k-1): the primed entries decouple into
// independent intervals once both neighbors are fixed.
Int primed_choices(const std::vector<Entry>& upper,
                   const std::vector<Entry>& lower) {
  const int k = static_cast<int>(upper.size());
  Int total = 1;
  for (int i = 1; i <= k; ++i) {
    Entry hi = (i == 1) ? 0 : upper[static_cast<std::size_t>(i - 2)];
    Entry lo = upper[static_cast<std::size_t>(i - 1)];
    if (i >= 2) hi = std::min(hi, lower[static_cast<std::size_t>(i - 2)]);
    if (i <= k - 1) lo = std::max(lo, lower[static_cast<std::size_t>(i - 1)]);
    if (hi < lo) return 0;
    total *= Int(hi - lo + 1);
  }
  return total;
}

Int count_below(const std::vector<Entry>& row,
                std::map<std::vector<Entry>, Int>& memo) {
  const int k = static_cast<int>(row.size());
  if (k == 1) return Int(1 - row[0]);  // primed entry ranges over [row_1, 0]
  const auto found = memo.find(row);
  if (found != memo.end()) return found->second;

  // Sum over the next unprimed row mu of (#primed rows between) * (count
  // below mu). mu_i is confined to [row_{i+1}, row_{i-1}] (0 cap for i = 1);
  // choices incompatible with every primed row contribute a zero factor.
  Int total = 0;
  std::vector<Entry> mu(static_cast<std::size_t>(k - 1));
  auto fill = [&](auto&& self, std::size_t idx) -> void {
    if (idx == mu.size()) {
      const Int ways = primed_choices(row, mu);
      if (ways != 0) total += ways * count_below(mu, memo);
      return;
    }
    const Entry lo = row[idx + 1];
    const Entry hi = (idx == 0) ? 0 : row[idx - 1];
    for (Entry v = lo; v <= hi; ++v) {
      mu[idx] = v;
      self(self, idx + 1);
    }
  };
  fill(fill, 0);
  memo.emplace(row, total);
  return total;
}

}  // namespace

Int count_patterns(const HighestWeight& lam) {
  std::map<std::vector<Entry>, Int> memo;
  return count_below(lam.entries(), memo);
}

namespace {

struct Enumerator {
  int n;
  std::vector<std::vector<Entry>> unprimed;
  std::vector<std::vector<Entry>> primed;
  std::vector<Pattern>* out;

  // Fill primed row k entry by entry (ascending), then descend to the next
  // unprimed row. Ascending iteration at every slot makes the emission order
  // exactly the canonical (flatten_key-lexicographic) order.
  void choose_primed(int k, int i) {
    auto& pr = primed[static_cast<std::size_t>(k - 1)];
    const auto& up = unprimed[static_cast<std::size_t>(k - 1)];
    const Entry lo = up[static_cast<std::size_t>(i - 1)];
    const Entry hi = (i == 1) ? 0 : up[static_cast<std::size_t>(i - 2)];
    for (Entry v = lo; v <= hi; ++v) {
      pr[static_cast<std::size_t>(i - 1)] = v;
      if (i < k) {
        choose_primed(k, i + 1);
      } else if (k > 1) {
        choose_unprimed(k, 1);
      } else {
        out->emplace_back(unprimed, primed);
      }
    }
  }

  // Fill unprimed row k-1 between the primed entries of row k.
  void choose_unprimed(int k, int i) {
    auto& up = unprimed[static_cast<std::size_t>(k - 2)];
    const auto& pr = primed[static_cast<std::size_t>(k - 1)];
    const Entry lo = pr[static_cast<std::size_t>(i)];
    const Entry hi = pr[static_cast<std::size_t>(i - 1)];
    for (Entry v = lo; v <= hi; ++v) {
      up[static_cast<std::size_t>(i - 1)] = v;
      if (i < k - 1) {
        choose_unprimed(k, i + 1);
      } else {
        choose_primed(k - 1, 1);
      }
    }
  }
};

}  // namespace

std::vector<Pattern> enumerate_patterns(const HighestWeight& lam,
                                        const Int& guard) {
  const Int count = count_patterns(lam);
  if (count > guard) {
    throw GuardError("pattern count " + count.str() + " exceeds guard " +
                         guard.str(),
                     count);
  }

  Enumerator en;
  en.n = lam.rank();
  en.unprimed.resize(static_cast<std::size_t>(en.n));
  en.primed.resize(static_cast<std::size_t>(en.n));
  for (int k = 1; k <= en.n; ++k) {
    en.unprimed[static_cast<std::size_t>(k - 1)].resize(static_cast<std::size_t>(k));
    en.primed[static_cast<std::size_t>(k - 1)].resize(static_cast<std::size_t>(k));
  }
  en.unprimed.back() = lam.entries();

  std::vector<Pattern> result;
  result.reserve(static_cast<std::size_t>(count));
  en.out = &result;
  en.choose_primed(en.n, 1);

  if (Int(result.size()) != count) {
    throw ConsistencyError("enumeration produced " +
                           std::to_string(result.size()) +
                           " patterns but the count recursion says " +
                           count.str());
  }
  return result;
}

std::optional<Pattern> apply_delta(const Pattern& p, const PatternDelta& d,
                                   const HighestWeight& lam) {
  if (d.level < 1 || d.level > p.rank() || d.position < 1 ||
      d.position > d.level) {
    throw StructuralError("delta target out of range");
  }
  if (d.sign != 1 && d.sign != -1) {
    throw StructuralError("delta sign must be +1 or -1");
  }
  auto unprimed = p.unprimed_rows();
  auto primed = p.primed_rows();
  auto& rows = d.primed ? primed : unprimed;
  rows[static_cast<std::size_t>(d.level - 1)]
      [static_cast<std::size_t>(d.position - 1)] += d.sign;
  Pattern shifted(std::move(unprimed), std::move(primed));
  if (!validate_pattern(shifted, lam)) return std::nullopt;
  return shifted;
}

Weight weight_of(const Pattern& p) {
  const int n = p.rank();
  Weight w(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    Entry value = 0;
    for (int i = 1; i <= k; ++i) value += 2 * p.primed(k, i) - p.unprimed(k, i);
    for (int i = 1; i <= k - 1; ++i) value -= p.unprimed(k - 1, i);
    w[static_cast<std::size_t>(k - 1)] = value;
  }
  return w;
}

Pattern highest_pattern(const HighestWeight& lam) {
  const int n = lam.rank();
  std::vector<std::vector<Entry>> unprimed(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    auto& row = unprimed[static_cast<std::size_t>(k - 1)];
    row.assign(lam.entries().begin(), lam.entries().begin() + k);
  }
  auto primed = unprimed;
  return Pattern(std::move(unprimed), std::move(primed));
}

}  // namespace sympgt
