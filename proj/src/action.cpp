#include "sympgt/action.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <string>

#include "sympgt/errors.hpp"
#include "sympgt/parallel.hpp"

namespace sympgt {

namespace {

void require_level(const Pattern& p, int k, int i) {
  if (k < 1 || k > p.rank() || i < 1 || i > k) {
    throw StructuralError("coefficient index (k=" + std::to_string(k) +
                          ", i=" + std::to_string(i) + ") out of range");
  }
}

Rational reciprocal(const Int& d) {
  if (d == 0) {
    throw ConsistencyError("zero denominator in a coefficient; pattern rows "
                           "are not strictly decreasing after shift");
  }
  // The two-argument constructor rejects negative denominators.
  return d < 0 ? Rational(Int(-1), -d) : Rational(Int(1), d);
}

}  // namespace

Rational coeff_A(const Pattern& p, int k, int i) {
  require_level(p, k, i);
  Rational result(1);
  const Entry li = p.shifted_primed(k, i);
  for (int a = 1; a <= k; ++a) {
    if (a == i) continue;
    result *= reciprocal(Int(p.shifted_primed(k, a) - li));
  }
  return result;
}

Rational coeff_B(const Pattern& p, int k, int i) {
  require_level(p, k, i);
  const Entry li = p.shifted_primed(k, i);
  Int product = 4;
  product *= Int(li);
  for (int a = 1; a <= k; ++a) product *= Int(p.shifted_unprimed(k, a) - li);
  for (int a = 1; a <= k - 1; ++a) {
    product *= Int(p.shifted_unprimed(k - 1, a) - li);
  }
  return coeff_A(p, k, i) * Rational(product);
}

Rational coeff_C(const Pattern& p, int k, int i) {
  if (k < 2 || k > p.rank() || i < 1 || i > k - 1) {
    throw StructuralError("coefficient index (k=" + std::to_string(k) +
                          ", i=" + std::to_string(i) + ") out of range");
  }
  const Entry li = p.shifted_unprimed(k - 1, i);
  Rational result = reciprocal(Int(2) * li);
  for (int a = 1; a <= k - 1; ++a) {
    if (a == i) continue;
    const Entry la = p.shifted_unprimed(k - 1, a);
    result *= reciprocal(Int(li) * li - Int(la) * la);
  }
  return result;
}

Rational coeff_D(const Pattern& p, int k, int i, int j, int m) {
  require_level(p, k, i);
  if (k < 2 || j < 1 || j > k - 1 || m < 1 || m > k - 1) {
    throw StructuralError("coefficient index (k=" + std::to_string(k) +
                          ", j=" + std::to_string(j) + ", m=" +
                          std::to_string(m) + ") out of range");
  }
  const Entry lj = p.shifted_unprimed(k - 1, j);
  Int product = 1;
  for (int a = 1; a <= k; ++a) {
    if (a == i) continue;
    const Entry la = p.shifted_primed(k, a);
    product *= Int(lj - la);
    product *= Int(lj + la + 1);
  }
  for (int a = 1; a <= k - 1; ++a) {
    if (a == m) continue;
    const Entry la = p.shifted_primed(k - 1, a);
    product *= Int(lj - la);
    product *= Int(lj + la + 1);
  }
  return coeff_A(p, k, i) * coeff_A(p, k - 1, m) * coeff_C(p, k, j) *
         Rational(product);
}

namespace {

ActionTerms collect(std::map<Pattern, Rational>&& accumulated) {
  ActionTerms terms;
  terms.reserve(accumulated.size());
  for (auto& [pattern, value] : accumulated) {
    if (value != 0) terms.emplace_back(pattern, std::move(value));
  }
  return terms;
}

}  // namespace

ActionTerms apply_raise(const Pattern& p, int k, const HighestWeight& lam) {
  require_level(p, k, 1);
  std::map<Pattern, Rational> accumulated;
  for (int i = 1; i <= k; ++i) {
    auto target = apply_delta(p, {true, k, i, +1}, lam);
    if (!target) continue;  // the coefficient is never evaluated
    accumulated[*std::move(target)] += coeff_A(p, k, i);
  }
  return collect(std::move(accumulated));
}

ActionTerms apply_lower(const Pattern& p, int k, const HighestWeight& lam) {
  require_level(p, k, 1);
  std::map<Pattern, Rational> accumulated;
  for (int i = 1; i <= k; ++i) {
    auto target = apply_delta(p, {true, k, i, -1}, lam);
    if (!target) continue;
    accumulated[*std::move(target)] += coeff_B(p, k, i);
  }
  return collect(std::move(accumulated));
}

ActionTerms apply_mixed(const Pattern& p, int k, const HighestWeight& lam) {
  if (k == 1) {
    throw DomainError("no mixed generator at level 1: F[0,-1] does not exist");
  }
  require_level(p, k, 1);
  std::map<Pattern, Rational> accumulated;

  for (int i = 1; i <= k - 1; ++i) {
    auto target = apply_delta(p, {false, k - 1, i, -1}, lam);
    if (!target) continue;
    accumulated[*std::move(target)] += coeff_C(p, k, i);
  }

  // Triple shift: +delta'_{ki} +delta_{k-1,j} +delta'_{k-1,m}. The shifts hit
  // three distinct cells, so they are applied to the raw rows at once and
  // only the final array is validated (an intermediate array may fail the
  // chains even when the final one is a pattern).
  for (int i = 1; i <= k; ++i) {
    for (int j = 1; j <= k - 1; ++j) {
      for (int m = 1; m <= k - 1; ++m) {
        auto unprimed = p.unprimed_rows();
        auto primed = p.primed_rows();
        primed[static_cast<std::size_t>(k - 1)]
              [static_cast<std::size_t>(i - 1)] += 1;
        unprimed[static_cast<std::size_t>(k - 2)]
                [static_cast<std::size_t>(j - 1)] += 1;
        primed[static_cast<std::size_t>(k - 2)]
              [static_cast<std::size_t>(m - 1)] += 1;
        Pattern target(std::move(unprimed), std::move(primed));
        if (!validate_pattern(target, lam)) continue;
        accumulated[std::move(target)] += coeff_D(p, k, i, j, m);
      }
    }
  }
  return collect(std::move(accumulated));
}

GeneratorId::Kind GeneratorId::classify(int n) const {
  const auto in_range = [n](int v) { return v != 0 && v >= -n && v <= n; };
  if (!in_range(i) || !in_range(j)) {
    throw StructuralError("generator index outside {-" + std::to_string(n) +
                          "..-1, 1.." + std::to_string(n) + "}");
  }
  if (i == j && i > 0) return Kind::Diagonal;
  if (j == -i && i > 0) return Kind::Raise;
  if (j == -i && i < 0) return Kind::Lower;
  if (i > 0 && j == -(i + 1)) return Kind::Mixed;
  return Kind::General;
}

int GeneratorId::level() const {
  if (i == j && i > 0) return i;
  if (j == -i && i > 0) return i;
  if (j == -i && i < 0) return -i;
  if (i > 0 && j == -(i + 1)) return i + 1;
  throw StructuralError("generator " + name() + " has no direct-action level");
}

std::string GeneratorId::name() const {
  return "F[" + std::to_string(i) + "," + std::to_string(j) + "]";
}

GeneratorId GeneratorId::parse(const std::string& text) {
  const auto fail = [&text]() -> GeneratorId {
    throw ValidationError("generator must look like F[i,j] with signed "
                          "nonzero integers, got '" + text + "'");
  };
  if (text.size() < 6 || text[0] != 'F' || text[1] != '[' ||
      text.back() != ']') {
    return fail();
  }
  const auto comma = text.find(',', 2);
  if (comma == std::string::npos || comma + 1 >= text.size() - 1) return fail();

  const auto parse_index = [&fail](const std::string& part) {
    if (part.empty()) fail();
    std::size_t pos = 0;
    bool negative = false;
    if (part[0] == '-') {
      negative = true;
      pos = 1;
    }
    if (pos >= part.size()) fail();
    long value = 0;
    for (; pos < part.size(); ++pos) {
      if (part[pos] < '0' || part[pos] > '9') fail();
      value = value * 10 + (part[pos] - '0');
      if (value > 1000000) fail();  // no plausible rank is this large
    }
    if (value == 0) fail();
    return static_cast<int>(negative ? -value : value);
  };

  GeneratorId gen;
  gen.i = parse_index(text.substr(2, comma - 2));
  gen.j = parse_index(text.substr(comma + 1, text.size() - comma - 2));
  return gen;
}

SparseOperator diag_matrix(const HighestWeight& lam, int k, const Int& guard) {
  if (k < 1 || k > lam.rank()) {
    throw StructuralError("level " + std::to_string(k) + " out of range");
  }
  const auto patterns = enumerate_patterns(lam, guard);
  SparseOperator m(static_cast<SparseOperator::Index>(patterns.size()));
  for (std::size_t idx = 0; idx < patterns.size(); ++idx) {
    const Entry w = weight_of(patterns[idx])[static_cast<std::size_t>(k - 1)];
    if (w != 0) {
      m.set(static_cast<SparseOperator::Index>(idx),
            static_cast<SparseOperator::Index>(idx), Rational(w));
    }
  }
  return m;
}

SparseOperator build_generator_matrix(const HighestWeight& lam,
                                      const GeneratorId& gen, const Int& guard,
                                      int jobs) {
  const int n = lam.rank();
  const GeneratorId::Kind kind = gen.classify(n);
  if (kind == GeneratorId::Kind::General) {
    throw StructuralError("generator " + gen.name() +
                          " has no closed-form action; use bracket closure");
  }
  const int k = gen.level();
  if (kind == GeneratorId::Kind::Diagonal) return diag_matrix(lam, k, guard);

  const auto patterns = enumerate_patterns(lam, guard);
  const auto dim = static_cast<SparseOperator::Index>(patterns.size());

  const auto index_of = [&patterns](const Pattern& p) {
    const auto it = std::lower_bound(patterns.begin(), patterns.end(), p);
    if (it == patterns.end() || !(*it == p)) {
      throw ConsistencyError("action target missing from the enumeration");
    }
    return static_cast<SparseOperator::Index>(it - patterns.begin());
  };

  // Each source pattern yields one column; columns are computed
  // independently (possibly in parallel) and merged in index order, so the
  // result does not depend on scheduling.
  std::vector<ActionTerms> columns(patterns.size());
  parallel_for(patterns.size(), jobs, [&](std::size_t col) {
    switch (kind) {
      case GeneratorId::Kind::Raise:
        columns[col] = apply_raise(patterns[col], k, lam);
        break;
      case GeneratorId::Kind::Lower:
        columns[col] = apply_lower(patterns[col], k, lam);
        break;
      default:
        columns[col] = apply_mixed(patterns[col], k, lam);
        break;
    }
  });

  SparseOperator m(dim);
  for (std::size_t col = 0; col < columns.size(); ++col) {
    for (const auto& [target, value] : columns[col]) {
      m.set(index_of(target), static_cast<SparseOperator::Index>(col), value);
    }
  }
  return m;
}

}  // namespace sympgt
