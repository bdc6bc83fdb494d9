#include "sympgt/algebra.hpp"

#include <algorithm>
#include <string>

#include "sympgt/errors.hpp"
#include "sympgt/parallel.hpp"
#include "sympgt/patterns.hpp"

namespace sympgt {

AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y) {
  return {x.defining.commutator(y.defining), x.big.commutator(y.big)};
}

namespace {

std::size_t leading_index(const std::vector<Rational>& v, std::size_t from) {
  for (std::size_t t = from; t < v.size(); ++t) {
    if (v[t] != 0) return t;
  }
  return v.size();
}

}  // namespace

// Shared forward elimination. Maintains v = sum_t combo[t] * member_t +
// residual; returns the residual's leading index (== size when v lies in the
// span). Every stored vec has zeros before its own pivot, so eliminating at
// the residual's leading position strictly advances it.
std::size_t RationalSpan::reduce(std::vector<Rational>& residual,
                                 std::vector<Rational>& combo) const {
  std::size_t lead = leading_index(residual, 0);
  while (lead < residual.size()) {
    const Row* match = nullptr;
    for (const Row& row : rows_) {
      if (row.pivot == lead) {
        match = &row;
        break;
      }
    }
    if (!match) break;
    const Rational factor = residual[lead];
    for (std::size_t t = lead; t < residual.size(); ++t) {
      residual[t] -= factor * match->vec[t];
    }
    for (std::size_t t = 0; t < match->combo.size(); ++t) {
      combo[t] += factor * match->combo[t];
    }
    lead = leading_index(residual, lead + 1);
  }
  return lead;
}

bool RationalSpan::insert(const std::vector<Rational>& v) {
  if (!rows_.empty() && rows_.front().vec.size() != v.size()) {
    throw StructuralError("span vectors must share one length");
  }
  std::vector<Rational> residual = v;
  std::vector<Rational> combo(rows_.size(), Rational(0));
  const std::size_t lead = reduce(residual, combo);
  if (lead == residual.size()) return false;

  // residual = v - sum combo_t member_t; normalize and re-express over the
  // member list extended by v itself.
  const Rational factor = residual[lead];
  Row row;
  row.pivot = lead;
  row.vec = std::move(residual);
  for (auto& x : row.vec) x /= factor;
  row.combo.assign(rows_.size() + 1, Rational(0));
  for (std::size_t t = 0; t < combo.size(); ++t) {
    row.combo[t] = -combo[t] / factor;
  }
  row.combo[rows_.size()] = Rational(1) / factor;
  rows_.push_back(std::move(row));
  return true;
}

std::optional<std::vector<Rational>> RationalSpan::solve(
    const std::vector<Rational>& v) const {
  std::vector<Rational> residual = v;
  std::vector<Rational> combo(rows_.size(), Rational(0));
  if (reduce(residual, combo) != residual.size()) return std::nullopt;
  return combo;
}

SparseOperator ClosedAlgebra::operator_for(int i, int j) const {
  const auto in_range = [this](int v) { return v != 0 && v >= -n_ && v <= n_; };
  if (!in_range(i) || !in_range(j)) {
    throw StructuralError("operator index outside {-" + std::to_string(n_) +
                          "..-1, 1.." + std::to_string(n_) + "}");
  }
  auto it = ops_.find({i, j});
  if (it != ops_.end()) return it->second;
  it = ops_.find({-j, -i});
  if (it == ops_.end()) {
    throw ConsistencyError("neither (i,j) nor (-j,-i) is stored");
  }
  SparseOperator m = it->second;
  m *= Rational(-theta(i, j));
  return m;
}

ClosedAlgebra close_algebra(const HighestWeight& lam, const Int& guard,
                            int jobs) {
  const int n = lam.rank();
  const std::size_t algebra_dim =
      static_cast<std::size_t>(n) * static_cast<std::size_t>(2 * n + 1);

  std::vector<GeneratorId> ids;
  for (int k = 1; k <= n; ++k) {
    ids.push_back({k, -k});
    ids.push_back({-k, k});
  }
  for (int k = 2; k <= n; ++k) ids.push_back({k - 1, -k});

  std::vector<AlgebraElement> generators;
  generators.reserve(ids.size());
  for (const auto& id : ids) {
    generators.push_back(AlgebraElement{
        defining_rep(id.i, id.j, n),
        build_generator_matrix(lam, id, guard, jobs)});
  }

  // Worklist closure. Only elements that enlarge the defining-image span are
  // retained, so at most n(2n+1) elements ever hold a big matrix.
  RationalSpan span;
  std::vector<AlgebraElement> members;
  for (const auto& g : generators) {
    if (span.insert(g.defining.flattened())) members.push_back(g);
  }
  for (std::size_t idx = 0; idx < members.size() && span.dim() < algebra_dim;
       ++idx) {
    for (const auto& g : generators) {
      AlgebraElement z = bracket(members[idx], g);
      if (z.defining.is_zero()) continue;
      if (span.insert(z.defining.flattened())) members.push_back(std::move(z));
      if (span.dim() == algebra_dim) break;
    }
  }
  if (span.dim() != algebra_dim) {
    throw ConsistencyError("bracket closure stalled at span dimension " +
                           std::to_string(span.dim()) + " of " +
                           std::to_string(algebra_dim));
  }

  ClosedAlgebra alg;
  alg.n_ = n;
  alg.dim_ = members.front().big.dimension();
  alg.span_dim_ = span.dim();
  alg.canonical_ = canonical_pairs(n);
  for (const auto& [i, j] : alg.canonical_) {
    const auto coords = span.solve(defining_rep(i, j, n).flattened());
    if (!coords) {
      throw ConsistencyError("full span fails to express a basis element");
    }
    SparseOperator op(alg.dim_);
    for (std::size_t t = 0; t < coords->size(); ++t) {
      if ((*coords)[t] == 0) continue;
      SparseOperator term = members[t].big;
      term *= (*coords)[t];
      op += term;
    }
    alg.ops_.emplace(std::make_pair(i, j), std::move(op));
  }
  return alg;
}

std::map<std::pair<int, int>, Rational> bracket_in_basis(int i, int j, int k,
                                                         int l) {
  std::map<std::pair<int, int>, Rational> acc;
  const auto add = [&acc](int a, int b, int coeff) {
    auto& v = acc[{a, b}];
    v += coeff;
    if (v == 0) acc.erase({a, b});
  };
  if (k == j) add(i, l, 1);
  if (i == l) add(k, j, -1);
  if (i == -k) add(-j, l, -theta(k, -j));
  if (-l == j) add(k, -i, theta(i, -l));
  return acc;
}

bool verify_structure_constants(int n) {
  const auto pairs = canonical_pairs(n);
  for (const auto& [i, j] : pairs) {
    const DefiningMatrix left = defining_rep(i, j, n);
    for (const auto& [k, l] : pairs) {
      DefiningMatrix residual = left.commutator(defining_rep(k, l, n));
      for (const auto& [target, coeff] : bracket_in_basis(i, j, k, l)) {
        DefiningMatrix term = defining_rep(target.first, target.second, n);
        term *= -coeff;
        residual += term;
      }
      if (!residual.is_zero()) return false;
    }
  }
  return true;
}

RelationReport verify_relations(const ClosedAlgebra& alg, int jobs) {
  const int n = alg.n();
  const auto& pairs = alg.canonical();

  RationalSpan def_span;
  for (const auto& [i, j] : pairs) {
    if (!def_span.insert(defining_rep(i, j, n).flattened())) {
      throw ConsistencyError("canonical elements are linearly dependent");
    }
  }

  std::vector<std::pair<std::size_t, std::size_t>> work;
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    for (std::size_t q = p + 1; q < pairs.size(); ++q) work.emplace_back(p, q);
  }

  std::vector<char> ok(work.size(), 1);
  parallel_for(work.size(), jobs, [&](std::size_t t) {
    const auto [p, q] = work[t];
    const auto [ip, jp] = pairs[p];
    const auto [iq, jq] = pairs[q];
    const SparseOperator lhs =
        alg.operator_for(ip, jp).commutator(alg.operator_for(iq, jq));

    const DefiningMatrix bracket_def =
        defining_rep(ip, jp, n).commutator(defining_rep(iq, jq, n));
    const auto coords = def_span.solve(bracket_def.flattened());
    if (!coords) {
      ok[t] = 0;
      return;
    }
    SparseOperator rhs(alg.dimension());
    for (std::size_t u = 0; u < coords->size(); ++u) {
      if ((*coords)[u] == 0) continue;
      SparseOperator term = alg.operator_for(pairs[u].first, pairs[u].second);
      term *= (*coords)[u];
      rhs += term;
    }
    if (!(lhs == rhs)) ok[t] = 0;
  });

  RelationReport report;
  report.pairs_checked = work.size();
  for (std::size_t t = 0; t < work.size(); ++t) {
    if (!ok[t]) {
      report.failures.push_back(
          {pairs[work[t].first], pairs[work[t].second]});
    }
  }
  report.structure_constants_ok = verify_structure_constants(n);
  return report;
}

std::pair<SparseOperator, Rational> casimir(const ClosedAlgebra& alg) {
  const int n = alg.n();
  SparseOperator total(alg.dimension());
  for (int i = -n; i <= n; ++i) {
    if (i == 0) continue;
    for (int j = -n; j <= n; ++j) {
      if (j == 0) continue;
      total += alg.operator_for(i, j).multiply(alg.operator_for(j, i));
    }
  }
  Rational scalar;
  if (!total.is_scalar(scalar)) {
    throw ConsistencyError("Casimir sum is not a scalar matrix");
  }
  return {std::move(total), std::move(scalar)};
}

Rational casimir_defining_scalar(int n) {
  DefiningMatrix total(n);
  for (int i = -n; i <= n; ++i) {
    if (i == 0) continue;
    for (int j = -n; j <= n; ++j) {
      if (j == 0) continue;
      total += defining_rep(i, j, n).multiply(defining_rep(j, i, n));
    }
  }
  const Rational candidate = total.at(-n, -n);
  for (int i = -n; i <= n; ++i) {
    if (i == 0) continue;
    for (int j = -n; j <= n; ++j) {
      if (j == 0) continue;
      const Rational expected = (i == j) ? candidate : Rational(0);
      if (total.at(i, j) != expected) {
        throw ConsistencyError("defining-representation Casimir is not scalar");
      }
    }
  }
  return candidate;
}

SparseOperator::Index highest_vector(const ClosedAlgebra& alg,
                                     const HighestWeight& lam) {
  const int n = alg.n();
  if (lam.rank() != n) {
    throw StructuralError("weight rank does not match the closed algebra");
  }

  std::vector<SparseOperator> diag;
  diag.reserve(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) diag.push_back(alg.operator_for(k, k));

  std::vector<SparseOperator::Index> candidates;
  for (SparseOperator::Index v = 0; v < alg.dimension(); ++v) {
    bool matches = true;
    for (int k = 1; k <= n; ++k) {
      if (diag[static_cast<std::size_t>(k - 1)].at(v, v) !=
          Rational(lam.at(k))) {
        matches = false;
        break;
      }
    }
    if (matches) candidates.push_back(v);
  }
  if (candidates.size() != 1) {
    throw ConsistencyError("weight-lambda subspace has dimension " +
                           std::to_string(candidates.size()) + ", expected 1");
  }
  const SparseOperator::Index found = candidates.front();

  const auto patterns = enumerate_patterns(lam, Int(alg.dimension()));
  const Pattern top = highest_pattern(lam);
  const auto it = std::lower_bound(patterns.begin(), patterns.end(), top);
  if (it == patterns.end() || !(*it == top) ||
      static_cast<SparseOperator::Index>(it - patterns.begin()) != found) {
    throw ConsistencyError("weight-lambda vector is not the highest pattern");
  }

  for (int i = -n; i <= n; ++i) {
    if (i == 0) continue;
    for (int j = i + 1; j <= n; ++j) {
      if (j == 0) continue;
      if (!alg.operator_for(i, j).column(found).empty()) {
        throw ConsistencyError("highest vector is not annihilated by " +
                               GeneratorId{i, j}.name());
      }
    }
  }
  return found;
}

}  // namespace sympgt
