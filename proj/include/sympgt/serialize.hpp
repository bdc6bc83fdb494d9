#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sympgt/action.hpp"
#include "sympgt/sparse.hpp"
#include "sympgt/weights.hpp"

namespace sympgt {

// Stable on-disk form of one generator matrix. Entries are sorted by
// (column, row) and coefficients rendered as "num/den" with den > 0, so a
// given (weight, generator) pair always serializes to the same bytes.
std::string to_exact_json(const HighestWeight& lam, const GeneratorId& gen,
                          const SparseOperator& op);

// Inverse of to_exact_json; throws ValidationError on schema violations
// (wrong schema tag, malformed coefficient strings, out-of-range indices).
struct ExactMatrixFile {
  std::vector<Entry> lambda;
  std::string generator;
  SparseOperator op;
};
ExactMatrixFile from_exact_json(const std::string& text);

// Matrix Market coordinate format with entries converted to decimal floats.
// Lossy by design (the only float path in the project); one-based indices,
// (column, row) entry order to match the JSON form.
std::string to_matrix_market(const HighestWeight& lam, const GeneratorId& gen,
                             const SparseOperator& op);

}  // namespace sympgt
