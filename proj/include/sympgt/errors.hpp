#pragma once

#include <stdexcept>
#include <string>

#include "sympgt/rational.hpp"

namespace sympgt {

// Bad user input (a label sequence violating the chain, unparseable flags).
struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed data shapes: wrong row lengths, out-of-range delta targets,
// index 0 in a signed position, mixed inputs. Distinct from a predicate
// returning false.
struct StructuralError : std::runtime_error {
  explicit StructuralError(const std::string& msg) : std::runtime_error(msg) {}
};

// Operation not defined for these arguments (k = 1 mixed generator,
// branching below rank 2).
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// Basis size exceeds the configured guard. Carries the computed count so the
// caller can report it without materializing anything.
struct GuardError : std::runtime_error {
  GuardError(const std::string& msg, Int computed_count)
      : std::runtime_error(msg), count(std::move(computed_count)) {}
  Int count;
};

// Internal invariant failed (span short of the algebra dimension, non-scalar
// Casimir, non-unique highest vector). Indicates a bug, not bad input.
struct ConsistencyError : std::runtime_error {
  explicit ConsistencyError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace sympgt
