#pragma once

#include <optional>
#include <vector>

#include "sympgt/pattern.hpp"
#include "sympgt/rational.hpp"
#include "sympgt/weights.hpp"

namespace sympgt {

inline const Int kDefaultGuard = 20000;

// True iff the top unprimed row equals lam and both interlacing chains hold
// at every level. Pure predicate: inequality failures return false; only a
// shape mismatch (wrong number or length of rows) throws StructuralError.
bool validate_pattern(const Pattern& p, const HighestWeight& lam);

// Every pattern associated with lam, exactly once, in canonical order.
// The count is computed first; if it exceeds guard, throws GuardError
// carrying the count without materializing anything.
std::vector<Pattern> enumerate_patterns(const HighestWeight& lam,
                                        const Int& guard = kDefaultGuard);

// Number of patterns associated with lam (the module dimension), computed by
// levelwise recursion over candidate rows without materializing patterns.
Int count_patterns(const HighestWeight& lam);

// The shifted array when it is again a pattern for lam, and nullopt when the
// shift breaks a chain. A vanished term is not an error; callers drop it.
// Out-of-range delta targets throw StructuralError.
std::optional<Pattern> apply_delta(const Pattern& p, const PatternDelta& d,
                                   const HighestWeight& lam);

// Component k is  2*sum_i lambda'_{ki} - sum_i lambda_{ki}
//                 - sum_i lambda_{k-1,i}.
Weight weight_of(const Pattern& p);

// The pattern with lambda_{ki} = lambda'_{ki} = lambda_i for all i <= k; its
// weight is lam itself.
Pattern highest_pattern(const HighestWeight& lam);

}  // namespace sympgt
