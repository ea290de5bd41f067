#pragma once

#include <vector>

#include "vanish/partitions.hpp"

namespace vanish {

// One border-strip removal: the shape left behind and the strip's leg
// length (rows spanned minus one).
struct RimHookRemoval {
    Partition remainder;
    u32 leg_length = 0;
};

// All ways to remove a border strip of the given length, ordered by
// starting row. Empty when no removal leaves a valid shape.
std::vector<RimHookRemoval> rim_hooks(const Partition& shape, u32 length);

// chi_sigma evaluated at cycle type lambda by recursive rim-hook
// expansion, removing hooks for the largest remaining part first and
// memoizing on (remaining shape, remaining parts). Exact; throws
// std::overflow_error instead of wrapping.
i64 mn_value(const Partition& sigma, const Partition& lambda);

// Same recursion with the memo disabled; exists so determinism of the
// memoized path is testable.
i64 mn_value_unmemoized(const Partition& sigma, const Partition& lambda);

// A symmetric-group character stays irreducible on the alternating group
// exactly when its diagram is not symmetric.
bool restricts_irreducibly_to_alternating(const Partition& sigma);

}  // namespace vanish
