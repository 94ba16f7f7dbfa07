#pragma once

#include <cstdint>

namespace tetra {

using Int = std::int64_t;
using Int128 = __int128;

// C(n, 2); zero for n < 2
constexpr Int128 binom2(Int128 n) { return n < 2 ? 0 : n * (n - 1) / 2; }

// C(n, 3); zero for n < 3
constexpr Int128 binom3(Int128 n) { return n < 3 ? 0 : n * (n - 1) * (n - 2) / 6; }

// throws std::overflow_error when v does not fit an Int
Int to_int_checked(Int128 v);

}  // namespace tetra
