#include "tetra/arith.hpp"

#include <limits>
#include <stdexcept>

namespace tetra {

Int to_int_checked(Int128 v) {
  if (v > std::numeric_limits<Int>::max() || v < std::numeric_limits<Int>::min())
    throw std::overflow_error("value exceeds 64-bit range");
  return static_cast<Int>(v);
}

}  // namespace tetra
