#pragma once

#include <cstddef>
#include <string>

namespace farey {

/// The first `count` hexadecimal digits (uppercase) of the fractional part of
/// π, from the Bailey-Borwein-Plouffe series.  Each digit is certified: the
/// series is summed with exact integer bounds and a digit is emitted only
/// once both bounds agree on it.  count = 0 gives "".
std::string bbp_hex_digits(std::size_t count);

}  // namespace farey
