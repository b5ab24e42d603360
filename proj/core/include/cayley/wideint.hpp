#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <limits>

namespace cayley {

// Exact wide integer for intermediates that can overflow int64 (degree-3
// monomials of 63-bit coordinates need up to 192 bits).
using Int256 = boost::multiprecision::int256_t;

inline bool fits_int64(const Int256& v) {
    return v >= std::numeric_limits<std::int64_t>::min() &&
           v <= std::numeric_limits<std::int64_t>::max();
}

} // namespace cayley
