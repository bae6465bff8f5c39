#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <vector>

namespace adjlab {

// All lattice arithmetic is exact. Coordinates, pairings and invariant
// factors use an arbitrary-precision integer so nothing ever overflows
// silently; serialization falls back to decimal strings past 64 bits.
using Int = boost::multiprecision::cpp_int;

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int gcd_int(Int a, Int b)
{
    a = abs_int(a);
    b = abs_int(b);
    while (b != 0) {
        Int r = a % b;
        a = b;
        b = r;
    }
    return a;
}

inline bool fits_int64(const Int& a)
{
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    return a >= lo && a <= hi;
}

inline std::string int_to_string(const Int& a) { return a.str(); }

Int int_from_string(const std::string& text);

} // namespace adjlab
