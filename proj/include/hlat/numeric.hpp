#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <vector>

namespace hlat {

// All invariant arithmetic is exact: arbitrary-precision integers and
// rationals, never floating point.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Coordinate vector in a lattice basis.
using Vec = std::vector<Int>;

inline bool is_odd(const Int& x) { return (x % 2) != 0; }
inline bool is_even(const Int& x) { return !is_odd(x); }

// floor(n/d) for d > 0.
inline Int floor_div(const Int& n, const Int& d) {
    Int q = n / d;            // truncates toward zero
    if (n % d != 0 && n < 0) --q;
    return q;
}

// ceil(n/d) for d > 0.
inline Int ceil_div(const Int& n, const Int& d) { return floor_div(n + d - 1, d); }

inline Int floor_rat(const Rat& q) {
    return floor_div(boost::multiprecision::numerator(q),
                     boost::multiprecision::denominator(q));
}

inline Int ceil_rat(const Rat& q) {
    return ceil_div(boost::multiprecision::numerator(q),
                    boost::multiprecision::denominator(q));
}

// Smallest r >= 0 with r*r >= n (n >= 0).
inline Int isqrt_ceil(const Int& n) {
    if (n <= 0) return 0;
    Int r = boost::multiprecision::sqrt(n);  // floor sqrt
    if (r * r < n) ++r;
    return r;
}

inline Int pow_int(const Int& base, unsigned exp) {
    Int r = 1, b = base;
    for (unsigned e = exp; e > 0; e >>= 1) {
        if (e & 1) r *= b;
        if (e > 1) b *= b;
    }
    return r;
}

// Lexicographic order on coordinate vectors of equal length.
inline bool lex_less(const Vec& a, const Vec& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return a.size() < b.size();
}

}  // namespace hlat
