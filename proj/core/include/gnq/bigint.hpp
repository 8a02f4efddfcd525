#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace gnq {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt ipow(const BigInt& b, unsigned k) {
    BigInt r = 1;
    for (unsigned i = 0; i < k; ++i) r *= b;
    return r;
}

inline std::uint64_t ipow_u64(std::uint64_t b, unsigned k) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < k; ++i) r *= b;
    return r;
}

// nonnegative residue, works for negative a
inline BigInt mod_floor(const BigInt& a, const BigInt& m) {
    BigInt r = a % m;
    if (r < 0) r += m;
    return r;
}

inline std::string to_string(const BigInt& v) { return v.str(); }

// decimal, optionally signed; anything else is rejected
inline BigInt parse_bigint(const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("not an integer: '" + s + "'");
    for (std::size_t j = i; j < s.size(); ++j)
        if (s[j] < '0' || s[j] > '9') throw std::invalid_argument("not an integer: '" + s + "'");
    return BigInt(s);
}

} // namespace gnq
