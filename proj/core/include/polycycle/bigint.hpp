#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace polycycle {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline std::string to_decimal(const BigInt& n) { return n.str(); }

inline double to_double(const BigRat& r) { return r.convert_to<double>(); }
inline double to_double(const BigInt& n) { return n.convert_to<double>(); }

inline BigInt big_pow(BigInt base, std::uint64_t exp) {
    BigInt out = 1;
    while (exp > 0) {
        if (exp & 1) out *= base;
        base *= base;
        exp >>= 1;
    }
    return out;
}

// q(q-1)...(q-len+1); zero once len exceeds q.
inline BigInt falling_factorial(const BigInt& q, std::uint64_t len) {
    BigInt out = 1;
    for (std::uint64_t j = 0; j < len; ++j) out *= (q - j);
    return out;
}

inline BigInt factorial(std::uint64_t n) {
    BigInt out = 1;
    for (std::uint64_t i = 2; i <= n; ++i) out *= i;
    return out;
}

inline BigInt binomial(const BigInt& n, std::uint64_t k) {
    return falling_factorial(n, k) / factorial(k);
}

}  // namespace polycycle
