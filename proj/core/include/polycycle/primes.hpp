#pragma once

#include <cstdint>
#include <map>
#include <vector>

namespace polycycle {

// Deterministic trial division; inputs stay desk-scale by construction.
bool is_prime(std::uint64_t n);

// All primes <= limit, ascending (sieve of Eratosthenes).
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

// Prime factorization p -> exponent of a small integer (n >= 1).
std::map<std::uint64_t, std::uint32_t> factorize(std::uint64_t n);

}  // namespace polycycle
