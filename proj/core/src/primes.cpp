#include "polycycle/primes.hpp"

namespace polycycle {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
    std::vector<std::uint64_t> out;
    if (limit < 2) return out;
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return out;
}

std::map<std::uint64_t, std::uint32_t> factorize(std::uint64_t n) {
    std::map<std::uint64_t, std::uint32_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        while (n % d == 0) {
            ++out[d];
            n /= d;
        }
    }
    if (n > 1) ++out[n];
    return out;
}

}  // namespace polycycle
