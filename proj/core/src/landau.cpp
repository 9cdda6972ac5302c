#include "polycycle/landau.hpp"

#include "polycycle/primes.hpp"

#include <stdexcept>

namespace polycycle::dyn {

std::vector<BigInt> landau_up_to(std::uint32_t m) {
    if (m > 10000) throw std::out_of_range("landau argument above 10000");
    // dp[j] = max lcm achievable with prime powers of total size <= j; slack
    // is absorbed by fixed points.  Each prime contributes at most one power,
    // hence the descending-j update against the previous prime's row.
    std::vector<BigInt> dp(m + 1, 1);
    for (std::uint64_t p : primes_up_to(m)) {
        for (std::uint32_t j = m; j >= p; --j) {
            for (std::uint64_t pe = p; pe <= j; pe *= p) {
                BigInt cand = dp[j - pe] * pe;
                if (cand > dp[j]) dp[j] = cand;
            }
        }
    }
    return dp;
}

BigInt landau_max_order(std::uint32_t m) {
    if (m < 1) throw std::out_of_range("landau argument must be >= 1");
    return landau_up_to(m).back();
}

}  // namespace polycycle::dyn
