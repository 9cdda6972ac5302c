#pragma once

#include "polycycle/bigint.hpp"

#include <cstdint>
#include <vector>

namespace polycycle::dyn {

// g(j) for all j <= m: the maximum order of a permutation of a j-element
// set, i.e. the largest lcm over partitions of j.  Grouped knapsack over
// prime powers.  Requires 0 <= m <= 10000.
std::vector<BigInt> landau_up_to(std::uint32_t m);

// Landau's g(m); requires 1 <= m <= 10000.
BigInt landau_max_order(std::uint32_t m);

}  // namespace polycycle::dyn
