#pragma once

#include "polycycle/bigint.hpp"
#include "polycycle/poly.hpp"
#include "polycycle/rational_map.hpp"
#include "polycycle/rng.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace polycycle::dyn {

using maps::Field;
using maps::Poly;
using maps::RationalMap;

// Directed graph of a self-map on {0, ..., n-1}: one edge v -> successor[v].
struct FunctionalGraph {
    std::vector<std::uint32_t> successor;

    std::uint32_t size() const { return static_cast<std::uint32_t>(successor.size()); }
};

// n = q, vertex v is the field element of index v.
FunctionalGraph graph_of_polynomial(const Field& F, const Poly& f);

// n = q + 1; the last vertex (index q) encodes the point at infinity.
FunctionalGraph graph_of_rational(const Field& F, const RationalMap& R);

// Uniform over all n^n self-maps.
FunctionalGraph random_mapping(std::uint32_t n, SplitMix64& rng);

// Cycle census of one map: the periodic points partition into vertex-disjoint
// cycles; T is the lcm of the cycle lengths (the ultimate period), tracked
// both exactly and in log scale via the lcm's prime-power factors.
struct CycleStructure {
    std::vector<std::vector<std::uint32_t>> cycles;  // traversal order
    std::uint64_t Z = 0;                             // number of periodic points
    std::map<std::uint32_t, std::uint64_t> multiplicities;  // length k -> c_k
    BigInt T = 1;
    double log_T = 0.0;
    // Length of the cycle through the infinity vertex, for maps on F_q ∪ {∞}.
    std::optional<std::uint32_t> infinity_cycle_len;

    std::uint64_t count(std::uint32_t k) const {
        auto it = multiplicities.find(k);
        return it == multiplicities.end() ? 0 : it->second;
    }
    // c_k minus the cycle through infinity, when one was flagged.
    std::uint64_t count_excluding_infinity(std::uint32_t k) const {
        std::uint64_t c = count(k);
        if (infinity_cycle_len && *infinity_cycle_len == k) --c;
        return c;
    }

    std::vector<std::uint32_t> cyclic_vertices() const;  // sorted
    // The permutation induced on the cyclic vertices (agrees with the
    // successor map there).
    std::map<std::uint32_t, std::uint32_t> sigma() const;

    std::string to_json() const;
};

// In-degree peeling (O(n)): repeatedly delete sources; what survives is the
// cyclic part, traversed once per cycle.  Pass the infinity vertex for maps
// on F_q ∪ {∞} so the cycle through it gets flagged.
CycleStructure cycle_decomposition(const FunctionalGraph& g,
                                   std::optional<std::uint32_t> infinity_vertex = std::nullopt);

// Independent route to T: build h = g^(n) as a successor table, then find the
// least t >= 1 with g^(n+t) = g^(n) pointwise.  Throws std::runtime_error
// when t exceeds step_budget.
std::uint64_t ultimate_period_iterative(const FunctionalGraph& g,
                                        std::uint64_t step_budget = 1ULL << 24);

// A conjunction-of-cycles indicator: lists of vertex-disjoint cycles.
struct IndicatorQuery {
    std::vector<std::vector<std::uint32_t>> cycles;
};

IndicatorQuery make_indicator_query(std::vector<std::vector<std::uint32_t>> cycles);

// True iff every listed cycle is a cycle of g.
bool has_cycles(const FunctionalGraph& g, const IndicatorQuery& query);

}  // namespace polycycle::dyn
