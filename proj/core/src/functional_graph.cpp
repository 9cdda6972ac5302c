#include "polycycle/functional_graph.hpp"

#include "polycycle/primes.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace polycycle::dyn {

FunctionalGraph graph_of_polynomial(const Field& F, const Poly& f) {
    const std::uint64_t q = F.order();
    FunctionalGraph g;
    g.successor.resize(q);
    for (std::uint64_t v = 0; v < q; ++v) {
        g.successor[v] = maps::eval_poly(F, f, static_cast<maps::Elem>(v));
    }
    return g;
}

FunctionalGraph graph_of_rational(const Field& F, const RationalMap& R) {
    const std::uint64_t q = F.order();
    FunctionalGraph g;
    g.successor.resize(q + 1);
    for (std::uint64_t v = 0; v < q; ++v) {
        const auto img =
            maps::eval_rational(F, R, maps::ExtPoint::finite(static_cast<maps::Elem>(v)));
        g.successor[v] = img.is_infinity() ? static_cast<std::uint32_t>(q) : img.value();
    }
    g.successor[q] = R.num.leading();  // R(∞) = leading coefficient of the numerator
    return g;
}

FunctionalGraph random_mapping(std::uint32_t n, SplitMix64& rng) {
    if (n < 1) throw std::invalid_argument("mapping domain must be nonempty");
    FunctionalGraph g;
    g.successor.resize(n);
    for (std::uint32_t v = 0; v < n; ++v) {
        g.successor[v] = static_cast<std::uint32_t>(rng.below(n));
    }
    return g;
}

CycleStructure cycle_decomposition(const FunctionalGraph& g,
                                   std::optional<std::uint32_t> infinity_vertex) {
    const std::uint32_t n = g.size();
    std::vector<std::uint32_t> indeg(n, 0);
    for (std::uint32_t v = 0; v < n; ++v) ++indeg[g.successor[v]];

    // Peel sources until only the cyclic part remains.
    std::vector<std::uint32_t> stack;
    for (std::uint32_t v = 0; v < n; ++v) {
        if (indeg[v] == 0) stack.push_back(v);
    }
    std::vector<bool> removed(n, false);
    while (!stack.empty()) {
        const std::uint32_t v = stack.back();
        stack.pop_back();
        removed[v] = true;
        const std::uint32_t w = g.successor[v];
        if (--indeg[w] == 0) stack.push_back(w);
    }

    CycleStructure cs;
    std::vector<bool> visited(n, false);
    for (std::uint32_t v = 0; v < n; ++v) {
        if (removed[v] || visited[v]) continue;
        std::vector<std::uint32_t> cycle;
        std::uint32_t w = v;
        do {
            visited[w] = true;
            cycle.push_back(w);
            w = g.successor[w];
        } while (w != v);
        const auto len = static_cast<std::uint32_t>(cycle.size());
        cs.Z += len;
        ++cs.multiplicities[len];
        if (infinity_vertex &&
            std::find(cycle.begin(), cycle.end(), *infinity_vertex) != cycle.end()) {
            cs.infinity_cycle_len = len;
        }
        cs.cycles.push_back(std::move(cycle));
    }

    // T = lcm of cycle lengths via max prime-power exponents; log T from the
    // same factors so large fields cannot overflow the log-scale view.
    std::map<std::uint64_t, std::uint32_t> lcm_exponents;
    for (const auto& [len, c] : cs.multiplicities) {
        (void)c;
        for (const auto& [prime, exp] : factorize(len)) {
            auto& cur = lcm_exponents[prime];
            cur = std::max(cur, exp);
        }
    }
    cs.T = 1;
    cs.log_T = 0.0;
    for (const auto& [prime, exp] : lcm_exponents) {
        cs.T *= big_pow(BigInt(prime), exp);
        cs.log_T += exp * std::log(static_cast<double>(prime));
    }
    return cs;
}

std::vector<std::uint32_t> CycleStructure::cyclic_vertices() const {
    std::vector<std::uint32_t> out;
    out.reserve(Z);
    for (const auto& cycle : cycles) out.insert(out.end(), cycle.begin(), cycle.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::map<std::uint32_t, std::uint32_t> CycleStructure::sigma() const {
    std::map<std::uint32_t, std::uint32_t> out;
    for (const auto& cycle : cycles) {
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            out[cycle[i]] = cycle[(i + 1) % cycle.size()];
        }
    }
    return out;
}

std::string CycleStructure::to_json() const {
    nlohmann::json j;
    j["Z"] = Z;
    nlohmann::json hist = nlohmann::json::object();
    for (const auto& [k, c] : multiplicities) hist[std::to_string(k)] = c;
    j["cycles"] = hist;
    j["T"] = to_decimal(T);
    j["logT"] = log_T;
    if (infinity_cycle_len) {
        j["contains_infinity_cycle_len"] = *infinity_cycle_len;
    } else {
        j["contains_infinity_cycle_len"] = nullptr;
    }
    return j.dump();
}

std::uint64_t ultimate_period_iterative(const FunctionalGraph& g, std::uint64_t step_budget) {
    const std::uint32_t n = g.size();

    // base = g^(n) by binary composition.
    std::vector<std::uint32_t> power(n), base(n);
    for (std::uint32_t v = 0; v < n; ++v) {
        power[v] = g.successor[v];
        base[v] = v;
    }
    std::uint64_t e = n;
    std::vector<std::uint32_t> tmp(n);
    auto compose = [&](std::vector<std::uint32_t>& dst, const std::vector<std::uint32_t>& outer,
                       const std::vector<std::uint32_t>& inner) {
        for (std::uint32_t v = 0; v < n; ++v) tmp[v] = outer[inner[v]];
        dst = tmp;
    };
    while (e > 0) {
        if (e & 1) compose(base, power, base);
        compose(power, power, power);
        e >>= 1;
    }

    std::vector<std::uint32_t> cur = base;
    for (std::uint64_t t = 1; t <= step_budget; ++t) {
        for (std::uint32_t v = 0; v < n; ++v) cur[v] = g.successor[cur[v]];
        if (cur == base) return t;
    }
    throw std::runtime_error("iteration budget exceeded while measuring the period");
}

IndicatorQuery make_indicator_query(std::vector<std::vector<std::uint32_t>> cycles) {
    std::set<std::uint32_t> seen;
    for (const auto& cycle : cycles) {
        if (cycle.empty()) throw std::invalid_argument("empty cycle in query");
        for (std::uint32_t v : cycle) {
            if (!seen.insert(v).second) {
                throw std::invalid_argument("query cycles must be vertex-disjoint");
            }
        }
    }
    return IndicatorQuery{std::move(cycles)};
}

bool has_cycles(const FunctionalGraph& g, const IndicatorQuery& query) {
    for (const auto& cycle : query.cycles) {
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            if (cycle[i] >= g.size()) return false;
            if (g.successor[cycle[i]] != cycle[(i + 1) % cycle.size()]) return false;
        }
    }
    return true;
}

}  // namespace polycycle::dyn
