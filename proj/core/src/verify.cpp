#include "polycycle/verify.hpp"

#include "polycycle/accumulator.hpp"
#include "polycycle/field.hpp"
#include "polycycle/functional_graph.hpp"
#include "polycycle/landau.hpp"
#include "polycycle/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace polycycle::cli {

using gf::Elem;
using gf::Field;
using maps::MapSpace;
using maps::Poly;
using maps::SpaceKind;
using stats::Verdict;

namespace {

NamedVerdict check(std::string name, bool ok, std::string detail = "") {
    return NamedVerdict{std::move(name), ok ? Verdict::Pass : Verdict::Fail, std::move(detail)};
}

std::string fmt(const BigRat& r) {
    std::ostringstream os;
    os << r << " (" << to_double(r) << ")";
    return os.str();
}

// --- lemma1: extension counting -------------------------------------------

std::vector<NamedVerdict> suite_lemma1(std::uint64_t seed) {
    std::vector<NamedVerdict> out;
    SplitMix64 rng(seed, 0x11);
    for (std::uint64_t q : {3, 5, 7}) {
        const Field F = gf::make_field(q, 1);
        for (std::uint32_t d = 1; d <= 3; ++d) {
            const MapSpace space(F, d, SpaceKind::Polynomial);
            for (std::uint32_t a = 1; a <= d; ++a) {
                const std::uint64_t expected =
                    (big_pow(BigInt(q), d - a) * (q - 1)).convert_to<std::uint64_t>();
                bool ok = true;
                std::uint64_t bad_count = 0;
                for (int trial = 0; trial < 50; ++trial) {
                    const auto sigma = maps::random_partial_permutation(F, a, rng);
                    const std::uint64_t got = maps::count_extensions(space, sigma);
                    if (got != expected) {
                        ok = false;
                        bad_count = got;
                        break;
                    }
                }
                std::ostringstream name;
                name << "lemma1 q=" << q << " d=" << d << " |A|=" << a;
                std::ostringstream detail;
                if (ok) {
                    detail << "50 samples, all counts = " << expected;
                } else {
                    detail << "expected " << expected << " got " << bad_count;
                }
                out.push_back(check(name.str(), ok, detail.str()));
            }
        }
    }
    return out;
}

// --- cardinalities ---------------------------------------------------------

std::vector<NamedVerdict> suite_cardinalities(std::uint64_t) {
    std::vector<NamedVerdict> out;
    for (std::uint64_t q : {2, 3, 4, 5, 7}) {
        const Field F = q == 4 ? gf::make_field(2, 2) : gf::make_field(q, 1);
        for (std::uint32_t d = 1; d <= 3; ++d) {
            const MapSpace space(F, d, SpaceKind::Polynomial);
            const auto members = maps::enumerate_polynomials(space);
            std::set<std::vector<Elem>> distinct;
            for (const auto& f : members) distinct.insert(f.coeffs);
            const BigInt expected = space.cardinality();
            std::ostringstream name;
            name << "cardinality omega q=" << q << " d=" << d;
            const bool ok = BigInt(distinct.size()) == expected &&
                            members.size() == distinct.size();
            out.push_back(check(name.str(), ok,
                                std::to_string(distinct.size()) + " distinct vs " +
                                    to_decimal(expected)));
        }
    }
    const std::pair<std::uint64_t, std::uint32_t> u_cases[] = {{3, 1}, {3, 2}, {5, 1}, {5, 2}};
    for (auto [q, d] : u_cases) {
        const Field F = gf::make_field(q, 1);
        const MapSpace space(F, d, SpaceKind::Rational);
        const auto members = maps::enumerate_rationals(space);
        std::set<std::pair<std::vector<Elem>, std::vector<Elem>>> distinct;
        for (const auto& r : members) distinct.insert({r.num.coeffs, r.den.coeffs});
        const BigInt expected = space.cardinality();
        std::ostringstream name;
        name << "cardinality u q=" << q << " d=" << d;
        const bool ok =
            BigInt(distinct.size()) == expected && members.size() == distinct.size();
        out.push_back(check(name.str(), ok,
                            std::to_string(distinct.size()) + " distinct vs " +
                                to_decimal(expected)));
    }
    return out;
}

// --- period-oracle ---------------------------------------------------------

// Independent cyclic-set oracle: v is periodic iff the orbit of v returns
// to v within n steps.
std::set<std::uint32_t> orbit_cyclic_set(const dyn::FunctionalGraph& g) {
    std::set<std::uint32_t> cyclic;
    const std::uint32_t n = g.size();
    for (std::uint32_t v = 0; v < n; ++v) {
        std::uint32_t w = v;
        for (std::uint32_t step = 0; step < n; ++step) {
            w = g.successor[w];
            if (w == v) {
                cyclic.insert(v);
                break;
            }
        }
    }
    return cyclic;
}

void check_period_graph(const dyn::FunctionalGraph& g, bool rational, std::uint64_t& mismatches,
                        std::uint64_t& checked) {
    const auto cs = dyn::cycle_decomposition(
        g, rational ? std::optional<std::uint32_t>(g.size() - 1) : std::nullopt);
    const std::uint64_t t = dyn::ultimate_period_iterative(g);
    if (BigInt(t) != cs.T) ++mismatches;
    const auto cyclic = cs.cyclic_vertices();
    const auto oracle = orbit_cyclic_set(g);
    if (std::set<std::uint32_t>(cyclic.begin(), cyclic.end()) != oracle) ++mismatches;
    ++checked;
}

std::vector<NamedVerdict> suite_period_oracle(std::uint64_t) {
    std::vector<NamedVerdict> out;
    {
        std::uint64_t mism = 0, checked = 0;
        const Field F = gf::make_field(5, 1);
        for (const auto& f : maps::enumerate_polynomials(MapSpace(F, 2, SpaceKind::Polynomial))) {
            check_period_graph(dyn::graph_of_polynomial(F, f), false, mism, checked);
        }
        out.push_back(check("period-oracle omega q=5 d=2", mism == 0,
                            std::to_string(checked) + " maps"));
    }
    {
        std::uint64_t mism = 0, checked = 0;
        const Field F = gf::make_field(3, 1);
        for (const auto& f : maps::enumerate_polynomials(MapSpace(F, 3, SpaceKind::Polynomial))) {
            check_period_graph(dyn::graph_of_polynomial(F, f), false, mism, checked);
        }
        out.push_back(check("period-oracle omega q=3 d=3", mism == 0,
                            std::to_string(checked) + " maps"));
    }
    {
        std::uint64_t mism = 0, checked = 0;
        const Field F = gf::make_field(3, 1);
        for (const auto& r : maps::enumerate_rationals(MapSpace(F, 1, SpaceKind::Rational))) {
            check_period_graph(dyn::graph_of_rational(F, r), true, mism, checked);
        }
        out.push_back(
            check("period-oracle u q=3 d=1", mism == 0, std::to_string(checked) + " maps"));
    }
    return out;
}

// --- factorial-moments -----------------------------------------------------

stats::StatsAccumulator exhaustive_poly_census(const Field& F, std::uint32_t d) {
    stats::AccumulatorConfig cfg;
    if (d >= 2) cfg.interval = stats::interval_for_degree(d);
    std::ostringstream id;
    id << "poly q=" << F.order() << " d=" << d;
    stats::StatsAccumulator acc(id.str(), cfg);
    const MapSpace space(F, d, SpaceKind::Polynomial);
    const std::uint64_t n = space.raw_size_checked();
    for (std::uint64_t i = 0; i < n; ++i) {
        const auto f = *space.poly_at(i);
        acc.absorb(dyn::cycle_decomposition(dyn::graph_of_polynomial(F, f)));
    }
    return acc;
}

std::vector<NamedVerdict> suite_factorial_moments(std::uint64_t) {
    std::vector<NamedVerdict> out;
    for (std::uint64_t q : {5, 7}) {
        const Field F = gf::make_field(q, 1);
        for (std::uint32_t d = 2; d <= 4; ++d) {
            const auto acc = exhaustive_poly_census(F, d);
            bool ok = true;
            std::string bad;
            for (const auto& spec : stats::enumerate_moment_specs(3, d)) {
                const BigRat emp = acc.factorial_moment(spec);
                const BigRat exact = stats::exact_factorial_moment(q, spec);
                if (emp != exact) {
                    ok = false;
                    bad = spec.label() + ": " + fmt(emp) + " vs " + fmt(exact);
                    break;
                }
            }
            std::ostringstream name;
            name << "factorial-moments q=" << q << " d=" << d;
            out.push_back(check(name.str(), ok, ok ? "all specs with m<=d, b<=3 exact" : bad));
        }
    }
    return out;
}

// --- bonferroni -------------------------------------------------------------

std::vector<NamedVerdict> suite_bonferroni(std::uint64_t) {
    std::vector<NamedVerdict> out;
    const std::tuple<std::uint64_t, std::uint32_t, std::uint64_t> cases[] = {
        {5, 4, 2}, {7, 4, 2}, {7, 6, 2}, {7, 6, 3}};
    std::map<std::pair<std::uint64_t, std::uint32_t>, stats::StatsAccumulator> census;
    for (auto [q, d, p] : cases) {
        const auto key = std::make_pair(q, d);
        auto it = census.find(key);
        if (it == census.end()) {
            const Field F = gf::make_field(q, 1);
            it = census.emplace(key, exhaustive_poly_census(F, d)).first;
        }
        const BigRat emp = it->second.empirical_delta(static_cast<std::uint32_t>(p));
        const Verdict v = stats::bonferroni_check(q, d, p, emp);
        std::ostringstream name;
        name << "bonferroni q=" << q << " d=" << d << " p=" << p;
        std::ostringstream detail;
        detail << "E(delta)=" << fmt(emp) << " in [S1-S2, S1]=["
               << fmt(stats::first_bonferroni(q, p) - stats::second_bonferroni(q, p)) << ", "
               << fmt(stats::first_bonferroni(q, p)) << "]";
        out.push_back(NamedVerdict{name.str(), v, detail.str()});
    }
    return out;
}

// --- lemma2: tuple counting -------------------------------------------------

// Ordered r-tuples of distinct k-cycles of g, pairwise disjointness verified
// explicitly through the indicator query.
std::uint64_t ordered_tuple_count(const dyn::FunctionalGraph& g, const dyn::CycleStructure& cs,
                                  std::uint32_t k, std::uint32_t r) {
    std::vector<const std::vector<std::uint32_t>*> k_cycles;
    for (const auto& c : cs.cycles) {
        if (c.size() == k) k_cycles.push_back(&c);
    }
    std::uint64_t count = 0;
    std::vector<std::size_t> idx(r, 0);
    std::function<void(std::uint32_t)> rec = [&](std::uint32_t depth) {
        if (depth == r) {
            std::vector<std::vector<std::uint32_t>> chosen;
            for (std::size_t i : idx) chosen.push_back(*k_cycles[i]);
            std::set<std::size_t> distinct(idx.begin(), idx.end());
            if (distinct.size() != r) return;  // reuse of a cycle
            try {
                if (dyn::has_cycles(g, dyn::make_indicator_query(chosen))) ++count;
            } catch (const std::invalid_argument&) {
                // overlapping cycles cannot occur inside one decomposition
            }
            return;
        }
        for (idx[depth] = 0; idx[depth] < k_cycles.size(); ++idx[depth]) rec(depth + 1);
    };
    if (!k_cycles.empty()) rec(0);
    return count;
}

std::vector<NamedVerdict> suite_lemma2(std::uint64_t seed) {
    SplitMix64 rng(seed, 0x22);
    const std::uint32_t n = 12;
    std::uint64_t mismatches = 0;
    std::uint64_t checked = 0;
    for (int i = 0; i < 10000; ++i) {
        const auto g = dyn::random_mapping(n, rng);
        const auto cs = dyn::cycle_decomposition(g);
        for (const auto& [k, ck] : cs.multiplicities) {
            for (std::uint32_t r = 1; r <= 3; ++r) {
                BigInt expected = 1;
                for (std::uint32_t j = 0; j < r; ++j) {
                    expected *= (BigInt(ck) - j);
                }
                if (expected < 0) expected = 0;
                const std::uint64_t got = ordered_tuple_count(g, cs, k, r);
                if (BigInt(got) != expected) ++mismatches;
                ++checked;
            }
        }
    }
    return {check("lemma2 n=12 tuples r<=3", mismatches == 0,
                  std::to_string(checked) + " tuple counts over 10000 mappings")};
}

// --- observation1 ------------------------------------------------------------

std::vector<NamedVerdict> suite_observation1(std::uint64_t) {
    std::vector<NamedVerdict> out;
    {
        // All 256 mappings on 4 points, conditioned on the cyclic set.
        const std::uint32_t n = 4;
        std::map<std::vector<std::uint32_t>, std::map<std::vector<std::uint32_t>, std::uint64_t>>
            by_cyclic_set;
        for (std::uint32_t code = 0; code < 256; ++code) {
            dyn::FunctionalGraph g;
            g.successor = {(code >> 0) & 3u, (code >> 2) & 3u, (code >> 4) & 3u,
                           (code >> 6) & 3u};
            const auto cs = dyn::cycle_decomposition(g);
            const auto cyclic = cs.cyclic_vertices();
            std::vector<std::uint32_t> images;
            for (std::uint32_t v : cyclic) images.push_back(g.successor[v]);
            ++by_cyclic_set[cyclic][images];
        }
        bool uniform = true;
        std::uint64_t factorial[] = {1, 1, 2, 6, 24};
        for (const auto& [cyclic, sigma_counts] : by_cyclic_set) {
            const std::uint64_t perms = factorial[cyclic.size()];
            if (sigma_counts.size() != perms) {
                uniform = false;
                break;
            }
            std::set<std::uint64_t> counts;
            for (const auto& [sigma, c] : sigma_counts) counts.insert(c);
            if (counts.size() != 1) {
                uniform = false;
                break;
            }
        }
        out.push_back(check("observation1 mappings n=4", uniform,
                            std::to_string(by_cyclic_set.size()) + " cyclic sets, each uniform"));
        (void)n;
    }
    {
        // Degree-1 polynomials over F_5: every map permutes all of F_5, yet
        // only 20 of the 120 permutations can occur.
        const Field F = gf::make_field(5, 1);
        std::set<std::vector<std::uint32_t>> realized;
        bool full_cyclic = true;
        for (const auto& f :
             maps::enumerate_polynomials(MapSpace(F, 1, SpaceKind::Polynomial))) {
            const auto g = dyn::graph_of_polynomial(F, f);
            const auto cs = dyn::cycle_decomposition(g);
            if (cs.Z != 5) full_cyclic = false;
            realized.insert(g.successor);
        }
        const bool ok = full_cyclic && realized.size() < 120;
        out.push_back(check("observation1 poly counterexample q=5 d=1", ok,
                            std::to_string(realized.size()) + " of 120 permutations realized"));
    }
    return out;
}

// --- landau -------------------------------------------------------------------

// Brute force over integer partitions: max lcm of the parts.
BigInt landau_by_partitions(std::uint32_t m) {
    BigInt best = 1;
    std::vector<std::uint32_t> parts;
    std::function<void(std::uint32_t, std::uint32_t)> rec = [&](std::uint32_t remaining,
                                                                std::uint32_t max_part) {
        if (remaining == 0) {
            BigInt l = 1;
            for (std::uint32_t part : parts) {
                const BigInt g = boost::multiprecision::gcd(l, BigInt(part));
                l = l / g * part;
            }
            if (l > best) best = l;
            return;
        }
        for (std::uint32_t part = std::min(remaining, max_part); part >= 1; --part) {
            parts.push_back(part);
            rec(remaining - part, part);
            parts.pop_back();
        }
    };
    rec(m, m);
    return best;
}

std::vector<NamedVerdict> suite_landau(std::uint64_t seed) {
    std::vector<NamedVerdict> out;
    {
        bool ok = true;
        std::string bad;
        for (std::uint32_t m = 1; m <= 12; ++m) {
            const BigInt got = dyn::landau_max_order(m);
            const BigInt expected = landau_by_partitions(m);
            if (got != expected) {
                ok = false;
                bad = "g(" + std::to_string(m) + ") = " + to_decimal(got) + " vs partition max " +
                      to_decimal(expected);
                break;
            }
        }
        out.push_back(check("landau values m<=12", ok,
                            ok ? "matches partition brute force; g(5)=6, g(7)=12" : bad));
    }
    {
        SplitMix64 rng(seed, 0x33);
        const auto table = dyn::landau_up_to(12);
        std::uint64_t violations = 0;
        for (int i = 0; i < 10000; ++i) {
            const auto g = dyn::random_mapping(12, rng);
            const auto cs = dyn::cycle_decomposition(g);
            if (cs.T > table[cs.Z]) ++violations;
        }
        out.push_back(check("landau bound T<=g(Z) n=12", violations == 0,
                            "10000 random mappings"));
    }
    return out;
}

// --- monic-avoiding -------------------------------------------------------------

std::vector<NamedVerdict> suite_monic_avoiding(std::uint64_t seed) {
    std::vector<NamedVerdict> out;
    SplitMix64 rng(seed, 0x44);
    for (std::uint64_t q : {3, 5, 7}) {
        const Field F = gf::make_field(q, 1);
        bool ok = true;
        std::string bad;
        for (std::uint32_t d = 1; d <= 3 && ok; ++d) {
            const std::uint32_t max_a = static_cast<std::uint32_t>(std::min<std::uint64_t>(q, 5));
            for (std::uint32_t a = 0; a <= max_a && ok; ++a) {
                std::vector<Elem> roots;
                if (a > 0) {
                    roots = maps::random_partial_permutation(F, a, rng).support;
                }
                // Enumeration oracle over all q^d monic polynomials.
                std::uint64_t brute = 0;
                std::uint64_t total = 1;
                for (std::uint32_t i = 0; i < d; ++i) total *= q;
                for (std::uint64_t idx = 0; idx < total; ++idx) {
                    std::vector<Elem> coeffs(d + 1);
                    std::uint64_t v = idx;
                    for (std::uint32_t i = 0; i < d; ++i) {
                        coeffs[i] = static_cast<Elem>(v % q);
                        v /= q;
                    }
                    coeffs[d] = 1;
                    const Poly f{coeffs};
                    bool has_root = false;
                    for (Elem x : roots) {
                        if (maps::eval_poly(F, f, x) == 0) {
                            has_root = true;
                            break;
                        }
                    }
                    if (!has_root) ++brute;
                }
                const BigInt closed = maps::count_monic_without_roots(F, d, roots);
                if (closed != BigInt(brute)) {
                    ok = false;
                    bad = "q=" + std::to_string(q) + " d=" + std::to_string(d) +
                          " |A|=" + std::to_string(a) + ": formula " + to_decimal(closed) +
                          " vs brute " + std::to_string(brute);
                }
                if (a <= d) {
                    const BigInt simple =
                        big_pow(BigInt(q), d - a) * big_pow(BigInt(q) - 1, a);
                    if (closed != simple) {
                        ok = false;
                        bad = "closed form mismatch at |A| <= d";
                    }
                }
            }
        }
        out.push_back(check("monic-avoiding q=" + std::to_string(q), ok,
                            ok ? "inclusion-exclusion matches enumeration, d<=3, |A|<=5" : bad));
    }
    return out;
}

}  // namespace

bool all_pass(const std::vector<NamedVerdict>& verdicts) {
    return std::all_of(verdicts.begin(), verdicts.end(), [](const NamedVerdict& v) {
        return v.verdict != Verdict::Fail;
    });
}

std::vector<std::string> suite_names() {
    return {"lemma1",            "lemma2",       "cardinalities",
            "period-oracle",     "bonferroni",   "factorial-moments",
            "observation1",      "landau",       "monic-avoiding"};
}

std::vector<NamedVerdict> run_suite(const std::string& name, std::uint64_t seed) {
    if (name == "lemma1") return suite_lemma1(seed);
    if (name == "lemma2") return suite_lemma2(seed);
    if (name == "cardinalities") return suite_cardinalities(seed);
    if (name == "period-oracle") return suite_period_oracle(seed);
    if (name == "bonferroni") return suite_bonferroni(seed);
    if (name == "factorial-moments") return suite_factorial_moments(seed);
    if (name == "observation1") return suite_observation1(seed);
    if (name == "landau") return suite_landau(seed);
    if (name == "monic-avoiding") return suite_monic_avoiding(seed);
    std::string msg = "unknown suite '" + name + "'; available:";
    for (const auto& s : suite_names()) msg += " " + s;
    throw std::invalid_argument(msg);
}

}  // namespace polycycle::cli
