#pragma once

#include "polycycle/bigint.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace polycycle::stats {

enum class Verdict { Pass, Fail, NotApplicable };

std::string verdict_name(Verdict v);

// (q)_len / q^len as an exact fraction; zero once len exceeds q.
BigRat falling_ratio(std::uint64_t q, std::uint64_t len);

// Number of distinct len-cycles on q points: (len-1)! C(q, len).
BigInt count_possible_cycles(std::uint64_t q, std::uint64_t len);

// First Bonferroni sum for "has a p-cycle": (1/p) (q)_p / q^p.
BigRat first_bonferroni(std::uint64_t q, std::uint64_t p);

// Second Bonferroni sum: (1/(2p^2)) (q)_2p / q^2p; requires 2p <= q.
BigRat second_bonferroni(std::uint64_t q, std::uint64_t p);

// Joint factorial-moment spec: r[k-1] falling-factorial factors for cycle
// length k; weight m = sum k r_k is the number of points the witnessing
// permutation moves.
struct MomentSpec {
    std::vector<std::uint32_t> r;

    std::uint32_t weight() const;
    std::string label() const;  // "r1=..,r2=.." style key

    bool operator==(const MomentSpec&) const = default;
    auto operator<=>(const MomentSpec&) const = default;
};

// Exact ensemble moment E prod (c_k)_{r_k} = (q)_m / q^m * prod k^-r_k,
// valid whenever the space degree is >= m.
BigRat exact_factorial_moment(std::uint64_t q, const MomentSpec& spec);

// prod_k e^(-1/k) / (m_k! k^(m_k)): the independent-Poisson joint mass.
double poisson_joint_pmf(const std::vector<std::uint64_t>& m);

// Reference mass of a clipped histogram cell under independent Poisson(1/k)
// coordinates: pmf below the clip, pooled tail mass at the clip value.
double clipped_poisson_mass(const std::vector<std::uint32_t>& cell, std::uint32_t clip);

// sum of log p / p over primes p <= xi.
double mertens_sum(double xi);

// One prime's contribution to the log-period lower bound.
struct PrimeTerm {
    std::uint64_t prime;
    double first;   // (log p / p) (q)_p / q^p
    double second;  // (log p / 2p^2) (q)_2p / q^2p
};

// Assembled lower bound for the ensemble mean of log T with prime cutoff xi:
// sum first - sum second.  hypothesis_ok records d >= degree_factor * xi
// (2 for polynomial spaces, 4 for rational ones); vacuous records an empty
// prime range.
struct LogPeriodBound {
    std::uint64_t q = 0;
    std::uint32_t d = 0;
    double xi = 0.0;
    bool hypothesis_ok = true;
    bool vacuous = true;
    std::vector<PrimeTerm> terms;
    double rhs = 0.0;
    double mertens = 0.0;  // diagnostic, same prime range
};

LogPeriodBound log_period_lower_bound(std::uint64_t q, std::uint32_t d, double xi,
                                      std::uint32_t degree_factor = 2);

// Exact sandwich verdict: lower <= value <= upper with both bounds exact
// fractions.  Not applicable unless d >= 2p.
Verdict bonferroni_check(std::uint64_t q, std::uint32_t d, std::uint64_t p,
                         const BigRat& empirical);

// Sandwich with the rational-map error window: main terms as in the
// polynomial case, slack kappa/q on both sides.  Not applicable unless
// d >= 4p.
struct SandwichWindow {
    double main_first = 0.0;
    double main_second = 0.0;
    double lower = 0.0;  // main_first - main_second - kappa/q
    double upper = 0.0;  // main_first + kappa/q
    double value = 0.0;
    double slack = 0.0;  // signed distance into the window (min margin)
    Verdict verdict = Verdict::NotApplicable;
};

SandwichWindow rational_sandwich_check(std::uint64_t q, std::uint32_t d, std::uint64_t p,
                                       double empirical_hat_delta, double kappa = 10.0);

}  // namespace polycycle::stats
