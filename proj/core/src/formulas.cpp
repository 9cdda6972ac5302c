#include "polycycle/formulas.hpp"

#include "polycycle/primes.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace polycycle::stats {

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::NotApplicable: return "not-applicable";
    }
    return "?";
}

BigRat falling_ratio(std::uint64_t q, std::uint64_t len) {
    return BigRat(falling_factorial(BigInt(q), len), big_pow(BigInt(q), len));
}

BigInt count_possible_cycles(std::uint64_t q, std::uint64_t len) {
    if (len < 1 || len > q) throw std::invalid_argument("cycle length must be in [1, q]");
    return factorial(len - 1) * binomial(BigInt(q), len);
}

BigRat first_bonferroni(std::uint64_t q, std::uint64_t p) {
    if (p > q) throw std::invalid_argument("cycle length exceeds field size");
    return falling_ratio(q, p) / p;
}

BigRat second_bonferroni(std::uint64_t q, std::uint64_t p) {
    if (2 * p > q) throw std::invalid_argument("needs 2p <= q");
    return falling_ratio(q, 2 * p) / (2 * p * p);
}

std::uint32_t MomentSpec::weight() const {
    std::uint32_t m = 0;
    for (std::size_t i = 0; i < r.size(); ++i) m += static_cast<std::uint32_t>(i + 1) * r[i];
    return m;
}

std::string MomentSpec::label() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (r[i] == 0) continue;
        if (!first) os << ",";
        os << "r" << (i + 1) << "=" << r[i];
        first = false;
    }
    if (first) os << "r=0";
    return os.str();
}

BigRat exact_factorial_moment(std::uint64_t q, const MomentSpec& spec) {
    const std::uint32_t m = spec.weight();
    BigInt kpow = 1;
    for (std::size_t i = 0; i < spec.r.size(); ++i) {
        kpow *= big_pow(BigInt(i + 1), spec.r[i]);
    }
    return falling_ratio(q, m) / BigRat(kpow);
}

double poisson_joint_pmf(const std::vector<std::uint64_t>& m) {
    double out = 1.0;
    for (std::size_t i = 0; i < m.size(); ++i) {
        const double k = static_cast<double>(i + 1);
        double cell = std::exp(-1.0 / k);
        for (std::uint64_t j = 1; j <= m[i]; ++j) {
            cell /= static_cast<double>(j) * k;
        }
        out *= cell;
    }
    return out;
}

double clipped_poisson_mass(const std::vector<std::uint32_t>& cell, std::uint32_t clip) {
    double out = 1.0;
    for (std::size_t i = 0; i < cell.size(); ++i) {
        const double k = static_cast<double>(i + 1);
        auto pmf = [&](std::uint32_t v) {
            double mass = std::exp(-1.0 / k);
            for (std::uint32_t j = 1; j <= v; ++j) mass /= static_cast<double>(j) * k;
            return mass;
        };
        if (cell[i] < clip) {
            out *= pmf(cell[i]);
        } else {
            double tail = 1.0;
            for (std::uint32_t v = 0; v < clip; ++v) tail -= pmf(v);
            out *= std::max(tail, 0.0);
        }
    }
    return out;
}

double mertens_sum(double xi) {
    if (xi < 0) throw std::invalid_argument("cutoff must be nonnegative");
    double sum = 0.0;
    for (std::uint64_t p : primes_up_to(static_cast<std::uint64_t>(xi))) {
        sum += std::log(static_cast<double>(p)) / static_cast<double>(p);
    }
    return sum;
}

LogPeriodBound log_period_lower_bound(std::uint64_t q, std::uint32_t d, double xi,
                                      std::uint32_t degree_factor) {
    LogPeriodBound out;
    out.q = q;
    out.d = d;
    out.xi = xi;
    out.hypothesis_ok = static_cast<double>(d) >= degree_factor * xi;
    if (xi < 2.0) return out;  // empty prime range
    for (std::uint64_t p : primes_up_to(static_cast<std::uint64_t>(xi))) {
        const double logp = std::log(static_cast<double>(p));
        PrimeTerm term;
        term.prime = p;
        term.first = logp / static_cast<double>(p) * to_double(falling_ratio(q, p));
        term.second = logp / (2.0 * static_cast<double>(p) * static_cast<double>(p)) *
                      to_double(falling_ratio(q, 2 * p));
        out.rhs += term.first - term.second;
        out.mertens += logp / static_cast<double>(p);
        out.terms.push_back(term);
    }
    out.vacuous = out.terms.empty();
    return out;
}

Verdict bonferroni_check(std::uint64_t q, std::uint32_t d, std::uint64_t p,
                         const BigRat& empirical) {
    if (d < 2 * p || 2 * p > q) return Verdict::NotApplicable;
    const BigRat s1 = first_bonferroni(q, p);
    const BigRat s2 = second_bonferroni(q, p);
    return (s1 - s2 <= empirical && empirical <= s1) ? Verdict::Pass : Verdict::Fail;
}

SandwichWindow rational_sandwich_check(std::uint64_t q, std::uint32_t d, std::uint64_t p,
                                       double empirical_hat_delta, double kappa) {
    SandwichWindow w;
    w.value = empirical_hat_delta;
    if (d < 4 * p) return w;
    w.main_first = to_double(falling_ratio(q, p) / p);
    w.main_second = to_double(falling_ratio(q, 2 * p) / (2 * p * p));
    const double window = kappa / static_cast<double>(q);
    w.lower = w.main_first - w.main_second - window;
    w.upper = w.main_first + window;
    w.slack = std::min(w.value - w.lower, w.upper - w.value);
    w.verdict = (w.slack >= 0.0) ? Verdict::Pass : Verdict::Fail;
    return w;
}

}  // namespace polycycle::stats
