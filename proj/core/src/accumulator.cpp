#include "polycycle/accumulator.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace polycycle::stats {

std::pair<std::uint32_t, std::uint32_t> interval_for_degree(std::uint32_t d) {
    if (d < 2) throw std::invalid_argument("interval census needs degree >= 2");
    const double beta = std::sqrt(d / 2.0);
    auto lo = static_cast<std::uint32_t>(std::ceil(beta - 1e-9));
    auto hi = static_cast<std::uint32_t>(std::floor(d / 2.0 + 1e-9));
    return {std::max<std::uint32_t>(lo, 1), hi};
}

std::vector<MomentSpec> enumerate_moment_specs(std::uint32_t lengths, std::uint32_t cap) {
    std::vector<MomentSpec> out;
    MomentSpec cur;
    cur.r.assign(lengths, 0);
    // Odometer over r-vectors in lexicographic order, pruned by weight.
    std::function<void(std::uint32_t, std::uint32_t)> rec = [&](std::uint32_t k,
                                                                std::uint32_t used) {
        if (k == lengths) {
            out.push_back(cur);
            return;
        }
        for (std::uint32_t rk = 0; used + (k + 1) * rk <= cap; ++rk) {
            cur.r[k] = rk;
            rec(k + 1, used + (k + 1) * rk);
        }
        cur.r[k] = 0;
    };
    rec(0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

StatsAccumulator::StatsAccumulator(std::string ensemble, AccumulatorConfig config)
    : ensemble_(std::move(ensemble)),
      config_(config),
      specs_(enumerate_moment_specs(config.hist_lengths, config.moment_cap)),
      factorial_sums_(specs_.size(), BigInt(0)) {}

void StatsAccumulator::absorb(const dyn::CycleStructure& cs) {
    ++count_;
    sum_log_period_fp_ += static_cast<std::int64_t>(std::llround(cs.log_T * 4294967296.0));
    sum_period_ += cs.T;

    std::vector<std::uint32_t> cell(config_.hist_lengths, 0);
    for (std::uint32_t k = 1; k <= config_.hist_lengths; ++k) {
        cell[k - 1] = static_cast<std::uint32_t>(
            std::min<std::uint64_t>(cs.count(k), config_.clip));
    }
    ++hist_[cell];

    for (const auto& [k, c] : cs.multiplicities) {
        if (c > 0) ++delta_hits_[k];
        if (cs.count_excluding_infinity(k) > 0) ++hat_delta_hits_[k];
    }

    for (std::size_t s = 0; s < specs_.size(); ++s) {
        BigInt prod = 1;
        const auto& r = specs_[s].r;
        for (std::uint32_t k = 1; k <= r.size() && prod != 0; ++k) {
            const std::uint64_t rk = r[k - 1];
            if (rk == 0) continue;
            const std::uint64_t ck = cs.count(k);
            for (std::uint64_t j = 0; j < rk; ++j) {
                if (j >= ck) {
                    prod = 0;
                    break;
                }
                prod *= (ck - j);
            }
        }
        factorial_sums_[s] += prod;
    }

    if (config_.interval) {
        const auto [lo, hi] = *config_.interval;
        std::uint64_t n = 0;
        for (std::uint32_t k = lo; k <= hi; ++k) n += cs.count(k);
        if (n == 0) ++interval_miss_;
        interval_sum_n_ += n;
        interval_sum_n2_ += BigInt(n) * n;
    }
}

void StatsAccumulator::merge(const StatsAccumulator& other) {
    if (ensemble_ != other.ensemble_ || !(config_ == other.config_)) {
        throw std::invalid_argument("merging accumulators from different censuses");
    }
    count_ += other.count_;
    sum_log_period_fp_ += other.sum_log_period_fp_;
    sum_period_ += other.sum_period_;
    for (const auto& [cell, c] : other.hist_) hist_[cell] += c;
    for (const auto& [k, c] : other.delta_hits_) delta_hits_[k] += c;
    for (const auto& [k, c] : other.hat_delta_hits_) hat_delta_hits_[k] += c;
    for (std::size_t s = 0; s < factorial_sums_.size(); ++s) {
        factorial_sums_[s] += other.factorial_sums_[s];
    }
    interval_miss_ += other.interval_miss_;
    interval_sum_n_ += other.interval_sum_n_;
    interval_sum_n2_ += other.interval_sum_n2_;
}

double StatsAccumulator::sum_log_period() const {
    return to_double(sum_log_period_fp_) * 0x1.0p-32;
}

double StatsAccumulator::mean_log_period() const {
    if (count_ == 0) throw std::logic_error("empty census");
    return sum_log_period() / static_cast<double>(count_);
}

BigRat StatsAccumulator::mean_period() const {
    if (count_ == 0) throw std::logic_error("empty census");
    return BigRat(sum_period_, BigInt(count_));
}

std::uint64_t StatsAccumulator::delta_hits(std::uint32_t k) const {
    auto it = delta_hits_.find(k);
    return it == delta_hits_.end() ? 0 : it->second;
}

std::uint64_t StatsAccumulator::hat_delta_hits(std::uint32_t k) const {
    auto it = hat_delta_hits_.find(k);
    return it == hat_delta_hits_.end() ? 0 : it->second;
}

BigRat StatsAccumulator::empirical_delta(std::uint32_t k) const {
    if (count_ == 0) throw std::logic_error("empty census");
    return BigRat(BigInt(delta_hits(k)), BigInt(count_));
}

BigRat StatsAccumulator::empirical_hat_delta(std::uint32_t k) const {
    if (count_ == 0) throw std::logic_error("empty census");
    return BigRat(BigInt(hat_delta_hits(k)), BigInt(count_));
}

const BigInt& StatsAccumulator::factorial_sum(const MomentSpec& spec) const {
    // Canonicalize to the tracked truncation: pad with zeros, reject specs
    // that reference lengths beyond it.
    MomentSpec canonical = spec;
    for (std::size_t k = config_.hist_lengths; k < canonical.r.size(); ++k) {
        if (canonical.r[k] != 0) {
            throw std::out_of_range("moment spec exceeds the histogram truncation");
        }
    }
    canonical.r.resize(config_.hist_lengths, 0);
    auto it = std::lower_bound(specs_.begin(), specs_.end(), canonical);
    if (it == specs_.end() || !(*it == canonical)) {
        throw std::out_of_range("moment spec outside the tracked set");
    }
    return factorial_sums_[static_cast<std::size_t>(it - specs_.begin())];
}

BigRat StatsAccumulator::factorial_moment(const MomentSpec& spec) const {
    if (count_ == 0) throw std::logic_error("empty census");
    return BigRat(factorial_sum(spec), BigInt(count_));
}

double StatsAccumulator::tv_distance_to_poisson(std::uint32_t b) const {
    if (b < 1 || b > config_.hist_lengths) throw std::invalid_argument("bad truncation b");
    if (count_ == 0) throw std::logic_error("empty census");
    const std::uint32_t M = config_.clip;

    // Marginalize the stored histogram down to the first b coordinates.
    std::map<std::vector<std::uint32_t>, std::uint64_t> emp;
    for (const auto& [cell, c] : hist_) {
        std::vector<std::uint32_t> key(cell.begin(), cell.begin() + b);
        emp[key] += c;
    }

    double l1 = 0.0;
    std::vector<std::uint32_t> cell(b, 0);
    for (;;) {
        const double p = clipped_poisson_mass(cell, M);
        auto it = emp.find(cell);
        const double e =
            it == emp.end() ? 0.0 : static_cast<double>(it->second) / static_cast<double>(count_);
        l1 += std::abs(e - p);
        std::uint32_t pos = 0;
        while (pos < b && ++cell[pos] > M) cell[pos++] = 0;
        if (pos == b) break;
    }
    return l1 / 2.0;
}

IntervalExperiment StatsAccumulator::interval_experiment(std::uint32_t d) const {
    if (!config_.interval) throw std::logic_error("no interval configured for this census");
    if (count_ == 0) throw std::logic_error("empty census");
    if (interval_for_degree(d) != *config_.interval) {
        throw std::invalid_argument("census interval does not match this degree");
    }
    IntervalExperiment out;
    out.beta = std::sqrt(d / 2.0);
    out.predicted_mu = std::log(out.beta);
    out.lo = config_.interval->first;
    out.hi = config_.interval->second;
    const double n = static_cast<double>(count_);
    out.miss_fraction = static_cast<double>(interval_miss_) / n;
    out.mu_hat = static_cast<double>(interval_sum_n_) / n;
    out.var_hat = to_double(interval_sum_n2_) / n - out.mu_hat * out.mu_hat;
    return out;
}

}  // namespace polycycle::stats
