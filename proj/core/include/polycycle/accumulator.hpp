#pragma once

#include "polycycle/bigint.hpp"
#include "polycycle/formulas.hpp"
#include "polycycle/functional_graph.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace polycycle::stats {

struct AccumulatorConfig {
    std::uint32_t hist_lengths = 5;  // b: cycle lengths tracked jointly
    std::uint32_t clip = 8;          // histogram cell `clip` pools c_k >= clip
    std::uint32_t moment_cap = 6;    // track every spec with weight <= this
    // Cycle-length interval J = [lo, hi] for the miss census, when set.
    std::optional<std::pair<std::uint32_t, std::uint32_t>> interval;

    bool operator==(const AccumulatorConfig&) const = default;
};

// J = [ceil(beta), floor(beta^2)] with beta = sqrt(d/2); requires d >= 2.
std::pair<std::uint32_t, std::uint32_t> interval_for_degree(std::uint32_t d);

// Summary of the interval census against its asymptotic reference.
struct IntervalExperiment {
    double beta = 0.0;
    std::uint32_t lo = 0, hi = 0;
    double miss_fraction = 0.0;  // maps with no cycle length in J
    double mu_hat = 0.0;         // mean of N = sum_{k in J} c_k
    double var_hat = 0.0;
    double predicted_mu = 0.0;   // log beta
};

// Commutative-monoid census over one map ensemble.  Every field merges by
// exact addition (the log-period sum is kept as a 2^-32 fixed-point integer),
// so merge results are independent of partitioning and merge order.
class StatsAccumulator {
public:
    StatsAccumulator(std::string ensemble, AccumulatorConfig config);

    void absorb(const dyn::CycleStructure& cs);
    void merge(const StatsAccumulator& other);

    const std::string& ensemble() const { return ensemble_; }
    const AccumulatorConfig& config() const { return config_; }

    std::uint64_t count() const { return count_; }
    double sum_log_period() const;
    double mean_log_period() const;
    const BigInt& sum_period() const { return sum_period_; }
    BigRat mean_period() const;

    std::uint64_t delta_hits(std::uint32_t k) const;
    std::uint64_t hat_delta_hits(std::uint32_t k) const;
    BigRat empirical_delta(std::uint32_t k) const;      // delta_hits / count
    BigRat empirical_hat_delta(std::uint32_t k) const;
    const std::map<std::uint32_t, std::uint64_t>& all_delta_hits() const { return delta_hits_; }
    const std::map<std::uint32_t, std::uint64_t>& all_hat_delta_hits() const {
        return hat_delta_hits_;
    }

    const std::vector<MomentSpec>& moment_specs() const { return specs_; }
    const BigInt& factorial_sum(const MomentSpec& spec) const;
    BigRat factorial_moment(const MomentSpec& spec) const;

    // Clipped joint histogram of (c_1, ..., c_b); keys have length b and the
    // value `clip` stands for "at least clip".
    const std::map<std::vector<std::uint32_t>, std::uint64_t>& joint_histogram() const {
        return hist_;
    }

    // Total-variation distance between the clipped empirical joint law of
    // (c_1, ..., c_b) and the matching clipped product of Poisson(1/k).
    double tv_distance_to_poisson(std::uint32_t b) const;

    std::uint64_t interval_misses() const { return interval_miss_; }
    // Requires the configured interval to be the one for this degree.
    IntervalExperiment interval_experiment(std::uint32_t d) const;

private:
    std::string ensemble_;
    AccumulatorConfig config_;
    std::vector<MomentSpec> specs_;

    std::uint64_t count_ = 0;
    BigInt sum_log_period_fp_ = 0;  // sum of round(log T * 2^32)
    BigInt sum_period_ = 0;
    std::map<std::vector<std::uint32_t>, std::uint64_t> hist_;
    std::map<std::uint32_t, std::uint64_t> delta_hits_;
    std::map<std::uint32_t, std::uint64_t> hat_delta_hits_;
    std::vector<BigInt> factorial_sums_;
    std::uint64_t interval_miss_ = 0;
    std::uint64_t interval_sum_n_ = 0;
    BigInt interval_sum_n2_ = 0;
};

// Every spec with r_k = 0 for k > lengths and weight <= cap, in a fixed
// deterministic order.
std::vector<MomentSpec> enumerate_moment_specs(std::uint32_t lengths, std::uint32_t cap);

}  // namespace polycycle::stats
