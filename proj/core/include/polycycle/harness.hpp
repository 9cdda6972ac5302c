#pragma once

#include "polycycle/accumulator.hpp"
#include "polycycle/field.hpp"
#include "polycycle/spaces.hpp"
#include "polycycle/verify.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace polycycle::cli {

enum class SpaceChoice { Poly, Rational, Mapping };
enum class ModeChoice { Exhaustive, Sample };

std::string space_name(SpaceChoice s);
std::string mode_name(ModeChoice m);

struct RunConfig {
    std::uint64_t p = 5;
    std::uint32_t k = 1;
    std::optional<std::vector<gf::Elem>> modulus;
    std::uint32_t degree = 2;
    SpaceChoice space = SpaceChoice::Poly;
    ModeChoice mode = ModeChoice::Exhaustive;
    std::uint64_t draws = 100000;    // sample mode
    std::uint64_t mapping_n = 0;     // mapping space; 0 means "use q"
    std::uint64_t seed = 1;
    std::uint32_t workers = 1;
    std::uint32_t hist_lengths = 5;  // b
    std::uint32_t clip = 8;
    std::uint32_t moment_cap = 6;
    std::optional<double> xi;        // polynomial bound cutoff, default d/2
    std::optional<double> zeta;      // rational bound cutoff, default d/4
    double kappa = 10.0;             // rational sandwich window multiplier
    std::uint64_t enumeration_cap = maps::kDefaultEnumerationCap;
    std::uint64_t chunk = 1ULL << 16;
    std::string out_path;  // JSON report file ("" = stdout only)
    std::string csv_path;  // joint-histogram CSV ("" = none)
};

// The config echo embedded in every report.  Deliberately excludes workers
// and output paths: reports are byte-identical across worker counts and
// reproducible from their own echo.
std::string config_to_json(const RunConfig& config);
RunConfig config_from_json(const std::string& json_text);

struct RunReport {
    std::string json;  // canonical serialized report
    std::vector<NamedVerdict> verdicts;
    double wall_seconds = 0.0;  // console diagnostics only, never serialized

    bool all_pass() const { return cli::all_pass(verdicts); }
};

// Chunked deterministic census: the raw index range (exhaustive) or the draw
// range (sample) splits into fixed-size chunks, each processed independently
// (sampling keys its generator by (seed, chunk)), merged in ascending chunk
// order.  Worker count never changes the result.
stats::StatsAccumulator run_census(const RunConfig& config);

RunReport cmd_census(const RunConfig& config);
RunReport cmd_bounds(const RunConfig& config);
RunReport cmd_verify(const RunConfig& config, const std::string& suite);

}  // namespace polycycle::cli
