#include "polycycle/harness.hpp"

#include "polycycle/functional_graph.hpp"
#include "polycycle/landau.hpp"
#include "polycycle/spaces.hpp"

#include <json.hpp>

#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace polycycle::cli {

using maps::MapSpace;
using maps::SpaceKind;
using nlohmann::json;
using stats::StatsAccumulator;
using stats::Verdict;

std::string space_name(SpaceChoice s) {
    switch (s) {
        case SpaceChoice::Poly: return "poly";
        case SpaceChoice::Rational: return "rational";
        case SpaceChoice::Mapping: return "mapping";
    }
    return "?";
}

std::string mode_name(ModeChoice m) {
    return m == ModeChoice::Exhaustive ? "exhaustive" : "sample";
}

namespace {

SpaceChoice space_from_name(const std::string& s) {
    if (s == "poly") return SpaceChoice::Poly;
    if (s == "rational") return SpaceChoice::Rational;
    if (s == "mapping") return SpaceChoice::Mapping;
    throw std::invalid_argument("unknown space '" + s + "' (poly|rational|mapping)");
}

ModeChoice mode_from_name(const std::string& s) {
    if (s == "exhaustive") return ModeChoice::Exhaustive;
    if (s == "sample") return ModeChoice::Sample;
    throw std::invalid_argument("unknown mode '" + s + "' (exhaustive|sample)");
}

gf::Field field_of(const RunConfig& config) {
    return gf::make_field(config.p, config.k, config.modulus);
}

std::uint64_t mapping_domain(const RunConfig& config) {
    if (config.mapping_n != 0) return config.mapping_n;
    return field_of(config).order();
}

json fraction_json(const BigRat& r) {
    json j;
    j["num"] = to_decimal(boost::multiprecision::numerator(r));
    j["den"] = to_decimal(boost::multiprecision::denominator(r));
    const double d = to_double(r);
    j["decimal"] = d;
    return j;
}

std::string ensemble_id(const RunConfig& config) {
    std::ostringstream id;
    id << space_name(config.space) << ":";
    if (config.space == SpaceChoice::Mapping) {
        id << "n=" << mapping_domain(config);
    } else {
        id << "q=" << field_of(config).order() << ",d=" << config.degree;
    }
    id << ":" << mode_name(config.mode);
    if (config.mode == ModeChoice::Sample) {
        id << "(draws=" << config.draws << ",seed=" << config.seed << ")";
    }
    return id.str();
}

stats::AccumulatorConfig accumulator_config(const RunConfig& config) {
    stats::AccumulatorConfig cfg;
    cfg.hist_lengths = config.hist_lengths;
    cfg.clip = config.clip;
    cfg.moment_cap = config.moment_cap;
    if (config.space != SpaceChoice::Mapping && config.degree >= 2) {
        cfg.interval = stats::interval_for_degree(config.degree);
    }
    return cfg;
}

// Raw index range to walk: enumeration grid size or draw count.
std::uint64_t census_total(const RunConfig& config) {
    if (config.mode == ModeChoice::Sample) {
        if (config.draws < 1) throw std::invalid_argument("sample mode needs draws >= 1");
        return config.draws;
    }
    if (config.space == SpaceChoice::Mapping) {
        const std::uint64_t n = mapping_domain(config);
        const BigInt raw = big_pow(BigInt(n), n);
        if (raw > config.enumeration_cap) {
            throw std::length_error("mapping space exceeds enumeration cap");
        }
        return raw.convert_to<std::uint64_t>();
    }
    const gf::Field F = field_of(config);
    const MapSpace space(F, config.degree,
                         config.space == SpaceChoice::Poly ? SpaceKind::Polynomial
                                                           : SpaceKind::Rational);
    return space.raw_size_checked(config.enumeration_cap);
}

}  // namespace

std::string config_to_json(const RunConfig& config) {
    json j;
    j["space"] = space_name(config.space);
    j["mode"] = mode_name(config.mode);
    if (config.space == SpaceChoice::Mapping) {
        j["n"] = mapping_domain(config);
    } else {
        const gf::Field F = field_of(config);
        j["p"] = config.p;
        j["k"] = config.k;
        j["modulus"] = F.modulus();  // chosen modulus, always echoed
        j["q"] = F.order();
        j["degree"] = config.degree;
    }
    if (config.mode == ModeChoice::Sample) j["draws"] = config.draws;
    j["seed"] = config.seed;
    j["b"] = config.hist_lengths;
    j["clip"] = config.clip;
    j["moment_cap"] = config.moment_cap;
    j["kappa"] = config.kappa;
    if (config.xi) j["xi"] = *config.xi;
    if (config.zeta) j["zeta"] = *config.zeta;
    j["enumeration_cap"] = config.enumeration_cap;
    j["chunk"] = config.chunk;
    return j.dump();
}

RunConfig config_from_json(const std::string& json_text) {
    const json j = json::parse(json_text);
    RunConfig config;
    config.space = space_from_name(j.at("space").get<std::string>());
    config.mode = mode_from_name(j.at("mode").get<std::string>());
    if (config.space == SpaceChoice::Mapping) {
        config.mapping_n = j.at("n").get<std::uint64_t>();
        config.p = 2;  // placeholder field, unused for mappings
        config.k = 1;
    } else {
        config.p = j.at("p").get<std::uint64_t>();
        config.k = j.at("k").get<std::uint32_t>();
        const auto mod = j.at("modulus").get<std::vector<gf::Elem>>();
        config.modulus = mod.empty() ? std::nullopt : std::optional(mod);
        config.degree = j.at("degree").get<std::uint32_t>();
    }
    if (j.contains("draws")) config.draws = j.at("draws").get<std::uint64_t>();
    config.seed = j.at("seed").get<std::uint64_t>();
    config.hist_lengths = j.at("b").get<std::uint32_t>();
    config.clip = j.at("clip").get<std::uint32_t>();
    config.moment_cap = j.at("moment_cap").get<std::uint32_t>();
    config.kappa = j.at("kappa").get<double>();
    if (j.contains("xi")) config.xi = j.at("xi").get<double>();
    if (j.contains("zeta")) config.zeta = j.at("zeta").get<double>();
    config.enumeration_cap = j.at("enumeration_cap").get<std::uint64_t>();
    config.chunk = j.at("chunk").get<std::uint64_t>();
    return config;
}

stats::StatsAccumulator run_census(const RunConfig& config) {
    const std::string id = ensemble_id(config);
    const stats::AccumulatorConfig acc_cfg = accumulator_config(config);

    std::optional<gf::Field> field;
    std::optional<MapSpace> space;
    std::uint64_t domain_n = 0;
    if (config.space == SpaceChoice::Mapping) {
        domain_n = mapping_domain(config);
        if (domain_n < 1) throw std::invalid_argument("mapping domain must be nonempty");
    } else {
        field = field_of(config);
        space.emplace(*field, config.degree,
                      config.space == SpaceChoice::Poly ? SpaceKind::Polynomial
                                                        : SpaceKind::Rational);
    }

    const std::uint64_t total = census_total(config);

    const std::uint64_t chunk = std::max<std::uint64_t>(1, config.chunk);
    const std::uint64_t nchunks = (total + chunk - 1) / chunk;

    auto run_chunk = [&](std::uint64_t c) -> StatsAccumulator {
        StatsAccumulator acc(id, acc_cfg);
        const std::uint64_t lo = c * chunk;
        const std::uint64_t hi = std::min(total, lo + chunk);
        if (config.mode == ModeChoice::Exhaustive) {
            for (std::uint64_t raw = lo; raw < hi; ++raw) {
                if (config.space == SpaceChoice::Poly) {
                    const auto f = *space->poly_at(raw);
                    acc.absorb(dyn::cycle_decomposition(dyn::graph_of_polynomial(*field, f)));
                } else if (config.space == SpaceChoice::Rational) {
                    const auto r = space->rational_at(raw);
                    if (!r) continue;
                    acc.absorb(dyn::cycle_decomposition(
                        dyn::graph_of_rational(*field, *r),
                        static_cast<std::uint32_t>(field->order())));
                } else {
                    dyn::FunctionalGraph g;
                    g.successor.resize(domain_n);
                    std::uint64_t v = raw;
                    for (std::uint64_t i = 0; i < domain_n; ++i) {
                        g.successor[i] = static_cast<std::uint32_t>(v % domain_n);
                        v /= domain_n;
                    }
                    acc.absorb(dyn::cycle_decomposition(g));
                }
            }
        } else {
            SplitMix64 rng(config.seed, c);
            for (std::uint64_t i = lo; i < hi; ++i) {
                if (config.space == SpaceChoice::Poly) {
                    const auto f = space->sample_poly(rng);
                    acc.absorb(dyn::cycle_decomposition(dyn::graph_of_polynomial(*field, f)));
                } else if (config.space == SpaceChoice::Rational) {
                    const auto r = space->sample_rational(rng);
                    acc.absorb(dyn::cycle_decomposition(
                        dyn::graph_of_rational(*field, r),
                        static_cast<std::uint32_t>(field->order())));
                } else {
                    acc.absorb(
                        dyn::cycle_decomposition(dyn::random_mapping(
                            static_cast<std::uint32_t>(domain_n), rng)));
                }
            }
        }
        return acc;
    };

    StatsAccumulator merged(id, acc_cfg);
    const std::uint32_t workers =
        std::max<std::uint32_t>(1, std::min<std::uint64_t>(config.workers, nchunks));
    if (workers == 1) {
        for (std::uint64_t c = 0; c < nchunks; ++c) merged.merge(run_chunk(c));
        return merged;
    }

    std::vector<std::optional<StatsAccumulator>> results(nchunks);
    std::atomic<std::uint64_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::uint32_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const std::uint64_t c = next.fetch_add(1);
                if (c >= nchunks) break;
                results[c] = run_chunk(c);
            }
        });
    }
    for (auto& t : pool) t.join();
    for (std::uint64_t c = 0; c < nchunks; ++c) merged.merge(*results[c]);
    return merged;
}

namespace {

json census_json(const RunConfig& config, const StatsAccumulator& acc) {
    json c;
    c["count"] = acc.count();
    c["mean_log_period"] = acc.mean_log_period();
    c["sum_log_period"] = acc.sum_log_period();
    c["mean_period"] = fraction_json(acc.mean_period());

    json hist = json::array();
    for (const auto& [cell, n] : acc.joint_histogram()) {
        json entry;
        entry["cells"] = cell;
        entry["count"] = n;
        hist.push_back(entry);
    }
    c["joint_histogram"] = hist;

    json delta = json::object();
    for (const auto& [k, hits] : acc.all_delta_hits()) {
        json d;
        d["hits"] = hits;
        d["fraction"] = static_cast<double>(hits) / static_cast<double>(acc.count());
        delta[std::to_string(k)] = d;
    }
    c["delta"] = delta;

    if (config.space == SpaceChoice::Rational) {
        json hat = json::object();
        for (const auto& [k, hits] : acc.all_hat_delta_hits()) {
            json d;
            d["hits"] = hits;
            d["fraction"] = static_cast<double>(hits) / static_cast<double>(acc.count());
            hat[std::to_string(k)] = d;
        }
        c["hat_delta"] = hat;
    }

    json tv = json::object();
    for (std::uint32_t b = 1; b <= config.hist_lengths; ++b) {
        tv[std::to_string(b)] = acc.tv_distance_to_poisson(b);
    }
    c["tv_poisson"] = tv;

    if (acc.config().interval) {
        const auto exp = acc.interval_experiment(config.degree);
        json iv;
        iv["beta"] = exp.beta;
        iv["lo"] = exp.lo;
        iv["hi"] = exp.hi;
        iv["miss_fraction"] = exp.miss_fraction;
        iv["mu_hat"] = exp.mu_hat;
        iv["var_hat"] = exp.var_hat;
        iv["predicted_mu"] = exp.predicted_mu;
        c["interval"] = iv;
    }

    if (config.space == SpaceChoice::Mapping) {
        const double logn = std::log(static_cast<double>(mapping_domain(config)));
        json diag;
        diag["log_sq_over_8"] = logn * logn / 8.0;  // reference scale for log T
        c["diagnostics"] = diag;
    }
    return c;
}

json verdicts_json(const std::vector<NamedVerdict>& verdicts) {
    json arr = json::array();
    for (const auto& v : verdicts) {
        json e;
        e["name"] = v.name;
        e["verdict"] = stats::verdict_name(v.verdict);
        e["detail"] = v.detail;
        arr.push_back(e);
    }
    return arr;
}

json chunks_json(const RunConfig& config) {
    json ch;
    const std::uint64_t chunk = std::max<std::uint64_t>(1, config.chunk);
    const std::uint64_t total = census_total(config);
    ch["size"] = chunk;
    ch["count"] = (total + chunk - 1) / chunk;
    return ch;
}

void write_csv(const RunConfig& config, const StatsAccumulator& acc) {
    if (config.csv_path.empty()) return;
    std::ofstream os(config.csv_path);
    if (!os) throw std::runtime_error("cannot open CSV output " + config.csv_path);
    for (std::uint32_t k = 1; k <= config.hist_lengths; ++k) {
        os << "m_" << k << ",";
    }
    os << "count,poisson_pmf\n";
    for (const auto& [cell, n] : acc.joint_histogram()) {
        for (const auto v : cell) os << v << ",";
        os << n << "," << stats::clipped_poisson_mass(cell, config.clip) << "\n";
    }
}

void write_report(const RunConfig& config, const std::string& json_text) {
    if (config.out_path.empty()) return;
    std::ofstream os(config.out_path);
    if (!os) throw std::runtime_error("cannot open report output " + config.out_path);
    os << json_text << "\n";
}

}  // namespace

RunReport cmd_census(const RunConfig& config) {
    const auto start = std::chrono::steady_clock::now();
    const StatsAccumulator acc = run_census(config);

    RunReport report;
    // E(T) >= E(log T) must hold on every census (the period dominates its
    // own logarithm pointwise).
    const bool dominates = to_double(acc.mean_period()) >= acc.mean_log_period();
    report.verdicts.push_back(NamedVerdict{"period-dominates-log-period",
                                           dominates ? Verdict::Pass : Verdict::Fail,
                                           ""});

    json j;
    j["kind"] = "census";
    j["config"] = json::parse(config_to_json(config));
    j["census"] = census_json(config, acc);
    j["chunks"] = chunks_json(config);
    j["verdicts"] = verdicts_json(report.verdicts);
    report.json = j.dump(2);

    write_report(config, report.json);
    write_csv(config, acc);
    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

RunReport cmd_bounds(const RunConfig& config) {
    if (config.space == SpaceChoice::Mapping) {
        throw std::invalid_argument("bounds need a polynomial or rational space");
    }
    const auto start = std::chrono::steady_clock::now();
    const gf::Field F = field_of(config);
    const std::uint64_t q = F.order();
    const std::uint32_t d = config.degree;

    const bool rational = config.space == SpaceChoice::Rational;
    const double cutoff = rational ? config.zeta.value_or(d / 4.0)
                                   : config.xi.value_or(d / 2.0);
    const auto bound =
        stats::log_period_lower_bound(q, d, cutoff, rational ? 4 : 2);

    const StatsAccumulator acc = run_census(config);
    const double empirical = acc.mean_log_period();

    RunReport report;
    {
        NamedVerdict v;
        v.name = "log-period-lower-bound";
        std::ostringstream detail;
        detail << "E(log T) = " << empirical << " vs rhs = " << bound.rhs;
        if (bound.vacuous) {
            detail << " (vacuous: empty prime range)";
            v.verdict = Verdict::Pass;
        } else if (!bound.hypothesis_ok) {
            detail << " (degree below hypothesis)";
            v.verdict = Verdict::NotApplicable;
        } else {
            v.verdict = empirical > bound.rhs ? Verdict::Pass : Verdict::Fail;
        }
        v.detail = detail.str();
        report.verdicts.push_back(v);
    }

    for (const auto& term : bound.terms) {
        const std::uint64_t p = term.prime;
        NamedVerdict v;
        std::ostringstream name;
        if (rational) {
            name << "sandwich-p" << p;
            const auto w = stats::rational_sandwich_check(
                q, d, p, to_double(acc.empirical_hat_delta(static_cast<std::uint32_t>(p))),
                config.kappa);
            v.verdict = w.verdict;
            std::ostringstream detail;
            detail << "hat-delta = " << w.value << " in [" << w.lower << ", " << w.upper << "]";
            v.detail = detail.str();
        } else {
            name << "bonferroni-p" << p;
            v.verdict = stats::bonferroni_check(
                q, d, p, acc.empirical_delta(static_cast<std::uint32_t>(p)));
            std::ostringstream detail;
            detail << "E(delta) = " << to_double(acc.empirical_delta(static_cast<std::uint32_t>(p)));
            v.detail = detail.str();
        }
        v.name = name.str();
        report.verdicts.push_back(v);
    }

    json bj;
    bj["q"] = q;
    bj["d"] = d;
    bj["cutoff"] = cutoff;
    bj["hypothesis_ok"] = bound.hypothesis_ok;
    bj["vacuous"] = bound.vacuous;
    bj["rhs"] = bound.rhs;
    bj["mertens_sum"] = bound.mertens;
    json terms = json::array();
    for (const auto& t : bound.terms) {
        json e;
        e["prime"] = t.prime;
        e["first"] = t.first;
        e["second"] = t.second;
        terms.push_back(e);
    }
    bj["terms"] = terms;
    bj["empirical_mean_log_period"] = empirical;

    json j;
    j["kind"] = "bounds";
    j["config"] = json::parse(config_to_json(config));
    j["bound"] = bj;
    j["census"] = census_json(config, acc);
    j["verdicts"] = verdicts_json(report.verdicts);
    report.json = j.dump(2);

    write_report(config, report.json);
    write_csv(config, acc);
    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

RunReport cmd_verify(const RunConfig& config, const std::string& suite) {
    const auto start = std::chrono::steady_clock::now();
    RunReport report;
    report.verdicts = run_suite(suite, config.seed);

    json j;
    j["kind"] = "verify";
    j["suite"] = suite;
    j["seed"] = config.seed;
    j["verdicts"] = verdicts_json(report.verdicts);
    report.json = j.dump(2);

    write_report(config, report.json);
    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace polycycle::cli
