#include "polycycle/harness.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

namespace {

using polycycle::cli::ModeChoice;
using polycycle::cli::RunConfig;
using polycycle::cli::RunReport;
using polycycle::cli::SpaceChoice;

void add_experiment_options(CLI::App* sub, RunConfig& config, std::string& space,
                            std::string& mode, std::vector<polycycle::gf::Elem>& modulus) {
    sub->add_option("--p", config.p, "field characteristic (prime)");
    sub->add_option("--k", config.k, "extension degree (q = p^k)");
    sub->add_option("--modulus", modulus,
                    "modulus coefficients over F_p, constant term first, monic degree k")
        ->delimiter(',');
    sub->add_option("--degree", config.degree, "map degree d");
    sub->add_option("--space", space, "ensemble: poly | rational | mapping");
    sub->add_option("--mode", mode, "traversal: exhaustive | sample");
    sub->add_option("--draws", config.draws, "number of draws in sample mode");
    sub->add_option("--n", config.mapping_n, "mapping domain size (defaults to q)");
    sub->add_option("--seed", config.seed, "seed; all randomness flows from it");
    sub->add_option("--workers", config.workers, "worker threads (never changes output)");
    sub->add_option("--b", config.hist_lengths, "cycle lengths tracked jointly");
    sub->add_option("--clip", config.clip, "histogram clip; cell value = clip pools c_k >= clip");
    sub->add_option("--moment-cap", config.moment_cap, "track factorial moments of weight <= cap");
    sub->add_option("--xi", config.xi, "prime cutoff for polynomial bounds (default d/2)");
    sub->add_option("--zeta", config.zeta, "prime cutoff for rational bounds (default d/4)");
    sub->add_option("--kappa", config.kappa, "rational sandwich window is kappa/q");
    sub->add_option("--cap", config.enumeration_cap, "max raw indices per exhaustive run");
    sub->add_option("--chunk", config.chunk, "indices per work chunk");
    sub->add_option("--out", config.out_path, "write the JSON report here");
    sub->add_option("--csv", config.csv_path,
                    "write the joint histogram CSV here (columns m_1..m_b,count,poisson_pmf)");
}

int finish(const RunReport& report) {
    std::cout << report.json << "\n";
    std::size_t failed = 0;
    for (const auto& v : report.verdicts) {
        if (v.verdict == polycycle::stats::Verdict::Fail) ++failed;
    }
    std::cerr << report.verdicts.size() << " checks, " << failed << " failed, "
              << report.wall_seconds << "s\n";
    return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "polycycle: cycle and period statistics of iterated polynomials and rational maps "
        "over finite fields"};
    app.require_subcommand(1);

    RunConfig config;
    std::string space = "poly";
    std::string mode = "exhaustive";
    std::string suite;
    std::vector<polycycle::gf::Elem> modulus;

    auto* census = app.add_subcommand(
        "census", "run an exhaustive or sampled cycle census and emit a JSON report");
    add_experiment_options(census, config, space, mode, modulus);

    auto* bounds = app.add_subcommand(
        "bounds", "compare a census against the assembled log-period lower bound");
    add_experiment_options(bounds, config, space, mode, modulus);

    auto* verify = app.add_subcommand("verify", "run one of the built-in verification suites");
    verify->add_option("--suite", suite, "suite name (see list on error)")->required();
    verify->add_option("--seed", config.seed, "seed for sampled checks");
    verify->add_option("--out", config.out_path, "write the JSON report here");

    CLI11_PARSE(app, argc, argv);

    try {
        config.space = [&] {
            if (space == "poly") return SpaceChoice::Poly;
            if (space == "rational") return SpaceChoice::Rational;
            if (space == "mapping") return SpaceChoice::Mapping;
            throw CLI::ValidationError("--space", "must be poly|rational|mapping");
        }();
        config.mode = [&] {
            if (mode == "exhaustive") return ModeChoice::Exhaustive;
            if (mode == "sample") return ModeChoice::Sample;
            throw CLI::ValidationError("--mode", "must be exhaustive|sample");
        }();
        if (!modulus.empty()) config.modulus = modulus;

        if (census->parsed()) return finish(polycycle::cli::cmd_census(config));
        if (bounds->parsed()) return finish(polycycle::cli::cmd_bounds(config));
        return finish(polycycle::cli::cmd_verify(config, suite));
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
