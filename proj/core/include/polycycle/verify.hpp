#pragma once

#include "polycycle/formulas.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace polycycle::cli {

struct NamedVerdict {
    std::string name;
    stats::Verdict verdict = stats::Verdict::NotApplicable;
    std::string detail;
};

bool all_pass(const std::vector<NamedVerdict>& verdicts);

// Built-in desk-scale verification suites, runnable from the CLI and reused
// verbatim by the acceptance tests.
//
//   lemma1             extension counts match q^(d-|A|)(q-1) exactly
//   lemma2             ordered disjoint k-cycle tuple counts match (c_k)_r
//   cardinalities      enumerated space sizes match the closed forms
//   period-oracle      lcm of cycle lengths equals the iterated period
//   bonferroni         exhaustive E(delta_p) sits in [S1-S2, S1] exactly
//   factorial-moments  exhaustive censuses match the exact moment formula
//   observation1       random mappings are conditionally uniform; degree-1
//                      polynomials are not
//   landau             T <= g(Z) always; g agrees with partition brute force
//   monic-avoiding     root-avoiding monic counts match enumeration
std::vector<std::string> suite_names();

// Throws std::invalid_argument (message lists the suites) on unknown names.
std::vector<NamedVerdict> run_suite(const std::string& name, std::uint64_t seed);

}  // namespace polycycle::cli
