#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vduplex/cof.hpp"
#include "vduplex/core.hpp"
#include "vduplex/upper.hpp"

namespace vduplex {

/// Independent brute-force route for the coefficient search: enumerates every
/// nonzero Gaussian-integer pair with |Re|,|Im| <= linf_bound and applies the
/// same deterministic tie-break as best_integer_coeffs.
GaussianIntVec2 brute_force_coeffs(const ChannelVec2& h, Snr snr, std::int64_t linf_bound);

struct GridSearchResult {
    double value = 0.0;
    TimeShare optimizer;
};

/// Dense max-min search over the time-share simplex with the given step.
/// Oracle for the LP solver.
GridSearchResult simplex_grid_search(Snr snr, Gamma gamma, double step);

struct CheckResult {
    std::string suite;
    std::string name;
    bool pass = false;
    std::string detail;  // witness on failure, context on success
};

struct VerifyOptions {
    std::vector<std::string> suites;  // empty: run all
    std::vector<double> snr_db;       // optional override where a suite sweeps snr
    std::vector<int> k_values;        // optional override where a suite sweeps K
    std::uint64_t seed = 1;
    std::size_t mc_trials = 2000;
    std::size_t lattice_instances = 200;
};

std::vector<std::string> verify_suite_names();

/// Runs the property suites (closed-form gap corollaries, LP-vs-grid search,
/// recursion-vs-closed-form, pipeline exactness, lattice search oracle,
/// AF-noise Monte Carlo) and reports one result per check.
std::vector<CheckResult> run_verify(const VerifyOptions& options);

}  // namespace vduplex
