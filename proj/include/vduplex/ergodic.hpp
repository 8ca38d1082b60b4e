#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vduplex/core.hpp"
#include "vduplex/rates.hpp"

namespace vduplex {

/// Monte Carlo setup for ergodic rates over random interference levels
/// gamma^2 ~ Unif[gamma_sq_lo, gamma_sq_hi].
struct McConfig {
    std::uint64_t seed = 1;
    std::size_t trials = 1;
    double gamma_sq_lo = 0.0;
    double gamma_sq_hi = 0.0;
    Snr snr;
    std::vector<int> k_values;
    int threads = 0;

    McConfig(Snr s) : snr(s) {}
};

/// Column labels, schemes first and the upper bound last.
std::vector<std::string> ergodic_labels();

struct ErgodicTable {
    std::vector<int> k_values;
    std::vector<std::string> labels;
    // mean[c][i], standard_error[c][i]: column c (ergodic_labels order) at k_values[i].
    std::vector<std::vector<double>> mean;
    std::vector<std::vector<double>> standard_error;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
};

/// Draws gamma^2 i.i.d. from the configured interval and averages every
/// scheme's multihop rate and the upper bound. Per-trial rates are stored by
/// trial index and reduced in order, so the result is bit-identical for a
/// given (seed, trials) regardless of the thread count.
ErgodicTable ergodic_rates(const McConfig& cfg);

}  // namespace vduplex
