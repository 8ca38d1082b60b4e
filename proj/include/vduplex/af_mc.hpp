#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "vduplex/core.hpp"

namespace vduplex {

struct AfNoiseMcConfig {
    Snr snr;
    Gamma gamma;
    int stages = 1;
    std::size_t slots = 0;   // total simulated slots per trial; 0 picks transient + 64
    std::size_t trials = 1;
    std::uint64_t seed = 1;
    int threads = 0;         // 0: VDUPLEX_THREADS or hardware default
};

struct AfNoiseMc {
    double r = 0.0;
    std::size_t transient_slots = 0;
    std::size_t measured_slots = 0;
    std::size_t trials = 0;
    std::vector<double> estimate;        // destination noise variance per k = 1..K
    std::vector<double> standard_error;  // across-trial standard error of the mean
    std::vector<double> closed_form;     // sum_{i=0..k} r^i
};

/// Slots to discard before the accumulated noise is effectively stationary:
/// ceil(50 / (1 - r)) with r = SNR/(1+SNR).
std::size_t af_transient_slots(Snr snr);

/// Signal-level Monte Carlo of the AF noise accumulation: unit-variance
/// complex Gaussian noise is injected at every relay each slot and propagated
/// with the power scaling beta of (SNR-constrained) AF and inter-relay
/// coupling gamma. Each relay applies a fresh scrambling rotation (uniform
/// over {1, j, -1, -j}) to its transmission each slot; a path touches any
/// given transmission at most once, so distinct propagation paths of the same
/// injection decorrelate exactly and the stationary destination variance of
/// the k-hop subnetwork is exactly sum_{i=0..k} r^i. Without scrambling the
/// coherent bounce paths add constructively and the variance exceeds that
/// geometric sum for K >= 2. The chain keeps beta*gamma < 1 by construction
/// and aborts if that is ever violated numerically.
AfNoiseMc simulate_af_noise(const AfNoiseMcConfig& cfg);

}  // namespace vduplex
