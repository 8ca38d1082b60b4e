#pragma once

#include <string>
#include <vector>

#include "vduplex/cof.hpp"
#include "vduplex/core.hpp"
#include "vduplex/rates.hpp"

namespace vduplex {

/// State of the AF noise accumulation recursion. r = SNR/(1+SNR) is the
/// per-stage noise gain; sigma_eff_sq[k-1] is the stationary effective noise
/// variance at the destination of the k-hop subnetwork, sum_{i=0..k} r^i.
struct AfNoiseState {
    double r = 0.0;
    std::vector<double> sigma_eff_sq;
};

AfNoiseState af_noise_state(Snr snr, int stages);

/// AF over K stages: signal attenuates by beta^2 per hop while noise follows
/// the r-recursion. Cross-checks the recursion against the closed form of the
/// rate to 1e-12 relative before returning.
SchemeRate rate_af_multihop(const ChannelConfig& cfg);

/// Wyner-Ziv distortion chain sigma_q_sq[k-1] = sigma^2_{q,k}, built backward
/// from the last stage, plus the per-stage relay message rates.
struct QmfDistortionChain {
    std::vector<double> sigma_q_sq;
    std::vector<double> relay_rate_bits;
};

QmfDistortionChain qmf_distortion_chain(Snr snr, int stages);

SchemeRate rate_qmf_multihop(const ChannelConfig& cfg);

/// Noise-level quantization pays one bit per stage: max(0, C(SNR) - K).
SchemeRate rate_qmf_noise_level_multihop(const ChannelConfig& cfg);

/// CoF without power allocation does not accumulate noise, so the rate is
/// independent of the number of stages.
CofSolution rate_cof_multihop(const ChannelConfig& cfg);

/// CoF with per-stage power allocation. Each strategy contributes a chain of
/// per-stage computation constraints (plus the final relay link for strategy
/// 2); the exact rate is the best strategy's most stringent constraint.
struct CofPaMultihop {
    double rate_bits = 0.0;            // clamped at 0
    double unclamped_bits = 0.0;
    int strategy_id = 1;
    std::string binding;
    bool strategy2_enabled = false;
    std::vector<double> strategy1_constraints;  // computation, k = 1..K
    std::vector<double> strategy2_constraints;  // computation k = 1..K, then relay link
    double strategy1_bits = 0.0;
    double strategy2_bits = 0.0;
    double asymptotic_bits = 0.0;      // log2(SNR) + K log2(gamma_max^2)
};

CofPaMultihop rate_cof_pa_multihop(const ChannelConfig& cfg);

/// Rate of one scheme at the configured number of stages (DPC allowed only
/// for stages == 1). Used by the sweeps.
double scheme_rate_multihop(Scheme scheme, const ChannelConfig& cfg);

/// R^(1) - R^(K) per scheme, together with the commonly quoted high-SNR gap
/// expressions. For AF the quoted (K-1)log2(1+gamma^2) drops a residual
/// log2((K+1)/2) term that does not vanish with SNR; `af_exact_limit` keeps it.
struct DegradationGaps {
    int stages = 1;
    double df = 0.0, af = 0.0, qmf = 0.0, cof = 0.0, cof_pa = 0.0;  // measured
    double af_nominal = 0.0;        // (K-1) log2(1+gamma^2)
    double af_exact_limit = 0.0;    // af_nominal + log2((K+1)/2)
    double qmf_nominal = 0.0;       // log2((K+1)/2)
    double cof_pa_nominal = 0.0;    // (K-1) log2(1/gamma_max^2)
};

DegradationGaps degradation_gaps(Snr snr, Gamma gamma, int stages);

}  // namespace vduplex
