#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "vduplex/core.hpp"

namespace vduplex {

enum class Scheme { Dpc, Df, Af, Qmf, QmfN, Cof, CofPa };

const char* scheme_name(Scheme s);
std::optional<Scheme> scheme_from_name(std::string_view name);

/// A scheme's achievable rate together with the min-term that produced it.
/// `unclamped_bits` keeps the raw value when the rate was clamped at zero.
struct SchemeRate {
    Scheme scheme;
    Rate rate;
    double unclamped_bits = 0.0;
    std::string binding;
};

/// Dirty-paper coding, 2-hop only: achieves the cut-set bound C(SNR).
/// Throws for stages >= 2, where the required non-causal side information
/// does not exist at the source.
SchemeRate rate_dpc(const ChannelConfig& cfg);

/// Decode-and-forward. The relay removes interference either by treating it
/// as noise or by joint decoding; the destination link caps the rate at
/// C(SNR). Valid for any number of stages (the rate does not depend on K).
SchemeRate rate_df(const ChannelConfig& cfg);

/// Amplify-and-forward with successive decoding, 2-hop form.
SchemeRate rate_af(const ChannelConfig& cfg);

/// Quantize-remap-and-forward rate for an arbitrary quantization distortion
/// variance sigma_q_sq > 0 (Wyner-Ziv style successive decoding).
SchemeRate rate_qmf_given_distortion(const ChannelConfig& cfg, double sigma_q_sq);

/// Distortion that balances the two QMF rate constraints: (1+SNR)/SNR.
double qmf_optimal_distortion(Snr snr);

struct QmfSolution {
    SchemeRate rate;
    double sigma_q_sq = 0.0;  // distortion used
};

/// QMF at the optimal Wyner-Ziv distortion, 2-hop form.
QmfSolution rate_qmf(const ChannelConfig& cfg);

/// QMF with noise-level quantization (sigma_q^2 = 1): max(0, C(SNR) - 1).
SchemeRate rate_qmf_noise_level(const ChannelConfig& cfg);

}  // namespace vduplex
