#pragma once

#include <cmath>
#include <stdexcept>

namespace vduplex {

/// Linear signal-to-noise power ratio. Every transmitter in the network is
/// subject to the same power constraint, so a single value describes all links.
struct Snr {
    double value;

    explicit Snr(double linear) : value(linear) {
        if (!(linear > 0.0) || !std::isfinite(linear))
            throw std::invalid_argument("Snr: linear value must be finite and > 0");
    }
    static Snr from_db(double db) { return Snr(std::pow(10.0, db / 10.0)); }

    double db() const { return 10.0 * std::log10(value); }

    /// True iff the cut-set upper bound C(SNR) is certified (requires SNR >= 1).
    bool meets_lemma1_condition() const { return value >= 1.0; }
};

/// Inter-relay interference amplitude gain, restricted to the nonnegative reals.
struct Gamma {
    double value;

    explicit Gamma(double v) : value(v) {
        if (!(v >= 0.0) || !std::isfinite(v))
            throw std::invalid_argument("Gamma: value must be finite and >= 0");
    }
};

/// Symmetric (K+1)-hop network: `stages` relay stages, all with the same snr
/// and inter-relay gain. stages == 1 is the basic 2-hop network.
struct ChannelConfig {
    Snr snr;
    Gamma gamma;
    int stages = 1;

    ChannelConfig(Snr s, Gamma g, int k = 1) : snr(s), gamma(g), stages(k) {
        if (k < 1) throw std::invalid_argument("ChannelConfig: stages must be >= 1");
    }
};

/// Information rate in bits per complex channel use. All logs in this library
/// are base 2.
struct Rate {
    double bits = 0.0;
};

inline double capacity_bits(double snr_linear) { return std::log2(1.0 + snr_linear); }

/// Point-to-point capacity C(SNR) = log2(1 + SNR).
inline Rate capacity(Snr snr) { return Rate{capacity_bits(snr.value)}; }

/// log+ : max(0, log2 x). Domain error for x <= 0.
inline double log_plus(double x) {
    if (!(x > 0.0)) throw std::domain_error("log_plus: argument must be > 0");
    return std::max(0.0, std::log2(x));
}

}  // namespace vduplex
