#include "vduplex/rates.hpp"

#include <algorithm>

namespace vduplex {

const char* scheme_name(Scheme s) {
    switch (s) {
        case Scheme::Dpc: return "DPC";
        case Scheme::Df: return "DF";
        case Scheme::Af: return "AF";
        case Scheme::Qmf: return "QMF";
        case Scheme::QmfN: return "QMF_N";
        case Scheme::Cof: return "CoF";
        case Scheme::CofPa: return "CoF_PA";
    }
    return "?";
}

std::optional<Scheme> scheme_from_name(std::string_view name) {
    if (name == "DPC") return Scheme::Dpc;
    if (name == "DF") return Scheme::Df;
    if (name == "AF") return Scheme::Af;
    if (name == "QMF") return Scheme::Qmf;
    if (name == "QMF_N") return Scheme::QmfN;
    if (name == "CoF") return Scheme::Cof;
    if (name == "CoF_PA") return Scheme::CofPa;
    return std::nullopt;
}

namespace {

SchemeRate make_rate(Scheme s, double bits, std::string binding) {
    SchemeRate r;
    r.scheme = s;
    r.unclamped_bits = bits;
    r.rate = Rate{std::max(0.0, bits)};
    r.binding = std::move(binding);
    return r;
}

void require_two_hop(const ChannelConfig& cfg, const char* op) {
    if (cfg.stages != 1)
        throw std::invalid_argument(std::string(op) + ": two-hop form, requires stages == 1");
}

}  // namespace

SchemeRate rate_dpc(const ChannelConfig& cfg) {
    if (cfg.stages != 1)
        throw std::domain_error(
            "rate_dpc: dirty-paper pre-cancellation needs non-causal knowledge of the "
            "interfering signal, which only the 2-hop network provides (stages == 1)");
    return make_rate(Scheme::Dpc, capacity_bits(cfg.snr.value), "cut-set");
}

SchemeRate rate_df(const ChannelConfig& cfg) {
    const double s = cfg.snr.value;
    const double g2 = cfg.gamma.value * cfg.gamma.value;
    const double cut = capacity_bits(s);
    const double treat_as_noise = std::log2(1.0 + s / (1.0 + g2 * s));
    const double joint = 0.5 * std::log2(1.0 + (1.0 + g2) * s);
    const double relay = std::max(treat_as_noise, joint);
    if (cut <= relay) return make_rate(Scheme::Df, cut, "cut-set");
    return make_rate(Scheme::Df, relay,
                     treat_as_noise >= joint ? "treat-as-noise" : "joint-decoding");
}

SchemeRate rate_af(const ChannelConfig& cfg) {
    require_two_hop(cfg, "rate_af");
    const double s = cfg.snr.value;
    const double g2 = cfg.gamma.value * cfg.gamma.value;
    const double arg = s * s * (1.0 + s) / ((1.0 + (1.0 + g2) * s) * (1.0 + 2.0 * s));
    return make_rate(Scheme::Af, std::log1p(arg) / M_LN2, "effective-noise");
}

SchemeRate rate_qmf_given_distortion(const ChannelConfig& cfg, double sigma_q_sq) {
    require_two_hop(cfg, "rate_qmf_given_distortion");
    if (!(sigma_q_sq > 0.0))
        throw std::domain_error("rate_qmf_given_distortion: sigma_q_sq must be > 0");
    const double s = cfg.snr.value;
    const double source = std::log2(1.0 + s / (1.0 + sigma_q_sq));
    const double binning = capacity_bits(s) - std::log2(1.0 + 1.0 / sigma_q_sq);
    if (source <= binning) return make_rate(Scheme::Qmf, source, "source-decoding");
    return make_rate(Scheme::Qmf, binning, "binning");
}

double qmf_optimal_distortion(Snr snr) { return (1.0 + snr.value) / snr.value; }

QmfSolution rate_qmf(const ChannelConfig& cfg) {
    require_two_hop(cfg, "rate_qmf");
    const double s = cfg.snr.value;
    // Closed form at the optimal distortion: log2(1 + SNR^2/(1+2 SNR)).
    const double arg = s * s / (1.0 + 2.0 * s);
    QmfSolution sol;
    sol.rate = make_rate(Scheme::Qmf, std::log1p(arg) / M_LN2, "wyner-ziv-optimum");
    sol.sigma_q_sq = qmf_optimal_distortion(cfg.snr);
    return sol;
}

SchemeRate rate_qmf_noise_level(const ChannelConfig& cfg) {
    require_two_hop(cfg, "rate_qmf_noise_level");
    return make_rate(Scheme::QmfN, capacity_bits(cfg.snr.value) - 1.0, "binning");
}

}  // namespace vduplex
