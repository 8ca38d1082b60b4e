#include "vduplex/multihop.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace vduplex {

namespace {

SchemeRate make_rate(Scheme s, double bits, std::string binding) {
    SchemeRate r;
    r.scheme = s;
    r.unclamped_bits = bits;
    r.rate = Rate{std::max(0.0, bits)};
    r.binding = std::move(binding);
    return r;
}

// (1+S)^(K+1) - S^(K+1), evaluated as S^(K+1) * expm1((K+1) log1p(1/S)) to
// avoid the cancellation of two nearly equal powers at high SNR.
double power_gap_ratio(double s, int k) {
    return std::expm1(double(k + 1) * std::log1p(1.0 / s));  // ((1+S)^(K+1)-S^(K+1))/S^(K+1)
}

void check_dual_route(double a, double b, const char* what) {
    const double rel = std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
    if (rel > 1e-12)
        throw std::logic_error(std::string(what) +
                               ": recursion and closed form disagree beyond 1e-12");
}

}  // namespace

AfNoiseState af_noise_state(Snr snr, int stages) {
    if (stages < 1) throw std::invalid_argument("af_noise_state: stages must be >= 1");
    AfNoiseState st;
    st.r = snr.value / (1.0 + snr.value);
    st.sigma_eff_sq.resize(size_t(stages));
    double sigma = 1.0;  // destination thermal noise alone
    for (int k = 1; k <= stages; ++k) {
        sigma = st.r * sigma + 1.0;
        st.sigma_eff_sq[size_t(k - 1)] = sigma;
    }
    return st;
}

SchemeRate rate_af_multihop(const ChannelConfig& cfg) {
    const double s = cfg.snr.value;
    const double g2 = cfg.gamma.value * cfg.gamma.value;
    const int k = cfg.stages;

    const AfNoiseState st = af_noise_state(cfg.snr, k);
    const double beta_sq = s / (1.0 + (1.0 + g2) * s);
    const double snr_eff = std::pow(beta_sq, k) * s;
    const double recursion_bits = std::log1p(snr_eff / st.sigma_eff_sq.back()) / M_LN2;

    const double closed_arg =
        std::pow((1.0 + s) / (1.0 + (1.0 + g2) * s), k) / power_gap_ratio(s, k);
    const double closed_bits = std::log1p(closed_arg) / M_LN2;

    check_dual_route(recursion_bits, closed_bits, "rate_af_multihop");
    return make_rate(Scheme::Af, closed_bits, "effective-noise");
}

QmfDistortionChain qmf_distortion_chain(Snr snr, int stages) {
    if (stages < 1) throw std::invalid_argument("qmf_distortion_chain: stages must be >= 1");
    const double s = snr.value;
    const double a = (1.0 + s) / s;
    QmfDistortionChain chain;
    chain.sigma_q_sq.assign(size_t(stages), 0.0);
    chain.relay_rate_bits.assign(size_t(stages), 0.0);
    // Last stage quantizes at the Wyner-Ziv optimum; earlier stages absorb the
    // downstream distortion: sigma^2_{q,k-1} = a (1 + sigma^2_{q,k}).
    chain.sigma_q_sq[size_t(stages - 1)] = a;
    for (int k = stages - 1; k >= 1; --k)
        chain.sigma_q_sq[size_t(k - 1)] = a * (1.0 + chain.sigma_q_sq[size_t(k)]);
    for (int k = 1; k <= stages; ++k) {
        const double sq = chain.sigma_q_sq[size_t(k - 1)];
        chain.relay_rate_bits[size_t(k - 1)] = std::log2((1.0 + s + sq) / sq);
    }
    return chain;
}

SchemeRate rate_qmf_multihop(const ChannelConfig& cfg) {
    const double s = cfg.snr.value;
    const int k = cfg.stages;

    const QmfDistortionChain chain = qmf_distortion_chain(cfg.snr, k);
    const double chain_bits = std::log1p(s / (1.0 + chain.sigma_q_sq.front())) / M_LN2;
    const double closed_bits = std::log1p(1.0 / power_gap_ratio(s, k)) / M_LN2;

    check_dual_route(chain_bits, closed_bits, "rate_qmf_multihop");
    return make_rate(Scheme::Qmf, closed_bits, "wyner-ziv-chain");
}

SchemeRate rate_qmf_noise_level_multihop(const ChannelConfig& cfg) {
    return make_rate(Scheme::QmfN, capacity_bits(cfg.snr.value) - double(cfg.stages),
                     "binning");
}

CofSolution rate_cof_multihop(const ChannelConfig& cfg) {
    return rate_cof(ChannelConfig(cfg.snr, cfg.gamma, 1), PaVector(1.0, 1.0));
}

CofPaMultihop rate_cof_pa_multihop(const ChannelConfig& cfg) {
    const double s = cfg.snr.value;
    const double g = cfg.gamma.value;
    const int kk = cfg.stages;
    if (!(g > 0.0))
        throw std::domain_error("rate_cof_pa_multihop: gamma must be > 0 (use rate_cof)");

    const double up = std::ceil(g);
    const double down = std::floor(g);
    const double gm = gamma_max(cfg.gamma);

    CofPaMultihop sol;
    sol.strategy2_enabled = down >= 1.0;
    sol.asymptotic_bits = std::log2(s) + double(kk) * std::log2(gm * gm);

    // Strategy 1: beta_k = (g/up)^(K+1-k); stage-k computation constraint
    // log2(1/(1+up^(2k)) + (g/up)^(2k) S), non-increasing in k. The last relay
    // transmits at full power, so no relay-link constraint binds.
    double s1 = std::numeric_limits<double>::infinity();
    int s1_k = 1;
    for (int k = 1; k <= kk; ++k) {
        const double c = std::log2(1.0 / (1.0 + std::pow(up, 2.0 * k)) +
                                   std::pow(g / up, 2.0 * k) * s);
        sol.strategy1_constraints.push_back(c);
        if (c < s1) {
            s1 = c;
            s1_k = k;
        }
    }
    sol.strategy1_bits = s1;

    // Strategy 2: beta_k = (down/g)^(k-1); computation constraints
    // log2(1/(1+down^(2k)) + S) plus the final relay-to-destination link
    // log2(1 + (down/g)^(2K) S).
    double s2 = -std::numeric_limits<double>::infinity();
    int s2_k = 1;
    bool s2_relay = false;
    if (sol.strategy2_enabled) {
        s2 = std::numeric_limits<double>::infinity();
        for (int k = 1; k <= kk; ++k) {
            const double c = std::log2(1.0 / (1.0 + std::pow(down, 2.0 * k)) + s);
            sol.strategy2_constraints.push_back(c);
            if (c < s2) {
                s2 = c;
                s2_k = k;
            }
        }
        const double relay = std::log1p(std::pow(down / g, 2.0 * kk) * s) / M_LN2;
        sol.strategy2_constraints.push_back(relay);
        if (relay < s2) {
            s2 = relay;
            s2_relay = true;
        }
        sol.strategy2_bits = s2;
    }

    if (s1 >= s2) {
        sol.strategy_id = 1;
        sol.unclamped_bits = s1;
        sol.binding = "strategy1 computation k=" + std::to_string(s1_k);
    } else {
        sol.strategy_id = 2;
        sol.unclamped_bits = s2;
        sol.binding = s2_relay ? std::string("strategy2 relay-link")
                               : "strategy2 computation k=" + std::to_string(s2_k);
    }
    sol.rate_bits = std::max(0.0, sol.unclamped_bits);
    return sol;
}

double scheme_rate_multihop(Scheme scheme, const ChannelConfig& cfg) {
    switch (scheme) {
        case Scheme::Dpc:
            return rate_dpc(cfg).rate.bits;
        case Scheme::Df:
            return rate_df(cfg).rate.bits;
        case Scheme::Af:
            return cfg.stages == 1 ? rate_af(cfg).rate.bits : rate_af_multihop(cfg).rate.bits;
        case Scheme::Qmf:
            return cfg.stages == 1 ? rate_qmf(cfg).rate.rate.bits
                                   : rate_qmf_multihop(cfg).rate.bits;
        case Scheme::QmfN:
            return rate_qmf_noise_level_multihop(cfg).rate.bits;
        case Scheme::Cof:
            return rate_cof_multihop(cfg).rate.bits;
        case Scheme::CofPa:
            if (cfg.gamma.value == 0.0) return rate_cof_multihop(cfg).rate.bits;
            return rate_cof_pa_multihop(cfg).rate_bits;
    }
    throw std::logic_error("scheme_rate_multihop: unknown scheme");
}

DegradationGaps degradation_gaps(Snr snr, Gamma gamma, int stages) {
    if (stages < 1) throw std::invalid_argument("degradation_gaps: stages must be >= 1");
    const ChannelConfig base(snr, gamma, 1);
    const ChannelConfig multi(snr, gamma, stages);
    const double g2 = gamma.value * gamma.value;

    DegradationGaps gaps;
    gaps.stages = stages;
    gaps.df = rate_df(base).rate.bits - rate_df(multi).rate.bits;
    gaps.af = rate_af_multihop(base).rate.bits - rate_af_multihop(multi).rate.bits;
    gaps.qmf = rate_qmf_multihop(base).rate.bits - rate_qmf_multihop(multi).rate.bits;
    gaps.cof = rate_cof_multihop(base).rate.bits - rate_cof_multihop(multi).rate.bits;
    if (gamma.value > 0.0)
        gaps.cof_pa =
            rate_cof_pa_multihop(base).rate_bits - rate_cof_pa_multihop(multi).rate_bits;

    gaps.qmf_nominal = std::log2((stages + 1.0) / 2.0);
    gaps.af_nominal = (stages - 1.0) * std::log2(1.0 + g2);
    gaps.af_exact_limit = gaps.af_nominal + gaps.qmf_nominal;
    if (gamma.value > 0.0) {
        const double gm = gamma_max(gamma);
        gaps.cof_pa_nominal = (stages - 1.0) * std::log2(1.0 / (gm * gm));
    }
    return gaps;
}

}  // namespace vduplex
