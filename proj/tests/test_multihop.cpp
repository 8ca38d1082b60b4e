#include <doctest.h>

#include <cmath>

#include "vduplex/multihop.hpp"
#include "vduplex/upper.hpp"

using namespace vduplex;

namespace {
ChannelConfig cfg(double snr, double gamma, int k) { return {Snr(snr), Gamma(gamma), k}; }
}

TEST_CASE("af noise state follows the geometric recursion") {
    const auto st = af_noise_state(Snr(10.0), 3);
    CHECK(st.r == doctest::Approx(10.0 / 11.0).epsilon(1e-15));
    CHECK(st.sigma_eff_sq[0] == doctest::Approx(1.0 + st.r).epsilon(1e-14));
    CHECK(st.sigma_eff_sq[2] == doctest::Approx(3.48685199098422).epsilon(1e-12));
    // sigma^2_K = (1 - r^(K+1)) / (1 - r)
    CHECK(st.sigma_eff_sq[2] ==
          doctest::Approx((1.0 - std::pow(st.r, 4)) / (1.0 - st.r)).epsilon(1e-12));
}

TEST_CASE("af multihop closed form") {
    // K=2, gamma=0, snr=1: log2(8/7).
    CHECK(rate_af_multihop(cfg(1.0, 0.0, 2)).rate.bits ==
          doctest::Approx(0.192645077942396).epsilon(1e-12));
    // K=1 consistency with the two-hop module.
    for (double s : {0.5, 1.0, 15.0, 1000.0})
        for (double g : {0.0, 1.0, 2.0})
            CHECK(rate_af_multihop(cfg(s, g, 1)).rate.bits ==
                  doctest::Approx(rate_af(cfg(s, g, 1)).rate.bits).epsilon(1e-12));
    // High snr: degradation at least (K-1) log2(1+gamma^2).
    for (int k : {2, 4, 6}) {
        const double gap = rate_af_multihop(cfg(1e6, 1.5, 1)).rate.bits -
                           rate_af_multihop(cfg(1e6, 1.5, k)).rate.bits;
        CHECK(gap >= (k - 1) * std::log2(1.0 + 2.25) - 1e-9);
    }
}

TEST_CASE("qmf distortion chain") {
    const auto chain = qmf_distortion_chain(Snr(1.0), 3);
    CHECK(chain.sigma_q_sq[2] == doctest::Approx(2.0).epsilon(1e-15));  // (1+S)/S at S=1
    CHECK(chain.sigma_q_sq[1] == doctest::Approx(2.0 * 3.0).epsilon(1e-14));
    CHECK(chain.sigma_q_sq[0] == doctest::Approx(2.0 * 7.0).epsilon(1e-14));
    // sigma^2_{q,1} = sum_{i=1..K} ((1+S)/S)^i
    CHECK(chain.sigma_q_sq[0] == doctest::Approx(2.0 + 4.0 + 8.0).epsilon(1e-14));
    // Last-stage relay rate is exactly C(SNR).
    CHECK(chain.relay_rate_bits[2] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("qmf multihop closed form") {
    for (double s : {0.5, 1.0, 15.0, 1000.0})
        CHECK(rate_qmf_multihop(cfg(s, 0.7, 1)).rate.bits ==
              doctest::Approx(rate_qmf(cfg(s, 0.7, 1)).rate.rate.bits).epsilon(1e-12));
    // High snr degradation tends to log2((K+1)/2).
    for (int k : {2, 3, 6}) {
        const double gap = rate_qmf_multihop(cfg(1e6, 1.0, 1)).rate.bits -
                           rate_qmf_multihop(cfg(1e6, 1.0, k)).rate.bits;
        CHECK(gap == doctest::Approx(std::log2((k + 1.0) / 2.0)).epsilon(1e-4));
    }
}

TEST_CASE("qmf noise-level multihop") {
    CHECK(rate_qmf_noise_level_multihop(cfg(3.0, 1.0, 2)).rate.bits == 0.0);
    CHECK(rate_qmf_noise_level_multihop(cfg(1023.0, 1.0, 3)).rate.bits ==
          doctest::Approx(7.0).epsilon(1e-12));
    CHECK(rate_qmf_noise_level_multihop(cfg(3.0, 1.0, 1)).rate.bits ==
          doctest::Approx(rate_qmf_noise_level(cfg(3.0, 1.0, 1)).rate.bits).epsilon(1e-14));
}

TEST_CASE("cof multihop is stage independent") {
    for (double s : {1.0, 100.0}) {
        const double base = rate_cof_multihop(cfg(s, 1.0, 1)).rate.bits;
        CHECK(base == doctest::Approx(std::log2(0.5 + s)).epsilon(1e-12));
        CHECK(rate_cof_multihop(cfg(s, 1.0, 7)).rate.bits == base);
    }
    // Within half a bit of the upper bound at gamma = 1.
    for (double s : {1.0, 10.0, 1e4})
        for (int k : {1, 3, 6}) {
            const auto ub = upper_bound_multihop(cfg(s, 1.0, k));
            CHECK(ub.bound.bits - rate_cof_multihop(cfg(s, 1.0, k)).rate.bits <= 0.5);
        }
}

TEST_CASE("cof with pa over multiple stages") {
    // gamma=2, K=3: strategy 1 binds at k=K with constraint log2(1/65 + SNR).
    const auto r = rate_cof_pa_multihop(cfg(100.0, 2.0, 3));
    REQUIRE(r.strategy1_constraints.size() == 3);
    CHECK(r.strategy1_constraints[2] ==
          doctest::Approx(std::log2(1.0 / 65.0 + 100.0)).epsilon(1e-12));
    CHECK(r.rate_bits == doctest::Approx(std::log2(1.0 / 65.0 + 100.0)).epsilon(1e-12));
    CHECK(r.asymptotic_bits == doctest::Approx(std::log2(100.0)).epsilon(1e-12));

    // gamma=1: K-independent and equal to the no-PA rate.
    for (int k : {1, 2, 5}) {
        const auto g1 = rate_cof_pa_multihop(cfg(50.0, 1.0, k));
        CHECK(g1.rate_bits == doctest::Approx(std::log2(0.5 + 50.0)).epsilon(1e-12));
    }

    // gamma < 1 leaves only strategy 1.
    const auto low = rate_cof_pa_multihop(cfg(100.0, 0.8, 2));
    CHECK_FALSE(low.strategy2_enabled);
    CHECK(low.strategy_id == 1);

    CHECK_THROWS_AS(rate_cof_pa_multihop(cfg(100.0, 0.0, 2)), std::domain_error);
}

TEST_CASE("rates degrade monotonically in the stage count") {
    for (double s : {1.0, 15.0, 316.0}) {
        for (double g : {0.0, 0.8, 1.7}) {
            double prev_af = 1e300, prev_qmf = 1e300;
            for (int k = 1; k <= 8; ++k) {
                const double af = rate_af_multihop(cfg(s, g, k)).rate.bits;
                const double qmf = rate_qmf_multihop(cfg(s, g, k)).rate.bits;
                CHECK(af <= prev_af + 1e-12);
                CHECK(qmf <= prev_qmf + 1e-12);
                prev_af = af;
                prev_qmf = qmf;
            }
        }
    }
}

TEST_CASE("multihop rates respect the certified upper bound") {
    for (double s : {1.0, 31.62, 1000.0}) {
        for (double g : {0.3, 1.0, 2.5}) {
            for (int k : {1, 3, 6}) {
                const auto ub = upper_bound_multihop(cfg(s, g, k));
                REQUIRE(ub.certified);
                const double cap = ub.bound.bits + 1e-9;
                CHECK(rate_df(cfg(s, g, k)).rate.bits <= cap);
                CHECK(rate_af_multihop(cfg(s, g, k)).rate.bits <= cap);
                CHECK(rate_qmf_multihop(cfg(s, g, k)).rate.bits <= cap);
                CHECK(rate_qmf_noise_level_multihop(cfg(s, g, k)).rate.bits <= cap);
                CHECK(rate_cof_multihop(cfg(s, g, k)).rate.bits <= cap);
                CHECK(rate_cof_pa_multihop(cfg(s, g, k)).rate_bits <= cap);
            }
        }
    }
}

TEST_CASE("degradation gaps") {
    const auto gaps = degradation_gaps(Snr(1e4), Gamma(1.0), 3);
    CHECK(gaps.df == 0.0);
    CHECK(gaps.cof == 0.0);
    CHECK(gaps.qmf == doctest::Approx(0.999855744921659).epsilon(1e-10));
    CHECK(gaps.qmf_nominal == doctest::Approx(1.0).epsilon(1e-14));

    // The limits need snr >> (1+gamma^2)^K; at 80 dB every K <= 6 case has
    // converged. AF carries the extra log2((K+1)/2) term on top of
    // (K-1) log2(1+gamma^2).
    for (double g : {0.5, 1.0, 1.5}) {
        for (int k = 2; k <= 6; ++k) {
            const auto d = degradation_gaps(Snr(1e8), Gamma(g), k);
            CHECK(std::abs(d.qmf - d.qmf_nominal) <= 0.05);
            CHECK(std::abs(d.af - d.af_exact_limit) <= 0.05);
            CHECK(d.af >= d.af_nominal - 1e-9);
            CHECK(std::abs(d.cof_pa - d.cof_pa_nominal) <= 0.05);
        }
    }
    // At 40 dB the AF gap already exceeds its leading term but has not yet
    // reached the limit for large K.
    for (int k = 2; k <= 6; ++k) {
        const auto d = degradation_gaps(Snr(1e4), Gamma(1.5), k);
        CHECK(d.af >= d.af_nominal - 1e-9);
        CHECK(d.af <= d.af_exact_limit + 1e-6);
        CHECK(std::abs(d.cof_pa - d.cof_pa_nominal) <= 0.05);
        CHECK(std::abs(d.qmf - d.qmf_nominal) <= 0.05);
    }
}
