#include <doctest.h>

#include <cmath>

#include "vduplex/multihop.hpp"
#include "vduplex/rates.hpp"
#include "vduplex/upper.hpp"
#include "vduplex/verify.hpp"

using namespace vduplex;

TEST_CASE("cut values at hand-checked time shares") {
    const Snr s(4.0);
    const Gamma g(0.5);
    const double c = capacity(s).bits;
    const double cb = capacity_bits((1.0 + 1.5 * 1.5) * 4.0 + 16.0);

    const auto half = cut_values(TimeShare(0.5, 0.5, 0.0, 0.0), s, g);
    CHECK(half.i1 == doctest::Approx(c).epsilon(1e-14));
    CHECK(half.i4 == doctest::Approx(c).epsilon(1e-14));
    CHECK(half.i2 == doctest::Approx(0.5 * cb).epsilon(1e-14));
    CHECK(half.i3 == doctest::Approx(0.5 * cb).epsilon(1e-14));

    const auto t3 = cut_values(TimeShare(0.0, 0.0, 1.0, 0.0), s, g);
    CHECK(t3.i1 == doctest::Approx(capacity_bits(8.0)).epsilon(1e-14));
    CHECK(t3.i2 == doctest::Approx(c).epsilon(1e-14));
    CHECK(t3.i3 == doctest::Approx(c).epsilon(1e-14));
    CHECK(t3.i4 == 0.0);

    // Swapping t1 and t2 swaps I2 and I3 and fixes I1, I4.
    const auto a = cut_values(TimeShare(0.7, 0.1, 0.15, 0.05), s, g);
    const auto b = cut_values(TimeShare(0.1, 0.7, 0.15, 0.05), s, g);
    CHECK(a.i1 == doctest::Approx(b.i1).epsilon(1e-14));
    CHECK(a.i4 == doctest::Approx(b.i4).epsilon(1e-14));
    CHECK(a.i2 == doctest::Approx(b.i3).epsilon(1e-14));
    CHECK(a.i3 == doctest::Approx(b.i2).epsilon(1e-14));
}

TEST_CASE("time share validation") {
    CHECK_THROWS_AS(TimeShare(0.5, 0.5, 0.1, -0.1), std::invalid_argument);
    CHECK_THROWS_AS(TimeShare(0.4, 0.4, 0.1, 0.2), std::invalid_argument);
}

TEST_CASE("lp value equals capacity for snr >= 1") {
    for (double s : {1.0, 2.0, 4.0, 31.62, 1000.0}) {
        for (double g : {0.0, 0.5, 1.0, 2.0, 3.0}) {
            const auto sol = solve_upper_bound(Snr(s), Gamma(g));
            CHECK(sol.value.bits == doctest::Approx(capacity(Snr(s)).bits).epsilon(1e-12));
            CHECK(sol.optimizer.t3 + sol.optimizer.t4 <= 1e-9);
            // The symmetric share predicted analytically attains the optimum.
            const auto symmetric = cut_values(TimeShare(0.5, 0.5, 0.0, 0.0), Snr(s), Gamma(g));
            CHECK(symmetric.min_value() == doctest::Approx(sol.value.bits).epsilon(1e-12));
            // And the returned optimizer really achieves the reported value.
            CHECK(cut_values(sol.optimizer, Snr(s), Gamma(g)).min_value() ==
                  doctest::Approx(sol.value.bits).epsilon(1e-9));
        }
    }
    CHECK(solve_upper_bound(Snr(4.0), Gamma(0.5)).value.bits ==
          doctest::Approx(2.32192809488736).epsilon(1e-12));
}

TEST_CASE("gamma = 0 makes the symmetric optimizer unique") {
    const auto sol = solve_upper_bound(Snr(2.0), Gamma(0.0));
    CHECK(sol.optimizer.t1 == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(sol.optimizer.t2 == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("lp vs dense grid search") {
    for (double s : {0.1, 0.5, 1.0, 4.0, 100.0}) {
        for (double g : {0.5, 1.0, 2.0}) {
            const auto lp = solve_upper_bound(Snr(s), Gamma(g));
            const auto grid = simplex_grid_search(Snr(s), Gamma(g), 0.02);
            CHECK(lp.value.bits >= grid.value - 1e-9);
            CHECK(lp.value.bits - grid.value <= (s >= 1.0 ? 2e-3 : 0.05));
        }
    }
}

TEST_CASE("below snr = 1 the lp can exceed the successive bound") {
    const auto lp = solve_upper_bound(Snr(0.1), Gamma(2.0));
    CHECK(lp.value.bits >= capacity(Snr(0.1)).bits - 1e-12);
}

TEST_CASE("multihop upper bound") {
    CHECK(upper_bound_multihop({Snr(3.0), Gamma(1.0), 5}).bound.bits ==
          doctest::Approx(2.0).epsilon(1e-14));
    CHECK(upper_bound_multihop({Snr(3.0), Gamma(1.0), 5}).certified);
    CHECK(upper_bound_multihop({Snr(1.0), Gamma(0.3), 1}).bound.bits ==
          doctest::Approx(1.0).epsilon(1e-14));

    const auto low = upper_bound_multihop({Snr(0.5), Gamma(1.0), 2});
    CHECK_FALSE(low.certified);
    CHECK(low.bound.bits ==
          doctest::Approx(solve_upper_bound(Snr(0.5), Gamma(1.0)).value.bits).epsilon(1e-12));
}

TEST_CASE("concavity inequality") {
    CHECK(check_concavity_inequality(Snr(1.0)));
    CHECK(check_concavity_inequality(Snr(100.0)));
    CHECK(check_concavity_inequality(Snr(1e-6)));
}

TEST_CASE("every scheme stays below the lp value") {
    for (double s : {0.5, 1.0, 15.0, 316.0}) {
        for (double g : {0.0, 0.7, 1.0, 2.2}) {
            const ChannelConfig cfg{Snr(s), Gamma(g), 1};
            const double ub = solve_upper_bound(Snr(s), Gamma(g)).value.bits + 1e-9;
            CHECK(rate_df(cfg).rate.bits <= ub);
            CHECK(rate_af(cfg).rate.bits <= ub);
            CHECK(rate_qmf(cfg).rate.rate.bits <= ub);
            CHECK(rate_qmf_noise_level(cfg).rate.bits <= ub);
            CHECK(rate_cof(cfg, PaVector(1.0, 1.0)).rate.bits <= ub);
            if (g > 0.0) CHECK(rate_cof_pa(cfg).best.rate.bits <= ub);
            CHECK(rate_dpc(cfg).rate.bits <= ub);
        }
    }
}
