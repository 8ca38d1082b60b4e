#include "vduplex/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "vduplex/af_mc.hpp"
#include "vduplex/multihop.hpp"
#include "vduplex/pipeline.hpp"
#include "vduplex/rates.hpp"
#include "vduplex/rng.hpp"

namespace vduplex {

GaussianIntVec2 brute_force_coeffs(const ChannelVec2& h, Snr snr, std::int64_t linf_bound) {
    const QuadFormMatrix m = quadform_matrix(h, snr);
    GaussianIntVec2 best;
    double q_best = 0.0;
    bool found = false;
    for (std::int64_t r1 = -linf_bound; r1 <= linf_bound; ++r1)
        for (std::int64_t i1 = -linf_bound; i1 <= linf_bound; ++i1)
            for (std::int64_t r2 = -linf_bound; r2 <= linf_bound; ++r2)
                for (std::int64_t i2 = -linf_bound; i2 <= linf_bound; ++i2) {
                    const GaussianIntVec2 b{GaussianInt{r1, i1}, GaussianInt{r2, i2}};
                    if (b.is_zero()) continue;
                    const double q = m.eval(b);
                    if (!found || better_candidate(q, b, q_best, best)) {
                        best = b;
                        q_best = q;
                        found = true;
                    }
                }
    return canonical_unit_rep(best);
}

GridSearchResult simplex_grid_search(Snr snr, Gamma gamma, double step) {
    const auto a = cut_coefficients(snr, gamma);
    const long n = std::lround(1.0 / step);
    const double h = 1.0 / double(n);

    GridSearchResult best;
    best.value = -1.0;
    std::array<long, 4> best_n{long(n), 0, 0, 0};
    for (long n1 = 0; n1 <= n; ++n1) {
        for (long n2 = 0; n2 + n1 <= n; ++n2) {
            const double t1 = n1 * h, t2 = n2 * h;
            // i_m(t3) = base_m + slope_m * t3 along the remaining edge.
            double base[4], slope[4];
            for (int m = 0; m < 4; ++m) {
                const double rest = 1.0 - t1 - t2;
                base[m] = a[m][0] * t1 + a[m][1] * t2 + a[m][3] * rest;
                slope[m] = a[m][2] - a[m][3];
            }
            for (long n3 = 0; n3 + n2 + n1 <= n; ++n3) {
                const double t3 = n3 * h;
                double v = base[0] + slope[0] * t3;
                v = std::min(v, base[1] + slope[1] * t3);
                v = std::min(v, base[2] + slope[2] * t3);
                v = std::min(v, base[3] + slope[3] * t3);
                if (v > best.value) {
                    best.value = v;
                    best_n = {n1, n2, n3, n - n1 - n2 - n3};
                }
            }
        }
    }
    best.optimizer = TimeShare(best_n[0] * h, best_n[1] * h, best_n[2] * h,
                               std::max(0.0, 1.0 - (best_n[0] + best_n[1] + best_n[2]) * h));
    return best;
}

namespace {

class Report {
  public:
    explicit Report(std::vector<CheckResult>& sink, std::string suite)
        : sink_(sink), suite_(std::move(suite)) {}

    void check(const std::string& name, bool pass, const std::string& detail = "") {
        sink_.push_back(CheckResult{suite_, name, pass, detail});
    }

    template <typename T>
    static std::string str(const T& v) {
        std::ostringstream os;
        os << v;
        return os.str();
    }

  private:
    std::vector<CheckResult>& sink_;
    std::string suite_;
};

std::string witness(double snr, double gamma, int k = 0) {
    std::ostringstream os;
    os << "snr=" << snr << " gamma=" << gamma;
    if (k > 0) os << " K=" << k;
    return os.str();
}

std::vector<double> default_gamma_grid() {
    std::vector<double> g;
    for (int i = 0; i <= 12; ++i) g.push_back(0.25 * i);
    return g;
}

void suite_cor1(Report& rep) {
    const double snrs[] = {1.0, 2.0, 10.0, 31.62, 1000.0};
    bool pass = true;
    std::string bad;
    for (double s : snrs) {
        const ChannelConfig cfg{Snr(s), Gamma(0.0), 1};
        const double gap = rate_dpc(cfg).rate.bits - rate_qmf(cfg).rate.rate.bits;
        if (gap < -1e-12 || gap > 1.0 + 1e-12) {
            pass = false;
            bad = witness(s, 0.0) + " gap=" + Report::str(gap);
        }
    }
    rep.check("dpc-qmf gap within [0,1]", pass, bad);
    const ChannelConfig hi{Snr(1000.0), Gamma(0.0), 1};
    const double gap = rate_dpc(hi).rate.bits - rate_qmf(hi).rate.rate.bits;
    rep.check("gap approaches 1 bit at snr=1000", std::abs(gap - 1.0) <= 0.01,
              "gap=" + Report::str(gap));
}

void suite_cor2(Report& rep) {
    const double snrs[] = {1.0, 2.0, 10.0, 31.62, 1000.0};
    bool pass = true;
    std::string bad;
    for (double s : snrs) {
        for (double g : default_gamma_grid()) {
            const ChannelConfig cfg{Snr(s), Gamma(g), 1};
            const double gap = rate_qmf(cfg).rate.rate.bits - rate_af(cfg).rate.bits;
            const double bound = std::log2(1.0 + g * g);
            if (gap < -1e-9 || gap > bound + 1e-9) {
                pass = false;
                bad = witness(s, g) + " gap=" + Report::str(gap);
            }
        }
    }
    rep.check("qmf-af gap within [0, log2(1+g^2)]", pass, bad);
}

void suite_cor3(Report& rep) {
    // Strict interior of the strong-interference region; at the boundary
    // gamma^2 = 0.5 the two rates provably differ by log2(2(1+S)/(1+2S)) in
    // QMF's favour at every finite SNR, checked below as an identity.
    const double snrs[] = {1000.0, 3162.28, 10000.0};
    bool pass = true;
    std::string bad;
    for (double s : snrs) {
        for (double gsq : {0.75, 1.0, 2.0, 4.0}) {
            const ChannelConfig cfg{Snr(s), Gamma(std::sqrt(gsq)), 1};
            const double cofp = rate_cof_pa(cfg).best.rate.bits;
            const double qmf = rate_qmf(cfg).rate.rate.bits;
            if (cofp < qmf) {
                pass = false;
                bad = witness(s, std::sqrt(gsq)) + " cofp=" + Report::str(cofp) +
                      " qmf=" + Report::str(qmf);
            }
        }
    }
    rep.check("cof-pa >= qmf for gamma^2 in {0.75,1,2,4}", pass, bad);

    bool bpass = true;
    std::string bbad;
    for (double s : snrs) {
        const ChannelConfig cfg{Snr(s), Gamma(std::sqrt(0.5)), 1};
        const double diff =
            rate_qmf(cfg).rate.rate.bits - rate_cof_pa(cfg).best.rate.bits;
        const double expected = std::log2(2.0 * (1.0 + s) / (1.0 + 2.0 * s));
        if (std::abs(diff - expected) > 1e-9) {
            bpass = false;
            bbad = witness(s, std::sqrt(0.5)) + " diff=" + Report::str(diff);
        }
    }
    rep.check("boundary gamma^2=0.5: qmf-cofp equals log2(2(1+S)/(1+2S))", bpass, bbad);
}

void suite_cor5(Report& rep, const std::vector<int>& ks) {
    // The limits need snr >> (1+gamma^2)^K before the rate arguments are
    // large; 80 dB covers every K <= 6, gamma <= 1.5 case comfortably.
    const Snr snr = Snr::from_db(80.0);
    bool pass = true;
    std::string bad;
    for (double g : {0.5, 1.0, 1.5}) {
        for (int k : ks) {
            if (k < 2 || k > 6) continue;
            const auto gaps = degradation_gaps(snr, Gamma(g), k);
            const bool ok = gaps.df == 0.0 && gaps.cof == 0.0 &&
                            std::abs(gaps.qmf - gaps.qmf_nominal) <= 0.05 &&
                            std::abs(gaps.af - gaps.af_exact_limit) <= 0.05 &&
                            std::abs(gaps.cof_pa - gaps.cof_pa_nominal) <= 0.05;
            if (!ok) {
                pass = false;
                bad = witness(snr.value, g, k);
            }
        }
    }
    rep.check("degradation gaps match high-snr limits within 0.05", pass, bad);
}

void suite_cor6(Report& rep, const std::vector<int>& ks) {
    bool pass = true;
    std::string bad;
    for (double s : {1.0, 3.16, 10.0, 31.6, 100.0, 1000.0, 10000.0}) {
        for (int k : ks) {
            const ChannelConfig cfg{Snr(s), Gamma(1.0), k};
            const auto ub = upper_bound_multihop(cfg);
            const double gap = ub.bound.bits - rate_cof_multihop(cfg).rate.bits;
            if (!(gap >= -1e-12 && gap <= 0.5)) {
                pass = false;
                bad = witness(s, 1.0, k) + " gap=" + Report::str(gap);
            }
        }
    }
    rep.check("upper - cof <= 0.5 bits at gamma=1", pass, bad);
}

void suite_lemma1(Report& rep, const std::vector<double>& snr_db) {
    bool value_pass = true, grid_pass = true;
    std::string value_bad, grid_bad;
    for (double db : snr_db) {
        const Snr snr = Snr::from_db(db);
        for (double g : {0.5, 1.0, 2.0}) {
            const auto lp = solve_upper_bound(snr, Gamma(g));
            if (snr.meets_lemma1_condition()) {
                const double c = capacity_bits(snr.value);
                const double t34 = lp.optimizer.t3 + lp.optimizer.t4;
                if (std::abs(lp.value.bits - c) > 1e-9 || t34 > 1e-9) {
                    value_pass = false;
                    value_bad = witness(snr.value, g) + " lp=" + Report::str(lp.value.bits);
                }
            }
            const auto grid = simplex_grid_search(snr, Gamma(g), 0.01);
            // The LP is an exact maximizer; the grid can only trail it.
            if (lp.value.bits < grid.value - 1e-9 ||
                lp.value.bits - grid.value > (snr.value >= 1.0 ? 2e-3 : 0.05)) {
                grid_pass = false;
                grid_bad = witness(snr.value, g) + " lp=" + Report::str(lp.value.bits) +
                           " grid=" + Report::str(grid.value);
            }
        }
    }
    rep.check("lp value equals C(snr) with t3+t4=0 for snr >= 1", value_pass, value_bad);
    rep.check("lp matches dense grid search", grid_pass, grid_bad);
}

void suite_lemma2(Report& rep) {
    bool pass = true;
    std::string bad;
    for (double s : {1e-6, 0.01, 0.5, 1.0, 4.0, 100.0, 1e6}) {
        if (!check_concavity_inequality(Snr(s))) {
            pass = false;
            bad = "snr=" + Report::str(s);
        }
    }
    rep.check("concavity inequality", pass, bad);
}

void suite_recursion(Report& rep, const std::vector<int>& ks) {
    bool pass = true;
    std::string bad;
    for (double s : {0.5, 1.0, 10.0, 100.0, 1e4}) {
        for (double g : {0.0, 0.5, 1.0, 2.0}) {
            for (int k : ks) {
                try {
                    // Both ops cross-assert recursion vs closed form internally.
                    rate_af_multihop(ChannelConfig(Snr(s), Gamma(g), k));
                    rate_qmf_multihop(ChannelConfig(Snr(s), Gamma(g), k));
                } catch (const std::logic_error& e) {
                    pass = false;
                    bad = witness(s, g, k) + ": " + e.what();
                }
            }
        }
    }
    rep.check("af/qmf recursion equals closed form (1e-12 relative)", pass, bad);
}

void suite_pipeline(Report& rep, const std::vector<int>& ks, std::uint64_t seed) {
    bool exact_pass = true, window_pass = true;
    std::string exact_bad, window_bad;
    std::uint64_t stream = seed;
    for (std::uint32_t p : {11u, 251u}) {
        const PrimeField field(p);
        for (int k : ks) {
            for (int inst = 0; inst < 20; ++inst) {
                Rng rng(splitmix64(stream));
                const std::uint32_t q = 1 + rng.below(p - 1);
                const std::size_t n = 40;
                std::vector<FieldVec> msgs(n, FieldVec(16));
                for (auto& w : msgs)
                    for (auto& v : w) v = rng.below(p);
                auto trace = run_pipeline(k, q, msgs, n + size_t(k) + 10, field);
                if (decode_forward_substitution(trace) != msgs) {
                    exact_pass = false;
                    exact_bad = "p=" + Report::str(p) + " K=" + Report::str(k) +
                                " q=" + Report::str(q);
                }
                FieldVec delta(16, 0);
                delta[rng.below(16)] = 1 + rng.below(p - 1);
                const std::size_t slot = 1 + k + rng.below(std::uint32_t(n - 1));
                corrupt_observation(trace, slot, delta);
                const auto prop = error_propagation_window(trace);
                if (prop.affected.size() > std::size_t(k) + 1 ||
                    prop.affected != prop.predicted) {
                    window_pass = false;
                    window_bad = "p=" + Report::str(p) + " K=" + Report::str(k) +
                                 " slot=" + Report::str(slot);
                }
            }
        }
    }
    rep.check("forward substitution recovers every message", exact_pass, exact_bad);
    rep.check("single corruption affects <= K+1 messages (window support)", window_pass,
              window_bad);
}

void suite_lattice(Report& rep, std::uint64_t seed, std::size_t instances) {
    bool exact_pass = true, never_worse = true;
    std::size_t certified = 0;
    std::string exact_bad, worse_bad;
    Rng rng(seed);
    for (std::size_t i = 0; i < instances; ++i) {
        const double snr = std::pow(10.0, rng.uniform(0.0, 4.0));
        const ChannelVec2 h{Cplx(rng.uniform(0.1, 4.0), 0.0),
                            Cplx(rng.uniform(0.1, 4.0), 0.0)};
        const auto fast = best_integer_coeffs(h, Snr(snr));
        const auto brute = brute_force_coeffs(h, Snr(snr), 10);
        const auto m = quadform_matrix(h, Snr(snr));
        // ||b*||^2 <= 1 + S min|h|^2: inside that radius the box brute force
        // is a certified oracle and must agree exactly; outside it the global
        // optimum may leave the box but can never have a worse form value.
        const double radius_sq =
            1.0 + snr * std::min(std::norm(h[0]), std::norm(h[1]));
        if (radius_sq <= 100.0) {
            ++certified;
            if (!(fast == brute)) {
                exact_pass = false;
                exact_bad = "snr=" + Report::str(snr) + " h=[" + Report::str(h[0].real()) +
                            "," + Report::str(h[1].real()) + "]";
            }
        }
        if (m.eval(fast) > m.eval(brute) * (1.0 + 1e-12)) {
            never_worse = false;
            worse_bad = "snr=" + Report::str(snr) + " h=[" + Report::str(h[0].real()) + "," +
                        Report::str(h[1].real()) + "]";
        }
    }
    rep.check("search equals brute force on certified boxes (" +
                  Report::str(certified) + " instances)",
              exact_pass, exact_bad);
    rep.check("search never returns a worse form than the box brute force", never_worse,
              worse_bad);
}

void suite_afnoise(Report& rep, std::uint64_t seed, std::size_t trials) {
    struct Case {
        double snr, gamma;
        int k;
    };
    bool pass = true;
    std::string bad;
    for (const Case c : {Case{1.0, 1.0, 1}, Case{10.0, 1.0, 3}, Case{100.0, 0.5, 5}}) {
        AfNoiseMcConfig cfg{Snr(c.snr), Gamma(c.gamma), c.k};
        cfg.trials = trials;
        cfg.seed = seed;
        const auto mc = simulate_af_noise(cfg);
        const double err = std::abs(mc.estimate.back() - mc.closed_form.back());
        if (err > 4.0 * mc.standard_error.back()) {
            pass = false;
            bad = witness(c.snr, c.gamma, c.k) + " est=" + Report::str(mc.estimate.back()) +
                  " cf=" + Report::str(mc.closed_form.back());
        }
    }
    rep.check("af noise mc matches (1-r^(K+1))/(1-r)", pass, bad);
}

}  // namespace

std::vector<std::string> verify_suite_names() {
    return {"cor1", "cor2", "cor3", "cor5", "cor6", "lemma1", "lemma2",
            "recursion", "pipeline", "lattice", "afnoise"};
}

std::vector<CheckResult> run_verify(const VerifyOptions& options) {
    std::vector<CheckResult> results;
    const auto want = [&](const std::string& s) {
        return options.suites.empty() ||
               std::find(options.suites.begin(), options.suites.end(), s) !=
                   options.suites.end();
    };

    std::vector<double> snr_db = options.snr_db;
    if (snr_db.empty())
        for (int db = 0; db <= 30; db += 3) snr_db.push_back(double(db));
    std::vector<int> ks = options.k_values;
    if (ks.empty()) ks = {1, 2, 3, 4, 5, 6};
    std::vector<int> ks10 = ks;
    for (int k : {7, 8, 9, 10})
        if (std::find(ks10.begin(), ks10.end(), k) == ks10.end()) ks10.push_back(k);

    for (const auto& name : verify_suite_names()) {
        if (!want(name)) continue;
        Report rep(results, name);
        if (name == "cor1") suite_cor1(rep);
        else if (name == "cor2") suite_cor2(rep);
        else if (name == "cor3") suite_cor3(rep);
        else if (name == "cor5") suite_cor5(rep, ks);
        else if (name == "cor6") suite_cor6(rep, ks);
        else if (name == "lemma1") suite_lemma1(rep, snr_db);
        else if (name == "lemma2") suite_lemma2(rep);
        else if (name == "recursion") suite_recursion(rep, ks10);
        else if (name == "pipeline") suite_pipeline(rep, ks, options.seed);
        else if (name == "lattice") suite_lattice(rep, options.seed, options.lattice_instances);
        else if (name == "afnoise") suite_afnoise(rep, options.seed, options.mc_trials);
    }
    return results;
}

}  // namespace vduplex
