#include "vduplex/cof.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

namespace vduplex {

namespace {

double norm_sq(const ChannelVec2& h) { return std::norm(h[0]) + std::norm(h[1]); }

std::array<std::int64_t, 4> as_tuple(const GaussianIntVec2& b) {
    return {b.b1.re, b.b1.im, b.b2.re, b.b2.im};
}

}  // namespace

QuadFormMatrix quadform_matrix(const ChannelVec2& h, Snr snr) {
    const double s = snr.value;
    const double hn = norm_sq(h);
    if (!(hn > 0.0)) throw std::invalid_argument("quadform_matrix: h must be nonzero");
    const double d = 1.0 + s * hn;
    // (S^-1 I + h h^H)^-1 = S I - S^2 h h^H / (1 + S ||h||^2), written in the
    // cancellation-free form S (1 + S |h_other|^2) / d on the diagonal.
    QuadFormMatrix m;
    m.m11 = s * (1.0 + s * std::norm(h[1])) / d;
    m.m22 = s * (1.0 + s * std::norm(h[0])) / d;
    m.m12 = -(s * s / d) * h[0] * std::conj(h[1]);
    return m;
}

double effective_noise_quadform(const GaussianIntVec2& b, const ChannelVec2& h, Snr snr) {
    if (b.is_zero()) throw std::domain_error("effective_noise_quadform: b must be nonzero");
    return quadform_matrix(h, snr).eval(b);
}

Cplx mmse_alpha(const GaussianIntVec2& b, const ChannelVec2& h, Snr snr) {
    const double s = snr.value;
    const Cplx hb = std::conj(h[0]) * b.b1.to_complex() + std::conj(h[1]) * b.b2.to_complex();
    return s * hb / (1.0 + s * norm_sq(h));
}

GaussianIntVec2 canonical_unit_rep(const GaussianIntVec2& b) {
    GaussianIntVec2 best = b;
    GaussianIntVec2 cur = b;
    for (int i = 0; i < 3; ++i) {
        // multiply by j: (re, im) -> (-im, re)
        cur = GaussianIntVec2{GaussianInt{-cur.b1.im, cur.b1.re},
                              GaussianInt{-cur.b2.im, cur.b2.re}};
        if (as_tuple(cur) > as_tuple(best)) best = cur;
    }
    return best;
}

bool better_candidate(double qa, const GaussianIntVec2& a, double qb, const GaussianIntVec2& b) {
    if (qa != qb) return qa < qb;
    if (a.norm2() != b.norm2()) return a.norm2() < b.norm2();
    return as_tuple(canonical_unit_rep(a)) < as_tuple(canonical_unit_rep(b));
}

GaussianIntVec2 best_integer_coeffs(const ChannelVec2& h, Snr snr) {
    const QuadFormMatrix m = quadform_matrix(h, snr);
    // Cholesky split: q(b) = m11 |b1 + (m12/m11) b2|^2 + s22 |b2|^2.
    const Cplx ratio = m.m12 / m.m11;
    const double s22 = snr.value / (1.0 + snr.value * std::norm(h[1]));  // det(M)/m11

    const GaussianIntVec2 e1{GaussianInt{1, 0}, GaussianInt{0, 0}};
    const GaussianIntVec2 e2{GaussianInt{0, 0}, GaussianInt{1, 0}};
    GaussianIntVec2 best = e1;
    double q_best = m.eval(e1);
    if (const double q2 = m.eval(e2); better_candidate(q2, e2, q_best, best)) {
        best = e2;
        q_best = q2;
    }

    const auto slack = [&] { return 1e-9 * (1.0 + q_best); };
    const auto visit = [&](const GaussianIntVec2& cand) {
        if (cand.is_zero()) return;
        const double q = m.eval(cand);
        if (better_candidate(q, cand, q_best, best)) {
            best = cand;
            q_best = q;
        }
    };

    // Any minimizer satisfies s22 |b2|^2 <= q(b) <= q_best, so |b2| lies in a
    // disc whose radius shrinks as better candidates are found. Scanning re2
    // center-out finds good candidates early and keeps the bound tight.
    const std::int64_t r0 = llround(std::floor(std::sqrt((q_best + slack()) / s22)));
    for (std::int64_t step = 0; step <= 2 * r0; ++step) {
        const std::int64_t re2 = (step % 2 == 1) ? (step + 1) / 2 : -(step / 2);
        const double r2max = (q_best + slack()) / s22;
        if (double(re2) * double(re2) > r2max) continue;
        const double im2_span = std::sqrt(r2max - double(re2) * double(re2));
        for (std::int64_t im2 = -llround(std::floor(im2_span)); double(im2) <= im2_span;
             ++im2) {
            const GaussianInt b2{re2, im2};
            const double head = q_best + slack() - s22 * double(b2.norm2());
            if (head < 0.0) continue;
            // b1 ranges over Gaussian integers in a disc around -ratio*b2.
            const Cplx center = -ratio * b2.to_complex();
            const double rad = std::sqrt(head / m.m11);
            const std::int64_t re_lo = llround(std::ceil(center.real() - rad));
            const std::int64_t re_hi = llround(std::floor(center.real() + rad));
            for (std::int64_t re1 = re_lo; re1 <= re_hi; ++re1) {
                const double dr = double(re1) - center.real();
                const double im_span_sq = rad * rad - dr * dr;
                if (im_span_sq < 0.0) continue;
                const double im_span = std::sqrt(im_span_sq);
                const std::int64_t im_lo = llround(std::ceil(center.imag() - im_span));
                const std::int64_t im_hi = llround(std::floor(center.imag() + im_span));
                for (std::int64_t im1 = im_lo; im1 <= im_hi; ++im1)
                    visit(GaussianIntVec2{GaussianInt{re1, im1}, b2});
            }
        }
    }
    return canonical_unit_rep(best);
}

CofSolution rate_cof(const ChannelConfig& cfg, const PaVector& beta) {
    const double s = cfg.snr.value;
    const ChannelVec2 h{Cplx(beta.beta1, 0.0), Cplx(beta.beta2 * cfg.gamma.value, 0.0)};

    CofSolution sol;
    sol.beta = beta;
    sol.b = best_integer_coeffs(h, cfg.snr);
    sol.alpha = mmse_alpha(sol.b, h, cfg.snr);
    const double q = effective_noise_quadform(sol.b, h, cfg.snr);
    sol.computation_rate = Rate{log_plus(s / q)};
    sol.relay_link_rate = Rate{std::log2(1.0 + beta.beta2 * beta.beta2 * s)};
    if (sol.computation_rate.bits <= sol.relay_link_rate.bits) {
        sol.rate = sol.computation_rate;
        sol.binding = "computation";
    } else {
        sol.rate = sol.relay_link_rate;
        sol.binding = "relay-link";
    }
    return sol;
}

double gamma_max(Gamma gamma) {
    const double g = gamma.value;
    if (!(g > 0.0)) throw std::domain_error("gamma_max: gamma must be > 0");
    const double up = std::ceil(g);
    const double down = std::floor(g);
    return std::max(g / up, down > 0.0 ? down / g : 0.0);
}

Cplx alpha_opt_pa1(Gamma gamma, Snr snr) {
    const double g = gamma.value;
    if (!(g > 0.0)) throw std::domain_error("alpha_opt_pa1: gamma must be > 0");
    const double s = snr.value;
    const double a = g / std::ceil(g);
    const double c = std::ceil(g);
    return Cplx(s * (a + g * c) / (1.0 + s * a * a + s * g * g), 0.0);
}

double pa1_effective_noise(Cplx alpha, Gamma gamma, Snr snr) {
    const double g = gamma.value;
    const double s = snr.value;
    const double a = g / std::ceil(g);
    const double c = std::ceil(g);
    return s * (std::norm(alpha * a - 1.0) + std::norm(alpha * g - c)) + std::norm(alpha);
}

double pa1_effective_noise_min(Gamma gamma, Snr snr) {
    const double g = gamma.value;
    const double s = snr.value;
    const double a = g / std::ceil(g);
    const double c = std::ceil(g);
    const double num = (a + g * c) * (a + g * c) * s * s + (1.0 + c * c) * s;
    const double den = 1.0 + (a * a + g * g) * s;
    return num / (den * den);
}

CofPaSolution rate_cof_pa(const ChannelConfig& cfg) {
    const double s = cfg.snr.value;
    const double g = cfg.gamma.value;

    CofPaSolution sol;

    CofPaStrategy nopa;
    nopa.id = 0;
    nopa.beta = PaVector(1.0, 1.0);
    nopa.searched = rate_cof(cfg, nopa.beta);
    nopa.nominal_b = nopa.searched.b;
    nopa.nominal_bits = nopa.searched.rate.bits;
    sol.strategies.push_back(nopa);

    if (g > 0.0) {
        const double up = std::ceil(g);
        const double down = std::floor(g);

        CofPaStrategy s1;
        s1.id = 1;
        s1.beta = PaVector(g / up, 1.0);
        s1.nominal_b = GaussianIntVec2{GaussianInt{1, 0}, GaussianInt{llround(up), 0}};
        s1.nominal_bits = std::log2(1.0 / (1.0 + up * up) + (g / up) * (g / up) * s);
        s1.searched = rate_cof(cfg, s1.beta);
        sol.strategies.push_back(s1);

        CofPaStrategy s2;
        s2.id = 2;
        s2.enabled = down >= 1.0;  // floor(gamma) = 0 would silence the relays
        if (s2.enabled) {
            s2.beta = PaVector(1.0, down / g);
            s2.nominal_b = GaussianIntVec2{GaussianInt{1, 0}, GaussianInt{llround(down), 0}};
            s2.nominal_bits =
                std::log2(1.0 / (1.0 + down * down) + (down / g) * (down / g) * s);
            s2.searched = rate_cof(cfg, s2.beta);
        }
        sol.strategies.push_back(s2);

        sol.pa_lower_bound_bits = std::log2(1.0 / (1.0 + up * up) + gamma_max(cfg.gamma) *
                                                                         gamma_max(cfg.gamma) * s);
    } else {
        sol.pa_lower_bound_bits = nopa.searched.rate.bits;
    }

    sol.best = sol.strategies[0].searched;
    sol.strategy_id = 0;
    for (const auto& st : sol.strategies) {
        if (st.enabled && st.searched.rate.bits > sol.best.rate.bits) {
            sol.best = st.searched;
            sol.strategy_id = st.id;
        }
    }
    return sol;
}

}  // namespace vduplex
