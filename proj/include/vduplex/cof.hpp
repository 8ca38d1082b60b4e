#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "vduplex/core.hpp"
#include "vduplex/rates.hpp"

namespace vduplex {

using Cplx = std::complex<double>;
using ChannelVec2 = std::array<Cplx, 2>;

/// Gaussian integer a + bj with machine-integer parts.
struct GaussianInt {
    std::int64_t re = 0;
    std::int64_t im = 0;

    bool is_zero() const { return re == 0 && im == 0; }
    std::int64_t norm2() const { return re * re + im * im; }
    Cplx to_complex() const { return Cplx(double(re), double(im)); }
    friend bool operator==(const GaussianInt&, const GaussianInt&) = default;
};

/// Integer coefficient vector b = [b1, b2] of a decoded lattice combination.
struct GaussianIntVec2 {
    GaussianInt b1;
    GaussianInt b2;

    bool is_zero() const { return b1.is_zero() && b2.is_zero(); }
    std::int64_t norm2() const { return b1.norm2() + b2.norm2(); }
    friend bool operator==(const GaussianIntVec2&, const GaussianIntVec2&) = default;
};

/// The 2x2 Hermitian matrix M = (SNR^-1 I + h h^H)^-1 defining the
/// effective-noise quadratic form q(b) = b^H M b.
struct QuadFormMatrix {
    double m11 = 0.0;
    double m22 = 0.0;
    Cplx m12{0.0, 0.0};

    double eval(const GaussianIntVec2& b) const {
        const Cplx c1 = b.b1.to_complex();
        const Cplx c2 = b.b2.to_complex();
        return m11 * std::norm(c1) + m22 * std::norm(c2) +
               2.0 * std::real(std::conj(c1) * m12 * c2);
    }
};

/// Builds M by the rank-1 (Sherman-Morrison) closed form; h must be nonzero.
QuadFormMatrix quadform_matrix(const ChannelVec2& h, Snr snr);

/// q(b) = b^H (SNR^-1 I + h h^H)^-1 b. Domain error for b = 0.
double effective_noise_quadform(const GaussianIntVec2& b, const ChannelVec2& h, Snr snr);

/// MMSE receiver scale for a given combination: alpha* = SNR h^H b / (1 + SNR ||h||^2).
/// The minimized effective-noise variance SNR ||alpha h - b||^2 + |alpha|^2
/// equals effective_noise_quadform(b, h, snr).
Cplx mmse_alpha(const GaussianIntVec2& b, const ChannelVec2& h, Snr snr);

/// Normalizes b over the Gaussian-integer units {1,-1,j,-j}: all four unit
/// multiples decode the same combination and have the same quadratic form, so
/// one canonical representative (the lexicographically largest tuple
/// (Re b1, Im b1, Re b2, Im b2)) is reported.
GaussianIntVec2 canonical_unit_rep(const GaussianIntVec2& b);

/// Deterministic candidate ordering used by the coefficient search:
/// smaller q first, then smaller |b1|^2+|b2|^2, then lexicographically
/// smaller canonical representative.
bool better_candidate(double qa, const GaussianIntVec2& a, double qb, const GaussianIntVec2& b);

/// Exact shortest-vector search: the nonzero Gaussian-integer b minimizing
/// q(b). Two-dimensional Fincke-Pohst enumeration with a dynamically
/// shrinking radius; ties resolved by better_candidate.
GaussianIntVec2 best_integer_coeffs(const ChannelVec2& h, Snr snr);

/// Power back-off pair (beta1 at the source, beta2 at the transmitting relays).
struct PaVector {
    double beta1 = 1.0;
    double beta2 = 1.0;

    PaVector() = default;
    PaVector(double b1, double b2) : beta1(b1), beta2(b2) {
        if (!(b1 > 0.0 && b1 <= 1.0 && b2 > 0.0 && b2 <= 1.0))
            throw std::invalid_argument("PaVector: components must lie in (0, 1]");
    }
};

struct CofSolution {
    GaussianIntVec2 b;
    PaVector beta;
    Cplx alpha{0.0, 0.0};        // MMSE scale for the chosen b
    Rate computation_rate;       // log+(SNR / q(b))
    Rate relay_link_rate;        // log2(1 + beta2^2 SNR)
    Rate rate;                   // min of the two
    std::string binding;
};

/// Compute-and-forward rate for a given power allocation: effective channel
/// h = [beta1, beta2*gamma], best integer coefficients, capped by the
/// relay-to-destination link.
CofSolution rate_cof(const ChannelConfig& cfg, const PaVector& beta);

/// gamma_max = max{gamma/ceil(gamma), floor(gamma)/gamma}; domain error for gamma <= 0.
double gamma_max(Gamma gamma);

/// MMSE scale of PA strategy 1 (beta = (gamma/ceil(gamma), 1), b = [1, ceil(gamma)]).
Cplx alpha_opt_pa1(Gamma gamma, Snr snr);

/// Effective-noise variance of PA strategy 1 at an arbitrary scale alpha.
double pa1_effective_noise(Cplx alpha, Gamma gamma, Snr snr);

/// Closed form of pa1_effective_noise at alpha_opt_pa1.
double pa1_effective_noise_min(Gamma gamma, Snr snr);

struct CofPaStrategy {
    int id = 0;                   // 0 = no PA, 1 and 2 = the two back-off strategies
    bool enabled = true;
    PaVector beta;
    GaussianIntVec2 nominal_b;    // fixed coefficients the strategy is built around
    double nominal_bits = 0.0;    // closed-form rate with nominal_b
    CofSolution searched;         // rate with the full coefficient search
};

struct CofPaSolution {
    CofSolution best;
    int strategy_id = 0;
    double pa_lower_bound_bits = 0.0;  // log2(1/(1+ceil(g)^2) + gamma_max^2 SNR)
    std::vector<CofPaStrategy> strategies;
};

/// CoF with power allocation: evaluates no PA plus the two back-off
/// strategies, each with the full coefficient search, and returns the best.
/// The searched rate of a strategy is never below its nominal fixed-b rate.
/// For gamma = 0 this degenerates to rate_cof with beta = (1, 1).
CofPaSolution rate_cof_pa(const ChannelConfig& cfg);

}  // namespace vduplex
