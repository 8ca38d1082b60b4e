#pragma once

#include <array>

#include "vduplex/core.hpp"

namespace vduplex {

/// Fractions of time the network spends in each of the four transmit/receive
/// states. A probability vector on the 3-simplex.
struct TimeShare {
    double t1 = 0.0, t2 = 0.0, t3 = 0.0, t4 = 0.0;

    TimeShare() = default;
    TimeShare(double a, double b, double c, double d);
};

/// The four cut rates I1..I4 evaluated at a given time share.
struct CutValues {
    double i1 = 0.0, i2 = 0.0, i3 = 0.0, i4 = 0.0;

    double min_value() const;
};

CutValues cut_values(const TimeShare& ts, Snr snr, Gamma gamma);

/// Per-state coefficients of the cut rates: i_m = sum_i coeff[m][i] * t_i.
std::array<std::array<double, 4>, 4> cut_coefficients(Snr snr, Gamma gamma);

struct UpperBoundSolution {
    TimeShare optimizer;
    Rate value;
};

/// Maximizes min{I1,..,I4} over the simplex, solved exactly by enumerating
/// the basic solutions of the epigraph LP (69 linear systems of size <= 5).
/// Degenerate optima return the lexicographically smallest optimal vertex.
UpperBoundSolution solve_upper_bound(Snr snr, Gamma gamma);

struct MultihopUpperBound {
    /// True iff snr >= 1, where the K-independent bound C(SNR) is established
    /// by induction over the stages. When false, `bound` falls back to the
    /// 2-hop LP value as a diagnostic and certifies nothing for K >= 2.
    bool certified = false;
    Rate bound;
};

MultihopUpperBound upper_bound_multihop(const ChannelConfig& cfg);

/// The log-concavity inequality C(2S)C(4S) <= (C(2S)+C(4S))C(3S).
bool check_concavity_inequality(Snr snr);

}  // namespace vduplex
