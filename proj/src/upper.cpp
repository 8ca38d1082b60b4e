#include "vduplex/upper.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

namespace vduplex {

TimeShare::TimeShare(double a, double b, double c, double d) : t1(a), t2(b), t3(c), t4(d) {
    if (!(a >= 0.0 && b >= 0.0 && c >= 0.0 && d >= 0.0))
        throw std::invalid_argument("TimeShare: fractions must be >= 0");
    if (std::abs(a + b + c + d - 1.0) > 1e-12)
        throw std::invalid_argument("TimeShare: fractions must sum to 1");
}

double CutValues::min_value() const { return std::min(std::min(i1, i2), std::min(i3, i4)); }

std::array<std::array<double, 4>, 4> cut_coefficients(Snr snr, Gamma gamma) {
    const double s = snr.value;
    const double g = gamma.value;
    const double c1 = capacity_bits(s);
    const double c2 = capacity_bits(2.0 * s);
    const double c4 = capacity_bits(4.0 * s);
    const double cb = capacity_bits((1.0 + (1.0 + g) * (1.0 + g)) * s + s * s);
    return {{
        {c1, c1, c2, 0.0},   // I1: source-side cut
        {0.0, cb, c1, c1},   // I2
        {cb, 0.0, c1, c1},   // I3
        {c1, c1, 0.0, c4},   // I4: destination-side cut
    }};
}

CutValues cut_values(const TimeShare& ts, Snr snr, Gamma gamma) {
    const auto a = cut_coefficients(snr, gamma);
    const std::array<double, 4> t{ts.t1, ts.t2, ts.t3, ts.t4};
    std::array<double, 4> v{};
    for (int m = 0; m < 4; ++m)
        for (int i = 0; i < 4; ++i) v[m] += a[m][i] * t[i];
    return CutValues{v[0], v[1], v[2], v[3]};
}

namespace {

// Gaussian elimination with partial pivoting for the tiny basis systems.
// Returns false when the system is singular.
bool solve_linear(std::array<std::array<double, 6>, 5>& aug, std::array<double, 5>& x) {
    constexpr int n = 5;
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(aug[r][col]) > std::abs(aug[pivot][col])) pivot = r;
        if (std::abs(aug[pivot][col]) < 1e-12) return false;
        std::swap(aug[col], aug[pivot]);
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            const double f = aug[r][col] / aug[col][col];
            if (f == 0.0) continue;
            for (int c = col; c <= n; ++c) aug[r][c] -= f * aug[col][c];
        }
    }
    for (int i = 0; i < n; ++i) x[i] = aug[i][5] / aug[i][i];
    return true;
}

bool lex_less(const std::array<double, 4>& a, const std::array<double, 4>& b) {
    for (int i = 0; i < 4; ++i) {
        if (a[i] < b[i] - 1e-12) return true;
        if (a[i] > b[i] + 1e-12) return false;
    }
    return false;
}

}  // namespace

UpperBoundSolution solve_upper_bound(Snr snr, Gamma gamma) {
    const auto a = cut_coefficients(snr, gamma);

    double best_value = -std::numeric_limits<double>::infinity();
    std::array<double, 4> best_t{};
    bool found = false;

    // Variables x = (t1..t4, z). A basic solution activates the simplex
    // equality, |A| epigraph constraints (z = I_m) and |Z| sign constraints
    // (t_i = 0) with |A| + |Z| = 4, |A| >= 1.
    for (int active = 1; active < 16; ++active) {
        for (int zeroed = 0; zeroed < 16; ++zeroed) {
            if (std::popcount(unsigned(active)) + std::popcount(unsigned(zeroed)) != 4)
                continue;
            std::array<std::array<double, 6>, 5> aug{};
            int row = 0;
            for (int i = 0; i < 4; ++i) aug[row][i] = 1.0;
            aug[row][5] = 1.0;
            ++row;
            for (int m = 0; m < 4; ++m) {
                if (!(active & (1 << m))) continue;
                for (int i = 0; i < 4; ++i) aug[row][i] = a[m][i];
                aug[row][4] = -1.0;
                ++row;
            }
            for (int i = 0; i < 4; ++i) {
                if (!(zeroed & (1 << i))) continue;
                aug[row][i] = 1.0;
                ++row;
            }
            std::array<double, 5> x{};
            if (!solve_linear(aug, x)) continue;

            std::array<double, 4> t{x[0], x[1], x[2], x[3]};
            bool feasible = true;
            for (double& ti : t) {
                if (ti < -1e-9) feasible = false;
                ti = std::max(ti, 0.0);
            }
            if (!feasible) continue;
            const double sum = t[0] + t[1] + t[2] + t[3];
            if (std::abs(sum - 1.0) > 1e-9) continue;
            for (double& ti : t) ti /= sum;

            // Value actually attained at this vertex (never over-reports).
            double value = std::numeric_limits<double>::infinity();
            for (int m = 0; m < 4; ++m) {
                double im = 0.0;
                for (int i = 0; i < 4; ++i) im += a[m][i] * t[i];
                value = std::min(value, im);
            }
            const double tol = 1e-9 * std::max(1.0, std::abs(best_value));
            if (!found || value > best_value + tol ||
                (value > best_value - tol && lex_less(t, best_t))) {
                best_value = std::max(best_value, value);
                best_t = t;
                found = true;
            }
        }
    }

    UpperBoundSolution sol;
    sol.optimizer = TimeShare(best_t[0], best_t[1], best_t[2], best_t[3]);
    sol.value = Rate{best_value};
    return sol;
}

MultihopUpperBound upper_bound_multihop(const ChannelConfig& cfg) {
    if (cfg.snr.meets_lemma1_condition())
        return MultihopUpperBound{true, capacity(cfg.snr)};
    return MultihopUpperBound{false, solve_upper_bound(cfg.snr, cfg.gamma).value};
}

bool check_concavity_inequality(Snr snr) {
    const double s = snr.value;
    const double c2 = capacity_bits(2.0 * s);
    const double c3 = capacity_bits(3.0 * s);
    const double c4 = capacity_bits(4.0 * s);
    return c2 * c4 <= (c2 + c4) * c3;
}

}  // namespace vduplex
