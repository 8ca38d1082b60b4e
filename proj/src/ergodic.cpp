#include "vduplex/ergodic.hpp"

#include <cmath>
#include <stdexcept>

#include "vduplex/cof.hpp"
#include "vduplex/multihop.hpp"
#include "vduplex/parallel.hpp"
#include "vduplex/rng.hpp"
#include "vduplex/upper.hpp"

namespace vduplex {

std::vector<std::string> ergodic_labels() {
    return {"DF", "AF", "QMF", "QMF_N", "CoF", "CoF_PA", "UPPER"};
}

ErgodicTable ergodic_rates(const McConfig& cfg) {
    if (cfg.trials < 1) throw std::invalid_argument("ergodic_rates: trials must be >= 1");
    if (cfg.k_values.empty()) throw std::invalid_argument("ergodic_rates: empty K range");
    if (!(cfg.gamma_sq_lo >= 0.0) || cfg.gamma_sq_lo > cfg.gamma_sq_hi)
        throw std::invalid_argument("ergodic_rates: need 0 <= lo <= hi");
    for (int k : cfg.k_values)
        if (k < 1) throw std::invalid_argument("ergodic_rates: K values must be >= 1");

    const auto labels = ergodic_labels();
    const std::size_t ncols = labels.size();
    const std::size_t nk = cfg.k_values.size();
    const std::size_t cells = ncols * nk;

    std::vector<double> samples(cfg.trials * cells, 0.0);

    parallel_for(cfg.trials, resolve_threads(cfg.threads), [&](std::size_t trial) {
        Rng rng = Rng::substream(cfg.seed, trial);
        const double gsq = rng.uniform(cfg.gamma_sq_lo, cfg.gamma_sq_hi);
        const Gamma gamma(std::sqrt(gsq));

        // K-independent values once per draw.
        const double df = rate_df(ChannelConfig(cfg.snr, gamma, 1)).rate.bits;
        const double cof = rate_cof_multihop(ChannelConfig(cfg.snr, gamma, 1)).rate.bits;
        const auto ub = upper_bound_multihop(ChannelConfig(cfg.snr, gamma, 1));

        double* row = samples.data() + trial * cells;
        for (std::size_t i = 0; i < nk; ++i) {
            const ChannelConfig cc(cfg.snr, gamma, cfg.k_values[i]);
            row[0 * nk + i] = df;
            row[1 * nk + i] = rate_af_multihop(cc).rate.bits;
            row[2 * nk + i] = rate_qmf_multihop(cc).rate.bits;
            row[3 * nk + i] = rate_qmf_noise_level_multihop(cc).rate.bits;
            row[4 * nk + i] = cof;
            row[5 * nk + i] = scheme_rate_multihop(Scheme::CofPa, cc);
            row[6 * nk + i] = ub.bound.bits;
        }
    });

    ErgodicTable table;
    table.k_values = cfg.k_values;
    table.labels = labels;
    table.trials = cfg.trials;
    table.seed = cfg.seed;
    table.mean.assign(ncols, std::vector<double>(nk, 0.0));
    table.standard_error.assign(ncols, std::vector<double>(nk, 0.0));

    for (std::size_t c = 0; c < ncols; ++c) {
        for (std::size_t i = 0; i < nk; ++i) {
            // Kahan summation in trial order keeps the reduction reproducible.
            double sum = 0.0, comp = 0.0;
            for (std::size_t t = 0; t < cfg.trials; ++t) {
                const double y = samples[t * cells + c * nk + i] - comp;
                const double s = sum + y;
                comp = (s - sum) - y;
                sum = s;
            }
            const double mean = sum / double(cfg.trials);
            double var = 0.0;
            for (std::size_t t = 0; t < cfg.trials; ++t) {
                const double d = samples[t * cells + c * nk + i] - mean;
                var += d * d;
            }
            var = cfg.trials > 1 ? var / double(cfg.trials - 1) : 0.0;
            table.mean[c][i] = mean;
            table.standard_error[c][i] = std::sqrt(var / double(cfg.trials));
        }
    }
    return table;
}

}  // namespace vduplex
