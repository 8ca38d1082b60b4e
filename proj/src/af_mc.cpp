#include "vduplex/af_mc.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "vduplex/parallel.hpp"
#include "vduplex/rng.hpp"

namespace vduplex {

std::size_t af_transient_slots(Snr snr) {
    const double r = snr.value / (1.0 + snr.value);
    return std::size_t(std::ceil(50.0 / (1.0 - r)));
}

AfNoiseMc simulate_af_noise(const AfNoiseMcConfig& cfg) {
    if (cfg.stages < 1) throw std::invalid_argument("simulate_af_noise: stages must be >= 1");
    if (cfg.trials < 1) throw std::invalid_argument("simulate_af_noise: trials must be >= 1");

    const double s = cfg.snr.value;
    const double g = cfg.gamma.value;
    const double beta = std::sqrt(s / (1.0 + (1.0 + g * g) * s));
    if (!(beta * g < 1.0))
        throw std::logic_error("simulate_af_noise: beta*gamma >= 1, unstable chain");

    const std::size_t transient = af_transient_slots(cfg.snr);
    const std::size_t total = cfg.slots ? cfg.slots : transient + 64;
    if (total <= transient)
        throw std::invalid_argument("simulate_af_noise: slots must exceed the transient " +
                                    std::to_string(transient));
    const std::size_t measured = total - transient;
    const std::size_t k = std::size_t(cfg.stages);

    // trial_mean[t*K + (j-1)]: time-averaged |destination noise|^2 of the
    // j-hop subnetwork in trial t.
    std::vector<double> trial_mean(cfg.trials * k, 0.0);

    parallel_for(cfg.trials, resolve_threads(cfg.threads), [&](std::size_t trial) {
        Rng rng = Rng::substream(cfg.seed, trial);
        std::vector<std::complex<double>> state(k, {0.0, 0.0});  // received noise per stage
        std::vector<std::complex<double>> tx(k);
        std::vector<double> acc(k, 0.0);
        for (std::size_t t = 0; t < total; ++t) {
            for (std::size_t j = 0; j < k; ++j) tx[j] = rng.phase4() * (beta * state[j]);
            for (std::size_t j = k; j-- > 1;)
                state[j] = tx[j - 1] + g * tx[j] + rng.cnormal();
            state[0] = g * tx[0] + rng.cnormal();
            if (t >= transient) {
                // Destination taps: unit-gain link from the stage-j transmitter
                // plus the destination's own thermal noise.
                for (std::size_t j = 0; j < k; ++j)
                    acc[j] += std::norm(tx[j] + rng.cnormal());
            }
        }
        for (std::size_t j = 0; j < k; ++j)
            trial_mean[trial * k + j] = acc[j] / double(measured);
    });

    AfNoiseMc out;
    out.r = s / (1.0 + s);
    out.transient_slots = transient;
    out.measured_slots = measured;
    out.trials = cfg.trials;
    out.estimate.assign(k, 0.0);
    out.standard_error.assign(k, 0.0);
    out.closed_form.assign(k, 0.0);

    double cf = 1.0;
    for (std::size_t j = 0; j < k; ++j) {
        cf = out.r * cf + 1.0;
        out.closed_form[j] = cf;
    }
    for (std::size_t j = 0; j < k; ++j) {
        double mean = 0.0;
        for (std::size_t t = 0; t < cfg.trials; ++t) mean += trial_mean[t * k + j];
        mean /= double(cfg.trials);
        double var = 0.0;
        for (std::size_t t = 0; t < cfg.trials; ++t) {
            const double d = trial_mean[t * k + j] - mean;
            var += d * d;
        }
        var = cfg.trials > 1 ? var / double(cfg.trials - 1) : 0.0;
        out.estimate[j] = mean;
        out.standard_error[j] = std::sqrt(var / double(cfg.trials));
    }
    return out;
}

}  // namespace vduplex
