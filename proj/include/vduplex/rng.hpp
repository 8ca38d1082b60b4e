#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace vduplex {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

/// mt19937_64 wrapper with splitmix64-derived per-trial substreams and
/// hand-rolled draw functions, so a (seed, trial) pair pins every sample.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    static Rng substream(std::uint64_t seed, std::uint64_t index) {
        std::uint64_t s = seed;
        std::uint64_t a = splitmix64(s);
        s = a ^ index;
        return Rng(splitmix64(s));
    }

    std::uint64_t next_u64() { return eng_(); }

    double uniform01() {  // [0, 1)
        return double(eng_() >> 11) * 0x1.0p-53;
    }
    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

    std::uint32_t below(std::uint32_t n) {  // uniform in [0, n)
        return std::uint32_t(eng_() % n);
    }

    /// Circularly symmetric complex Gaussian, E|z|^2 = 1.
    std::complex<double> cnormal() {
        const double u1 = 1.0 - uniform01();  // (0, 1]
        const double mag = std::sqrt(-std::log(u1));
        const double phase = 2.0 * M_PI * uniform01();
        return std::polar(mag, phase);
    }

    /// Unit-magnitude random phase.
    std::complex<double> phase() { return std::polar(1.0, 2.0 * M_PI * uniform01()); }

    /// Uniform draw from {1, j, -1, -j}; zero-mean, so independent draws
    /// decorrelate products exactly, at a fraction of the cost of a
    /// continuous phase.
    std::complex<double> phase4() {
        static constexpr std::complex<double> table[4] = {
            {1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
        return table[eng_() & 3u];
    }

  private:
    std::mt19937_64 eng_;
};

}  // namespace vduplex
