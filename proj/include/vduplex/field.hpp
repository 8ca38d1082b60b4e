#pragma once

#include <cstdint>
#include <stdexcept>

namespace vduplex {

bool is_prime_u32(std::uint32_t n);

/// Arithmetic in the prime field F_p. Elements are plain uint32_t in [0, p).
class PrimeField {
  public:
    explicit PrimeField(std::uint32_t p) : p_(p) {
        if (!is_prime_u32(p)) throw std::invalid_argument("PrimeField: p must be prime");
    }

    std::uint32_t p() const { return p_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        const std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
        return a >= b ? a - b : a + p_ - b;
    }
    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return std::uint32_t((std::uint64_t(a) * b) % p_);
    }
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
        std::uint64_t base = a % p_, acc = 1;
        while (e) {
            if (e & 1) acc = (acc * base) % p_;
            base = (base * base) % p_;
            e >>= 1;
        }
        return std::uint32_t(acc);
    }
    std::uint32_t inv(std::uint32_t a) const {
        if (a % p_ == 0) throw std::domain_error("PrimeField: no inverse of 0");
        return pow(a, p_ - 2);
    }

  private:
    std::uint32_t p_;
};

/// C(n, k) mod p via Pascal's triangle (exact for any n; p need not exceed n).
std::uint32_t binomial_mod(unsigned n, unsigned k, const PrimeField& field);

}  // namespace vduplex
