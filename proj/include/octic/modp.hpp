#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "octic/rational.hpp"

namespace octic {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t p);

/// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime(std::uint64_t n);

/// Uniformly drawn prime in [2^(bits-1), 2^bits).
std::uint64_t random_prime(unsigned bits, std::mt19937_64& rng);

/// Primes in [lo, hi] by trial division.
std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi);

/// Element of F_p for an odd prime p < 2^63. Carries its modulus; mixing
/// moduli throws.
class FpElem {
public:
    FpElem() = default;
    FpElem(std::int64_t value, std::uint64_t modulus);
    static FpElem from_residue(std::uint64_t residue, std::uint64_t modulus) {
        FpElem e;
        e.residue_ = residue;
        e.modulus_ = modulus;
        return e;
    }
    /// Reduction of an exact rational; throws if p divides the denominator.
    static FpElem from_rational(const Rational& r, std::uint64_t modulus);
    static FpElem from_integer(const mpz_class& z, std::uint64_t modulus);

    [[nodiscard]] std::uint64_t residue() const { return residue_; }
    [[nodiscard]] std::uint64_t modulus() const { return modulus_; }
    [[nodiscard]] bool is_zero() const { return residue_ == 0; }
    [[nodiscard]] FpElem inverse() const;
    [[nodiscard]] FpElem pow(std::uint64_t exp) const { return from_residue(powmod(residue_, exp, modulus_), modulus_); }

    FpElem& operator+=(const FpElem& o);
    FpElem& operator-=(const FpElem& o);
    FpElem& operator*=(const FpElem& o);
    FpElem& operator/=(const FpElem& o) { return *this *= o.inverse(); }

    friend FpElem operator+(FpElem a, const FpElem& b) { return a += b; }
    friend FpElem operator-(FpElem a, const FpElem& b) { return a -= b; }
    friend FpElem operator*(FpElem a, const FpElem& b) { return a *= b; }
    friend FpElem operator/(FpElem a, const FpElem& b) { return a /= b; }
    friend FpElem operator-(const FpElem& a) {
        return from_residue(a.residue_ == 0 ? 0 : a.modulus_ - a.residue_, a.modulus_);
    }
    friend bool operator==(const FpElem& a, const FpElem& b) = default;

private:
    void check_same(const FpElem& o) const {
        if (modulus_ != o.modulus_) throw std::invalid_argument("FpElem modulus mismatch");
    }
    std::uint64_t residue_ = 0;
    std::uint64_t modulus_ = 0;
};

inline bool is_zero(const FpElem& e) { return e.is_zero(); }
inline FpElem zero_like(const FpElem& e) { return FpElem::from_residue(0, e.modulus()); }
inline FpElem one_like(const FpElem& e) { return FpElem::from_residue(1, e.modulus()); }

/// Legendre symbol by Euler's criterion: 0, +1 or -1.
int legendre(const FpElem& a);

/// Quadratic character of every residue of a small prime, indexed by residue.
class LegendreTable {
public:
    explicit LegendreTable(std::uint32_t p);
    [[nodiscard]] int operator()(std::uint64_t residue) const { return table_[residue]; }
    [[nodiscard]] std::uint32_t prime() const { return p_; }

private:
    std::uint32_t p_;
    std::vector<std::int8_t> table_;
};

}  // namespace octic
