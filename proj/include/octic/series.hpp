#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

namespace octic {

/// Integer power series c_0 + c_1 q + ... + c_{N-1} q^{N-1}, truncated at N.
class IntSeries {
public:
    explicit IntSeries(std::size_t precision);
    IntSeries(std::size_t precision, std::vector<mpz_class> coeffs);

    static IntSeries one(std::size_t precision);

    [[nodiscard]] std::size_t precision() const { return c_.size(); }
    [[nodiscard]] const mpz_class& operator[](std::size_t n) const { return c_.at(n); }
    mpz_class& operator[](std::size_t n) { return c_.at(n); }
    [[nodiscard]] const std::vector<mpz_class>& coefficients() const { return c_; }

    /// Multiplicative inverse; the constant term must be +-1.
    [[nodiscard]] IntSeries inverse() const;
    [[nodiscard]] IntSeries pow(long exponent) const;

    friend bool operator==(const IntSeries&, const IntSeries&) = default;

private:
    std::vector<mpz_class> c_;
};

IntSeries series_mul(const IntSeries& a, const IntSeries& b);
IntSeries series_add(const IntSeries& a, const IntSeries& b);

inline IntSeries operator*(const IntSeries& a, const IntSeries& b) { return series_mul(a, b); }

}  // namespace octic
