#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace octic {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Thin value wrapper over mpq_class.
class Rational {
public:
    Rational() = default;
    Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(int value) : q_(static_cast<long>(value)) {}  // NOLINT
    explicit Rational(const mpz_class& integer) : q_(integer) {}
    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(mpq_class q);

    /// Parses "num/den" or "num" (optional sign, decimal digits only).
    static Rational parse(std::string_view text);

    /// "num/den", or just "num" when the denominator is 1.
    [[nodiscard]] std::string str() const;

    [[nodiscard]] const mpq_class& value() const { return q_; }
    [[nodiscard]] mpz_class numerator() const { return q_.get_num(); }
    [[nodiscard]] mpz_class denominator() const { return q_.get_den(); }
    [[nodiscard]] bool is_zero() const { return sgn(q_) == 0; }
    [[nodiscard]] bool is_integer() const { return q_.get_den() == 1; }
    [[nodiscard]] int sign() const { return sgn(q_); }
    [[nodiscard]] Rational inverse() const;
    [[nodiscard]] Rational abs() const { return Rational(mpq_class(::abs(q_))); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class q_;
};

inline bool is_zero(const Rational& r) { return r.is_zero(); }
inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }

/// Squarefree kernel of a nonzero integer, sign kept: 12 -> 3, -18 -> -2.
mpz_class squarefree_part(const mpz_class& n);

}  // namespace octic
