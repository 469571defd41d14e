#include "octic/series.hpp"

namespace octic {

IntSeries::IntSeries(std::size_t precision) : c_(precision) {
    if (precision == 0) throw std::invalid_argument("series precision must be positive");
}

IntSeries::IntSeries(std::size_t precision, std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) {
    if (precision == 0) throw std::invalid_argument("series precision must be positive");
    c_.resize(precision);
}

IntSeries IntSeries::one(std::size_t precision) {
    IntSeries s(precision);
    s.c_[0] = 1;
    return s;
}

IntSeries series_mul(const IntSeries& a, const IntSeries& b) {
    if (a.precision() != b.precision()) throw std::invalid_argument("series precision mismatch");
    const std::size_t n = a.precision();
    IntSeries out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; i + j < n; ++j) {
            if (b[j] != 0) out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

IntSeries series_add(const IntSeries& a, const IntSeries& b) {
    if (a.precision() != b.precision()) throw std::invalid_argument("series precision mismatch");
    IntSeries out = a;
    for (std::size_t i = 0; i < a.precision(); ++i) out[i] += b[i];
    return out;
}

IntSeries IntSeries::inverse() const {
    if (c_[0] != 1 && c_[0] != -1) throw std::domain_error("series inverse needs constant term +-1");
    const std::size_t n = precision();
    IntSeries inv(n);
    inv.c_[0] = c_[0];  // 1/(+-1) = +-1
    for (std::size_t k = 1; k < n; ++k) {
        mpz_class acc = 0;
        for (std::size_t j = 1; j <= k; ++j) {
            if (c_[j] != 0) acc += c_[j] * inv.c_[k - j];
        }
        inv.c_[k] = -acc * c_[0];
    }
    return inv;
}

IntSeries IntSeries::pow(long exponent) const {
    IntSeries base = exponent < 0 ? inverse() : *this;
    unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent) : static_cast<unsigned long>(exponent);
    IntSeries result = one(precision());
    while (e) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

}  // namespace octic
