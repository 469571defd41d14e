#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <vector>

#include <gmpxx.h>

#include "octic/arrangement.hpp"

namespace octic {

using Exponent = std::array<int, 4>;

/// Monomials of a fixed degree in (x, y, z, t), lexicographic with
/// x > y > z > t: x^d first, t^d last.
class MonomialBasis {
public:
    explicit MonomialBasis(int degree);
    [[nodiscard]] int degree() const { return degree_; }
    [[nodiscard]] std::size_t size() const { return monomials_.size(); }
    [[nodiscard]] const Exponent& operator[](std::size_t i) const { return monomials_[i]; }
    [[nodiscard]] std::size_t index(const Exponent& e) const { return index_.at(e); }
    [[nodiscard]] const std::vector<Exponent>& monomials() const { return monomials_; }

private:
    int degree_;
    std::vector<Exponent> monomials_;
    std::map<Exponent, std::size_t> index_;
};

/// Shared bases for degrees 0..16.
const MonomialBasis& monomial_basis(int degree);

/// Homogeneous polynomial with integer coefficients in the basis of its degree.
class HomogeneousPoly {
public:
    explicit HomogeneousPoly(int degree);
    static HomogeneousPoly constant(const mpz_class& c);
    static HomogeneousPoly monomial(const Exponent& e);
    static HomogeneousPoly linear(const LinearForm& f);  // f must be integral

    [[nodiscard]] int degree() const { return degree_; }
    [[nodiscard]] const std::vector<mpz_class>& coefficients() const { return c_; }
    [[nodiscard]] const mpz_class& coefficient(const Exponent& e) const;
    [[nodiscard]] HomogeneousPoly derivative(std::size_t variable) const;
    [[nodiscard]] mpz_class evaluate(const std::array<mpz_class, 4>& point) const;

    friend HomogeneousPoly operator*(const HomogeneousPoly& a, const HomogeneousPoly& b);
    friend bool operator==(const HomogeneousPoly&, const HomogeneousPoly&) = default;

private:
    int degree_;
    std::vector<mpz_class> c_;
};

/// scale * prod forms.
HomogeneousPoly branch_polynomial(const Arrangement& a);

/// Functional g -> (d^beta g)(point) on degree-`degree` forms, as a vector
/// over the monomial basis.
std::vector<mpz_class> derivative_functional(const Exponent& beta, const std::array<mpz_class, 4>& point,
                                             int degree = 8);

/// Multi-indices of total order k in four variables.
std::vector<Exponent> multi_indices(int k);

}  // namespace octic
