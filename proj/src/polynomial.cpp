#include "octic/polynomial.hpp"

#include <memory>
#include <mutex>
#include <stdexcept>

namespace octic {

MonomialBasis::MonomialBasis(int degree) : degree_(degree) {
    if (degree < 0) throw std::invalid_argument("negative degree");
    for (int a = degree; a >= 0; --a)
        for (int b = degree - a; b >= 0; --b)
            for (int c = degree - a - b; c >= 0; --c) {
                const Exponent e{a, b, c, degree - a - b - c};
                index_.emplace(e, monomials_.size());
                monomials_.push_back(e);
            }
}

const MonomialBasis& monomial_basis(int degree) {
    static constexpr int kMaxDegree = 16;
    static std::once_flag once;
    static std::vector<std::unique_ptr<MonomialBasis>> bases;
    std::call_once(once, [] {
        for (int d = 0; d <= kMaxDegree; ++d) bases.push_back(std::make_unique<MonomialBasis>(d));
    });
    if (degree < 0 || degree > kMaxDegree) throw std::out_of_range("monomial degree out of range");
    return *bases[static_cast<std::size_t>(degree)];
}

HomogeneousPoly::HomogeneousPoly(int degree) : degree_(degree), c_(monomial_basis(degree).size()) {}

HomogeneousPoly HomogeneousPoly::constant(const mpz_class& c) {
    HomogeneousPoly p(0);
    p.c_[0] = c;
    return p;
}

HomogeneousPoly HomogeneousPoly::monomial(const Exponent& e) {
    HomogeneousPoly p(e[0] + e[1] + e[2] + e[3]);
    p.c_[monomial_basis(p.degree_).index(e)] = 1;
    return p;
}

HomogeneousPoly HomogeneousPoly::linear(const LinearForm& f) {
    HomogeneousPoly p(1);
    for (std::size_t i = 0; i < 4; ++i) {
        if (!f[i].is_integer()) throw std::invalid_argument("linear form must be integral");
        Exponent e{0, 0, 0, 0};
        e[i] = 1;
        p.c_[monomial_basis(1).index(e)] = f[i].numerator();
    }
    return p;
}

const mpz_class& HomogeneousPoly::coefficient(const Exponent& e) const {
    return c_[monomial_basis(degree_).index(e)];
}

HomogeneousPoly operator*(const HomogeneousPoly& a, const HomogeneousPoly& b) {
    HomogeneousPoly out(a.degree_ + b.degree_);
    const auto& ba = monomial_basis(a.degree_);
    const auto& bb = monomial_basis(b.degree_);
    const auto& bo = monomial_basis(out.degree_);
    for (std::size_t i = 0; i < ba.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < bb.size(); ++j) {
            if (b.c_[j] == 0) continue;
            Exponent e;
            for (std::size_t v = 0; v < 4; ++v) e[v] = ba[i][v] + bb[j][v];
            out.c_[bo.index(e)] += a.c_[i] * b.c_[j];
        }
    }
    return out;
}

HomogeneousPoly HomogeneousPoly::derivative(std::size_t variable) const {
    if (degree_ == 0) return HomogeneousPoly(0);
    HomogeneousPoly out(degree_ - 1);
    const auto& basis = monomial_basis(degree_);
    const auto& lower = monomial_basis(degree_ - 1);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        Exponent e = basis[i];
        if (e[variable] == 0 || c_[i] == 0) continue;
        const long k = e[variable];
        --e[variable];
        out.c_[lower.index(e)] += c_[i] * k;
    }
    return out;
}

mpz_class HomogeneousPoly::evaluate(const std::array<mpz_class, 4>& point) const {
    const auto& basis = monomial_basis(degree_);
    mpz_class total = 0;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (c_[i] == 0) continue;
        mpz_class term = c_[i];
        for (std::size_t v = 0; v < 4; ++v) {
            mpz_class power;
            mpz_pow_ui(power.get_mpz_t(), point[v].get_mpz_t(), static_cast<unsigned long>(basis[i][v]));
            term *= power;
        }
        total += term;
    }
    return total;
}

HomogeneousPoly branch_polynomial(const Arrangement& a) {
    HomogeneousPoly f = HomogeneousPoly::constant(a.scale);
    for (const auto& form : a.forms) f = f * HomogeneousPoly::linear(form);
    return f;
}

std::vector<mpz_class> derivative_functional(const Exponent& beta, const std::array<mpz_class, 4>& point, int degree) {
    const auto& basis = monomial_basis(degree);
    std::vector<mpz_class> out(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const Exponent& e = basis[i];
        mpz_class value = 1;
        for (std::size_t v = 0; v < 4; ++v) {
            if (e[v] < beta[v]) {
                value = 0;
                break;
            }
            for (int k = 0; k < beta[v]; ++k) value *= e[v] - k;  // falling factorial
            mpz_class power;
            mpz_pow_ui(power.get_mpz_t(), point[v].get_mpz_t(), static_cast<unsigned long>(e[v] - beta[v]));
            value *= power;
        }
        out[i] = value;
    }
    return out;
}

std::vector<Exponent> multi_indices(int k) { return monomial_basis(k).monomials(); }

}  // namespace octic
