#include <random>

#include "doctest.h"
#include "octic/matrix.hpp"
#include "octic/modp.hpp"
#include "octic/polynomial.hpp"
#include "octic/rational.hpp"
#include "octic/series.hpp"
#include "octic/subspace.hpp"

using octic::FpElem;
using octic::IntSeries;
using octic::Matrix;
using octic::Rational;

namespace {

Rational random_big(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> digit(0, 9), len(1, 40), sign(0, 1);
    auto number = [&] {
        std::string s = std::to_string(1 + digit(rng) % 9);
        for (int i = len(rng); i > 0; --i) s += static_cast<char>('0' + digit(rng));
        return s;
    };
    return Rational::parse((sign(rng) ? "-" : "") + number() + "/" + number());
}

// Fraction-free Bareiss elimination over Z with row pivoting: an elimination
// independent of rref, used as a rank oracle.
std::size_t bareiss_rank(std::vector<std::vector<mpz_class>> m) {
    const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    mpz_class prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t k = c + 1; k < cols; ++k) {
                m[i][k] = m[i][k] * m[r][c] - m[i][c] * m[r][k];
                mpz_divexact(m[i][k].get_mpz_t(), m[i][k].get_mpz_t(), prev.get_mpz_t());
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return r;
}

Matrix<Rational> to_rational(const std::vector<std::vector<mpz_class>>& rows) {
    Matrix<Rational> m(0, rows[0].size(), Rational(0));
    for (const auto& r : rows) {
        std::vector<Rational> v;
        for (const auto& z : r) v.emplace_back(z);
        m.append_row(v);
    }
    return m;
}

template <class T>
std::vector<T> unit(std::size_t n, std::size_t i, const T& like) {
    std::vector<T> v(n, octic::zero_like(like));
    v[i] = octic::one_like(like);
    return v;
}

template <class T, class Draw>
octic::Subspace<T> random_subspace(std::size_t dim, std::size_t ambient, const T& like, Draw&& draw) {
    Matrix<T> m(0, ambient, octic::zero_like(like));
    for (std::size_t i = 0; i < dim; ++i) {
        std::vector<T> v;
        for (std::size_t j = 0; j < ambient; ++j) v.push_back(draw());
        m.append_row(v);
    }
    return octic::Subspace<T>::span(m, like);
}

}  // namespace

TEST_SUITE("exact math") {

TEST_CASE("rationals stay reduced with positive denominators") {
    CHECK(Rational::parse("-6/4").str() == "-3/2");
    CHECK(Rational(mpz_class(6), mpz_class(-4)).str() == "-3/2");
    CHECK(Rational::parse("0/7").str() == "0");
    CHECK(Rational::parse("-12").str() == "-12");
    CHECK(Rational::parse("10/5").is_integer());
    CHECK(Rational::parse("3/4").denominator() == 4);
    CHECK_THROWS_WITH_AS(Rational::parse("1/0"), doctest::Contains("zero denominator"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("2/3/4"), std::invalid_argument);
}

TEST_CASE("rational arithmetic is exact on large random inputs") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        const Rational a = random_big(rng), c = random_big(rng);
        CHECK((a + c) - c == a);
        CHECK((a * c) / c == a);
        CHECK(Rational::parse(a.str()) == a);
    }
}

TEST_CASE("squarefree part keeps the sign") {
    CHECK(octic::squarefree_part(12) == 3);
    CHECK(octic::squarefree_part(-18) == -2);
    CHECK(octic::squarefree_part(1) == 1);
    CHECK(octic::squarefree_part(-1) == -1);
    CHECK(octic::squarefree_part(2 * 2 * 3 * 5 * 5 * 7) == 21);
}

TEST_CASE("primality and prime draws") {
    for (std::uint64_t n = 0; n < 5000; ++n) {
        bool trial = n >= 2;
        for (std::uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) trial = false;
        CHECK(octic::is_prime(n) == trial);
    }
    CHECK(octic::is_prime((1ULL << 61) - 1));
    CHECK_FALSE(octic::is_prime(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
    std::mt19937_64 rng(5);
    for (int i = 0; i < 5; ++i) {
        const auto p = octic::random_prime(62, rng);
        CHECK(octic::is_prime(p));
        CHECK(p >= (1ULL << 61));
        CHECK(p < (1ULL << 62));
    }
    CHECK(octic::primes_in_range(5, 30) == std::vector<std::uint64_t>{5, 7, 11, 13, 17, 19, 23, 29});
}

TEST_CASE("prime field elements") {
    const std::uint64_t p = 1000003;
    const auto a = FpElem(123456, p), b = FpElem(-5, p);
    CHECK(b.residue() == p - 5);
    CHECK((a * a.inverse()).residue() == 1);
    CHECK((a / b) * b == a);
    CHECK(FpElem::from_rational(Rational::parse("1/2"), 7).residue() == 4);
    CHECK(FpElem::from_integer(mpz_class("-1000000000000000000000"), 7) ==
          FpElem::from_rational(Rational::parse("-1000000000000000000000"), 7));
    CHECK_THROWS_AS(FpElem::from_rational(Rational::parse("1/7"), 7), std::domain_error);
    CHECK_THROWS_AS(FpElem(1, 5) + FpElem(1, 7), std::invalid_argument);
}

TEST_CASE("legendre symbol") {
    CHECK(octic::legendre(FpElem(0, 7)) == 0);
    CHECK(octic::legendre(FpElem(4, 5)) == 1);
    CHECK(octic::legendre(FpElem(2, 5)) == -1);
    for (std::uint64_t p : octic::primes_in_range(3, 97)) {
        const octic::LegendreTable table(static_cast<std::uint32_t>(p));
        for (std::uint64_t a = 1; a < p; ++a) {
            // Euler's criterion against the table of squares
            CHECK(octic::legendre(FpElem::from_residue(a, p)) == table(a));
            for (std::uint64_t b = 1; b < p; ++b)
                CHECK(octic::legendre(FpElem::from_residue(a * b % p, p)) ==
                      octic::legendre(FpElem::from_residue(a, p)) * octic::legendre(FpElem::from_residue(b, p)));
        }
    }
}

TEST_CASE("rref examples") {
    Matrix<Rational> id(3, 3, Rational(0));
    for (std::size_t i = 0; i < 3; ++i) id.at(i, i) = 1;
    auto r = octic::rref(id);
    CHECK(r.rank == 3);
    CHECK(r.reduced == id);

    const auto m = Matrix<Rational>::from_rows({{1, 2}, {2, 4}}, 2);
    r = octic::rref(m);
    CHECK(r.rank == 1);
    CHECK(r.reduced == Matrix<Rational>::from_rows({{1, 2}}, 2));
    CHECK(r.pivots == std::vector<std::size_t>{0});

    const auto n = Matrix<Rational>::from_rows({{0, 2, 4}, {1, 1, 1}, {1, 2, 3}}, 3);
    r = octic::rref(n);
    CHECK(r.rank == 2);
    CHECK(r.reduced == Matrix<Rational>::from_rows({{1, 0, -1}, {0, 1, 2}}, 3));
    CHECK(octic::rref(r.reduced).reduced == r.reduced);
}

TEST_CASE("rank of products of linear forms matches fraction-free elimination") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> coeff(-3, 3);
    for (int trial = 0; trial < 3; ++trial) {
        std::vector<std::vector<mpz_class>> rows;
        for (int i = 0; i < 16; ++i) {
            auto poly = octic::HomogeneousPoly::constant(1);
            for (int k = 0; k < 8; ++k) {
                octic::Coords c{Rational(coeff(rng)), Rational(coeff(rng)), Rational(coeff(rng)), Rational(1)};
                poly = poly * octic::HomogeneousPoly::linear(octic::LinearForm(c));
            }
            rows.push_back(poly.coefficients());
        }
        // force a dependency so the rank is not trivially full
        std::vector<mpz_class> combo(rows[0].size());
        for (std::size_t k = 0; k < combo.size(); ++k) combo[k] = 2 * rows[0][k] - 3 * rows[1][k];
        rows[15] = combo;
        const auto m = to_rational(rows);
        const auto r = octic::rref(m);
        CHECK(r.rank == bareiss_rank(rows));
        CHECK(r.rank <= 15);
        CHECK(octic::rref(r.reduced).reduced == r.reduced);
        // row space preserved: every original row lies in the span of the reduced rows
        const auto s = octic::Subspace<Rational>::span(m, Rational(0));
        for (std::size_t i = 0; i < m.rows(); ++i) CHECK(s.contains(m.row(i)));
    }
}

TEST_CASE("nullspace rows are annihilated") {
    const auto m = Matrix<Rational>::from_rows({{1, 2, 3, 4}, {2, 4, 6, 8}, {0, 1, 1, 1}}, 4);
    const auto n = octic::nullspace(m);
    CHECK(n.rows() == 2);
    for (std::size_t k = 0; k < n.rows(); ++k)
        for (std::size_t i = 0; i < m.rows(); ++i) {
            Rational s(0);
            for (std::size_t j = 0; j < 4; ++j) s += m.at(i, j) * n.at(k, j);
            CHECK(s.is_zero());
        }
}

TEST_CASE("subspace sum and intersection examples") {
    using S = octic::Subspace<Rational>;
    const Rational z(0);
    const auto e = [&](std::size_t i) { return unit<Rational>(3, i, z); };
    const S a = S::span(Matrix<Rational>::from_rows({e(0)}, 3), z);
    const S b = S::span(Matrix<Rational>::from_rows({e(1)}, 3), z);
    CHECK((a + b).dim() == 2);
    CHECK(a + a == a);
    const S ab = S::span(Matrix<Rational>::from_rows({e(0), e(1)}, 3), z);
    const S bc = S::span(Matrix<Rational>::from_rows({e(1), e(2)}, 3), z);
    CHECK(octic::subspace_intersect(ab, bc) == b);
    CHECK(octic::subspace_intersect(ab, S::ambient(3, z)) == ab);
    CHECK(octic::subspace_sum(ab, bc) == S::ambient(3, z));
    CHECK_THROWS_AS(ab + S::ambient(4, z), std::invalid_argument);
    CHECK_THROWS_AS(octic::subspace_intersect(ab, S::ambient(4, z)), std::invalid_argument);
}

TEST_CASE("dimension formula on random rational subspaces of the octic space") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> small(-4, 4), dims(1, 12);
    const std::size_t n = 165;
    for (int trial = 0; trial < 3; ++trial) {
        // a shared part makes the intersection nontrivial
        const auto shared = static_cast<std::size_t>(dims(rng)) / 2;
        const auto da = static_cast<std::size_t>(dims(rng)), db = static_cast<std::size_t>(dims(rng));
        auto draw = [&] { return Rational(small(rng)); };
        const auto common = random_subspace<Rational>(shared, n, Rational(0), draw);
        const auto a = common + random_subspace<Rational>(da, n, Rational(0), draw);
        const auto b = common + random_subspace<Rational>(db, n, Rational(0), draw);
        const auto sum = a + b, cap = intersect(a, b);
        CHECK(sum.dim() + cap.dim() == a.dim() + b.dim());
        CHECK(a.contains(cap));
        CHECK(b.contains(cap));
        CHECK(cap.contains(common));
    }
}

TEST_CASE("dimension formula on random subspaces modulo a large prime") {
    std::mt19937_64 rng(19);
    const std::uint64_t p = (1ULL << 61) - 1;
    const FpElem like = FpElem::from_residue(0, p);
    std::uniform_int_distribution<std::uint64_t> any(0, p - 1), sparse(0, 3), dims(1, 20);
    for (int trial = 0; trial < 20; ++trial) {
        auto draw = [&] { return FpElem::from_residue(sparse(rng) == 0 ? any(rng) : 0, p); };
        const auto common = random_subspace<FpElem>(static_cast<std::size_t>(dims(rng)) / 2, 165, like, draw);
        const auto a = common + random_subspace<FpElem>(static_cast<std::size_t>(dims(rng)), 165, like, draw);
        const auto b = common + random_subspace<FpElem>(static_cast<std::size_t>(dims(rng)), 165, like, draw);
        CHECK((a + b).dim() + intersect(a, b).dim() == a.dim() + b.dim());
        CHECK(a.annihilator().dim() == 165 - a.dim());
        CHECK(a.annihilator().annihilator() == a);
    }
}

TEST_CASE("echelon accumulator tracks the rank of its inputs") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<long> small(-2, 2);
    Matrix<Rational> rows(0, 30, Rational(0));
    octic::EchelonAccumulator<Rational> acc(30, Rational(0));
    for (int i = 0; i < 25; ++i) {
        std::vector<Rational> v(30, Rational(0));
        for (std::size_t j = 0; j < 30; ++j)
            if (j % 3 == static_cast<std::size_t>(i) % 3) v[j] = Rational(small(rng));
        rows.append_row(v);
        acc.add(v);
        CHECK(acc.rank() == octic::rank(rows));
        CHECK(acc.contains(v));
    }
    CHECK_THROWS_AS(acc.add(std::vector<Rational>(3, Rational(0))), std::invalid_argument);
}

TEST_CASE("truncated series products") {
    const IntSeries one_plus_q(3, {1, 1, 0}), one_minus_q(3, {1, -1, 0});
    CHECK(one_plus_q * one_minus_q == IntSeries(3, {1, 0, -1}));
    const IntSeries a(5, {3, -1, 4, 1, -5});
    CHECK(a * IntSeries::one(5) == a);
    IntSeries geometric(10);
    for (std::size_t n = 0; n < 10; ++n) geometric[n] = 1;
    CHECK(geometric * IntSeries(10, {1, -1, 0, 0, 0, 0, 0, 0, 0, 0}) == IntSeries::one(10));
    CHECK(IntSeries(10, {1, -1, 0, 0, 0, 0, 0, 0, 0, 0}).inverse() == geometric);
    CHECK(a.pow(0) == IntSeries::one(5));
    CHECK(one_plus_q.pow(2) == IntSeries(3, {1, 2, 1}));
    CHECK(one_plus_q.pow(-1) * one_plus_q == IntSeries::one(3));
    CHECK(octic::series_add(one_plus_q, one_minus_q) == IntSeries(3, {2, 0, 0}));
    CHECK_THROWS_AS(one_plus_q * a, std::invalid_argument);
    CHECK_THROWS_AS((void)a.inverse(), std::domain_error);
}

}
