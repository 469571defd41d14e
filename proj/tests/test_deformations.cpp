#include <random>

#include "doctest.h"
#include "octic/catalog.hpp"
#include "octic/deformations.hpp"
#include "octic/polynomial.hpp"
#include "support.hpp"

using octic::Rational;
using octic::Stratum;
using octic::StratumKind;

namespace {

constexpr std::uint64_t kPrime = (1ULL << 61) - 1;

octic::ProjPoint point(long a, long b, long c, long d) {
    return octic::ProjPoint(octic::Coords{Rational(a), Rational(b), Rational(c), Rational(d)});
}

octic::LinearForm form(long a, long b, long c, long d) {
    return octic::LinearForm(octic::Coords{Rational(a), Rational(b), Rational(c), Rational(d)});
}

std::size_t h_of(const octic::Arrangement& a) { return octic::equisingular_dimension(a).h; }

}  // namespace

TEST_SUITE("deformations") {

TEST_CASE("jacobian subspace") {
    octic::Arrangement power;
    power.forms.assign(8, form(1, 0, 0, 0));
    CHECK(octic::jacobian_subspace(power).dim() == 4);
    CHECK(octic::jacobian_subspace_mod_p(power, kPrime).dim() == 4);

    const auto a = octic::catalog_get("85");
    const auto j = octic::jacobian_subspace(a);
    CHECK(j.dim() <= 16);
    CHECK(j.ambient_dim() == octic::kOcticDimension);
    auto scaled = a;
    scaled.scale = 3;
    CHECK(octic::jacobian_subspace(scaled) == j);
}

TEST_CASE("stratum subspaces") {
    SUBCASE("double line x = y = 0") {
        const Stratum s{StratumKind::DoubleLine, octic::intersect_planes(form(1, 0, 0, 0), form(0, 1, 0, 0)), 2};
        std::size_t oracle = 0;
        for (const auto& e : octic::monomial_basis(8).monomials()) oracle += e[0] + e[1] >= 2;
        CHECK(oracle == 140);
        CHECK(octic::stratum_subspace(s).dim() == oracle);
        CHECK(octic::stratum_subspace_mod_p(s, kPrime).dim() == oracle);
    }
    SUBCASE("fourfold point (1:0:0:0)") {
        const Stratum s{StratumKind::Point, point(1, 0, 0, 0), 4};
        // Taylor conditions in the affine chart x = 1: monomials of degree <= 3 in y, z, t
        std::size_t conditions = 0;
        for (int a = 0; a <= 3; ++a)
            for (int b = 0; a + b <= 3; ++b)
                for (int c = 0; a + b + c <= 3; ++c) ++conditions;
        CHECK(conditions == 20);
        CHECK(octic::kOcticDimension - octic::stratum_subspace(s).dim() == conditions);
    }
    SUBCASE("point away from the coordinate vertices") {
        const Stratum s{StratumKind::Point, point(1, -1, 2, 3), 3};
        const auto v = octic::stratum_subspace(s);
        CHECK(octic::kOcticDimension - v.dim() == 10);
        // the point lies on x + y = 0, so (x + y)^k z^(8-k) vanishes to order k there
        const auto l = octic::HomogeneousPoly::linear(form(1, 1, 0, 0));
        const auto z = octic::HomogeneousPoly::linear(form(0, 0, 1, 0));
        auto power = [](const octic::HomogeneousPoly& f, int k) {
            auto out = octic::HomogeneousPoly::constant(1);
            for (int i = 0; i < k; ++i) out = out * f;
            return out;
        };
        auto as_vector = [](const octic::HomogeneousPoly& f) {
            std::vector<Rational> v;
            for (const auto& c : f.coefficients()) v.emplace_back(c);
            return v;
        };
        CHECK(v.contains(as_vector(power(l, 3) * power(z, 5))));
        CHECK_FALSE(v.contains(as_vector(power(l, 2) * power(z, 6))));
    }
    SUBCASE("multiplicity bounds") {
        const Stratum full{StratumKind::Point, point(0, 0, 0, 1), 0};
        CHECK(octic::stratum_subspace(full).dim() == octic::kOcticDimension);
        const Stratum too_big{StratumKind::Point, point(0, 0, 0, 1), 9};
        CHECK_THROWS_AS(octic::stratum_subspace(too_big), std::invalid_argument);
    }
}

TEST_CASE("sum of the jacobian and a line square matches stacking") {
    const auto a = octic::catalog_get("2");
    const auto j = octic::jacobian_subspace(a);
    const Stratum s{StratumKind::TripleLine, octic::intersect_planes(form(1, 0, 0, 0), form(0, 1, 0, 0)), 2};
    const auto i = octic::stratum_subspace(s);
    octic::RationalMatrix stacked = j.basis();
    for (std::size_t r = 0; r < i.dim(); ++r) stacked.append_row(i.basis().row(r));
    CHECK((j + i).dim() == octic::rank(stacked));
}

TEST_CASE("literal intersection agrees with the annihilator route") {
    for (const char* key : {"85", "2", "f1", "f83"}) {
        CAPTURE(key);
        const auto a = octic::catalog_get(key);
        const auto ieq = octic::equisingular_subspace_mod_p(a, kPrime);
        const auto jf = octic::jacobian_subspace_mod_p(a, kPrime);
        CHECK(ieq.contains(jf));
        const auto r = octic::equisingular_dimension(a);
        CHECK(r.dim_ieq == ieq.dim());
        CHECK(r.dim_jf == jf.dim());
        CHECK(r.h == ieq.dim() - jf.dim());
    }
    // rigid: the intersection of all strata collapses onto the jacobian
    const auto a = octic::catalog_get("85");
    CHECK(octic::equisingular_subspace_mod_p(a, kPrime) == octic::jacobian_subspace_mod_p(a, kPrime));
}

TEST_CASE("exact and modular linear algebra agree") {
    octic::DeformationOptions exact;
    exact.method = octic::LinearAlgebraMethod::Exact;
    for (const char* key : {"2", "f1"}) {
        CAPTURE(key);
        const auto a = octic::catalog_get(key);
        const auto m = octic::equisingular_dimension(a);
        const auto e = octic::equisingular_dimension(a, exact);
        CHECK(m.method == octic::LinearAlgebraMethod::Modular);
        CHECK(m.primes.size() == 2);
        CHECK(e.method == octic::LinearAlgebraMethod::Exact);
        CHECK(e.primes.empty());
        CHECK(m.h == e.h);
        CHECK(m.dim_jf == e.dim_jf);
        CHECK(m.dim_ieq == e.dim_ieq);
    }
}

TEST_CASE("exact jacobian is contained in the exact equisingular subspace") {
    const auto a = octic::catalog_get("f1");
    const auto ieq = octic::equisingular_subspace(a);
    const auto jf = octic::jacobian_subspace(a);
    CHECK(ieq.contains(jf));
    CHECK(ieq.dim() - jf.dim() == 1);
}

TEST_CASE("redundant strata do not change the intersection") {
    const auto a = octic::catalog_get("f1");
    const auto d = octic::classify(a);
    const auto ieq = octic::equisingular_subspace_mod_p(a, kPrime);
    const auto jf = octic::jacobian_subspace_mod_p(a, kPrime);
    const Stratum again{StratumKind::DoubleLine, d.double_lines.front(), 2};
    CHECK(intersect(ieq, octic::stratum_subspace_mod_p(again, kPrime) + jf) == ieq);
}

TEST_CASE("h12 is invariant under coordinate changes and scaling") {
    std::mt19937_64 rng(43);
    for (const char* key : {"2", "f1", "f83"}) {
        CAPTURE(key);
        const auto a = octic::catalog_get(key);
        const auto h = h_of(a);
        for (int i = 0; i < 2; ++i) CHECK(h_of(testing_support::transform(a, testing_support::random_unimodular(rng))) == h);
        auto scaled = a;
        scaled.scale = -7;
        CHECK(h_of(scaled) == h);
    }
}

TEST_CASE("stratum list and point policy") {
    const auto d = octic::classify(octic::catalog_get("2"));
    const auto all = octic::strata(d);
    CHECK(all.size() == d.double_lines.size() + d.triple_lines.size() + d.points.size());
    const auto heavy = octic::strata(d, 4);
    CHECK(all.size() - heavy.size() == d.counters.p3);
    CHECK(all.front().describe().rfind("double line {", 0) == 0);
    // both point policies give the tabulated h12 on every catalog entry
    for (const auto& e : octic::catalog()) {
        CAPTURE(e.key);
        const auto a = octic::instantiate(e);
        octic::DeformationOptions four;
        four.min_point_multiplicity = 4;
        CHECK(octic::equisingular_dimension(a, four).h == octic::equisingular_dimension(a).h);
    }
}

TEST_CASE("inadmissible arrangements are refused") {
    const auto pencil = testing_support::from_integers(
        "pencil", {{1, 0, 0, 0}, {0, 1, 0, 0}, {1, 1, 0, 0}, {1, -1, 0, 0}, {1, 2, 3, 5}, {3, -1, 4, 1},
                   {2, 7, -1, 8}, {5, 3, 11, -2}});
    CHECK_THROWS_AS(octic::equisingular_dimension(pencil), octic::AdmissibilityError);
}

}
