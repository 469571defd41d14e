#include "octic/deformations.hpp"

#include <random>

#include "octic/polynomial.hpp"

namespace octic {

namespace {

using IntVec = std::vector<mpz_class>;
using Point4 = std::array<mpz_class, 4>;

struct RationalLift {
    Rational operator()(const mpz_class& z) const { return Rational(z); }
    [[nodiscard]] Rational like() const { return Rational(0); }
};

struct ModLift {
    std::uint64_t p;
    FpElem operator()(const mpz_class& z) const { return FpElem::from_integer(z, p); }
    [[nodiscard]] FpElem like() const { return FpElem::from_residue(0, p); }
};

template <class T, class Lift>
std::vector<T> lift_vector(const IntVec& v, const Lift& lift) {
    std::vector<T> out;
    out.reserve(v.size());
    for (const auto& z : v) out.push_back(lift(z));
    return out;
}

template <class T, class Lift>
Matrix<T> lift_rows(const std::vector<IntVec>& rows, const Lift& lift) {
    Matrix<T> m(0, kOcticDimension, lift.like());
    for (const auto& r : rows) m.append_row(lift_vector<T>(r, lift));
    return m;
}

std::vector<IntVec> jacobian_vectors(const Arrangement& a) {
    const HomogeneousPoly f = branch_polynomial(a);
    if (f.degree() != 8) throw std::invalid_argument("branch equation must have degree 8");
    std::vector<IntVec> out;
    for (std::size_t i = 0; i < 4; ++i) {
        const HomogeneousPoly partial = f.derivative(i);
        for (std::size_t j = 0; j < 4; ++j) {
            Exponent e{0, 0, 0, 0};
            e[j] = 1;
            out.push_back((partial * HomogeneousPoly::monomial(e)).coefficients());
        }
    }
    return out;
}

void check_multiplicity(int m) {
    if (m < 0 || m > 8) throw std::invalid_argument("stratum multiplicity must lie in [0, 8], got " + std::to_string(m));
}

/// Generators of (I_L^m)^(8) for a line: l1^a l2^b times every monomial of degree 8 - m.
std::vector<IntVec> line_power_generators(const ProjLine& line, int m) {
    const auto gens = line.ideal_generators();
    const auto l1 = HomogeneousPoly::linear(gens[0]);
    const auto l2 = HomogeneousPoly::linear(gens[1]);
    std::vector<IntVec> out;
    for (int a = 0; a <= m; ++a) {
        HomogeneousPoly prod = HomogeneousPoly::constant(1);
        for (int k = 0; k < a; ++k) prod = prod * l1;
        for (int k = 0; k < m - a; ++k) prod = prod * l2;
        for (const auto& mono : monomial_basis(8 - m).monomials())
            out.push_back((prod * HomogeneousPoly::monomial(mono)).coefficients());
    }
    return out;
}

/// Functionals spanning the annihilator of (I_locus^m)^(8): order m-1 partial
/// derivatives at the point, or at 10-m distinct points of the line (each such
/// derivative restricts to a binary form of degree 9-m on the line).
std::vector<IntVec> stratum_functionals(const Stratum& s) {
    check_multiplicity(s.multiplicity);
    if (s.multiplicity == 0) return {};
    const auto betas = multi_indices(s.multiplicity - 1);
    std::vector<Point4> points;
    if (const auto* p = std::get_if<ProjPoint>(&s.locus)) {
        points.push_back(p->primitive());
    } else {
        const auto& line = std::get<ProjLine>(s.locus);
        const Point4 a = line.first.primitive(), b = line.second.primitive();
        for (int k = 0; k <= 9 - s.multiplicity; ++k) {
            Point4 q;
            for (std::size_t v = 0; v < 4; ++v) q[v] = a[v] + k * b[v];
            points.push_back(q);
        }
    }
    std::vector<IntVec> out;
    for (const auto& q : points)
        for (const auto& beta : betas) out.push_back(derivative_functional(beta, q));
    return out;
}

template <class T, class Lift>
Subspace<T> stratum_subspace_impl(const Stratum& s, const Lift& lift) {
    check_multiplicity(s.multiplicity);
    if (s.multiplicity == 0) return Subspace<T>::ambient(kOcticDimension, lift.like());
    if (const auto* line = std::get_if<ProjLine>(&s.locus))
        return Subspace<T>::span(lift_rows<T>(line_power_generators(*line, s.multiplicity), lift), lift.like());
    // a point: octics killed by every condition functional
    return Subspace<T>::span(lift_rows<T>(stratum_functionals(s), lift), lift.like()).annihilator();
}

template <class T, class Lift>
Subspace<T> equisingular_subspace_impl(const Arrangement& a, std::size_t min_q, const Lift& lift) {
    const auto d = classify(a);
    if (const auto v = validate(d); !v.admissible) throw AdmissibilityError(v.describe());
    const auto jac = Subspace<T>::span(lift_rows<T>(jacobian_vectors(a), lift), lift.like());
    auto result = Subspace<T>::ambient(kOcticDimension, lift.like());
    for (const auto& s : strata(d, min_q)) result = intersect(result, stratum_subspace_impl<T>(s, lift) + jac);
    return result;
}

struct DualRanks {
    std::size_t dim_jf = 0;
    std::size_t annihilator_rank = 0;  // dim of the annihilator of I_eq^(8)
    friend bool operator==(const DualRanks&, const DualRanks&) = default;
};

/// Rank of sum_i (I_i^perp cap Jf^perp) = I_eq^perp, and dim Jf.
template <class T, class Lift>
DualRanks dual_ranks(const std::vector<IntVec>& jac, const std::vector<std::vector<IntVec>>& functionals,
                     const Lift& lift) {
    const T like = lift.like();
    std::vector<std::vector<T>> jrows;
    EchelonAccumulator<T> jacc(kOcticDimension, like);
    for (const auto& v : jac) {
        jrows.push_back(lift_vector<T>(v, lift));
        jacc.add(jrows.back());
    }
    EchelonAccumulator<T> acc(kOcticDimension, like);
    for (const auto& psis : functionals) {
        std::vector<std::vector<T>> lifted;
        for (const auto& psi : psis) lifted.push_back(lift_vector<T>(psi, lift));
        // psi combinations killing every Jacobian generator
        Matrix<T> pairing(jrows.size(), lifted.size(), like);
        for (std::size_t r = 0; r < jrows.size(); ++r) {
            for (std::size_t k = 0; k < lifted.size(); ++k) {
                T s = like;
                for (std::size_t c = 0; c < kOcticDimension; ++c) {
                    if (!is_zero(jrows[r][c]) && !is_zero(lifted[k][c])) s += jrows[r][c] * lifted[k][c];
                }
                pairing.at(r, k) = s;
            }
        }
        const auto kernel = nullspace(pairing, like);
        for (std::size_t n = 0; n < kernel.rows(); ++n) {
            std::vector<T> phi(kOcticDimension, like);
            for (std::size_t k = 0; k < lifted.size(); ++k) {
                const T& ck = kernel.at(n, k);
                if (is_zero(ck)) continue;
                for (std::size_t c = 0; c < kOcticDimension; ++c)
                    if (!is_zero(lifted[k][c])) phi[c] += ck * lifted[k][c];
            }
            acc.add(std::move(phi));
        }
    }
    return {jacc.rank(), acc.rank()};
}

const char* kind_name(StratumKind k) {
    switch (k) {
        case StratumKind::DoubleLine: return "double line";
        case StratumKind::TripleLine: return "triple line";
        case StratumKind::Point: return "point";
    }
    return "?";
}

}  // namespace

std::string Stratum::describe() const {
    std::string s = kind_name(kind);
    if (const auto* p = std::get_if<ProjPoint>(&locus)) s += " " + p->str();
    else s += " {" + std::get<ProjLine>(locus).str() + "}";
    return s + " m=" + std::to_string(multiplicity);
}

std::vector<Stratum> strata(const IncidenceData& d, std::size_t min_q) {
    std::vector<Stratum> out;
    for (const auto& l : d.double_lines) out.push_back({StratumKind::DoubleLine, l, 2});
    for (const auto& l : d.triple_lines) out.push_back({StratumKind::TripleLine, l, 3});
    for (const auto& p : d.points)
        if (p.multiplicity >= min_q) out.push_back({StratumKind::Point, p.point, static_cast<int>(p.multiplicity)});
    return out;
}

OcticSubspace jacobian_subspace(const Arrangement& a) {
    return OcticSubspace::span(lift_rows<Rational>(jacobian_vectors(a), RationalLift{}), Rational(0));
}

ModOcticSubspace jacobian_subspace_mod_p(const Arrangement& a, std::uint64_t p) {
    const ModLift lift{p};
    return ModOcticSubspace::span(lift_rows<FpElem>(jacobian_vectors(a), lift), lift.like());
}

OcticSubspace stratum_subspace(const Stratum& s) { return stratum_subspace_impl<Rational>(s, RationalLift{}); }

ModOcticSubspace stratum_subspace_mod_p(const Stratum& s, std::uint64_t p) {
    return stratum_subspace_impl<FpElem>(s, ModLift{p});
}

OcticSubspace equisingular_subspace(const Arrangement& a, std::size_t min_q) {
    return equisingular_subspace_impl<Rational>(a, min_q, RationalLift{});
}

ModOcticSubspace equisingular_subspace_mod_p(const Arrangement& a, std::uint64_t p, std::size_t min_q) {
    return equisingular_subspace_impl<FpElem>(a, min_q, ModLift{p});
}

EquisingularResult equisingular_dimension(const Arrangement& a, const DeformationOptions& options) {
    const auto d = classify(a);
    if (const auto v = validate(d); !v.admissible) throw AdmissibilityError(v.describe());
    const auto jac = jacobian_vectors(a);
    const auto list = strata(d, options.min_point_multiplicity);
    std::vector<std::vector<IntVec>> functionals;
    functionals.reserve(list.size());
    for (const auto& s : list) functionals.push_back(stratum_functionals(s));

    EquisingularResult out;
    out.strata = list.size();
    out.method = options.method;
    DualRanks ranks;
    if (options.method == LinearAlgebraMethod::Exact) {
        ranks = dual_ranks<Rational>(jac, functionals, RationalLift{});
    } else {
        std::mt19937_64 rng(options.seed);
        constexpr int kMaxAttempts = 8;
        bool agreed = false;
        for (int attempt = 0; attempt < kMaxAttempts && !agreed; ++attempt) {
            const std::uint64_t p1 = random_prime(62, rng), p2 = random_prime(62, rng);
            const auto r1 = dual_ranks<FpElem>(jac, functionals, ModLift{p1});
            const auto r2 = dual_ranks<FpElem>(jac, functionals, ModLift{p2});
            if (r1 == r2) {
                ranks = r1;
                out.primes = {p1, p2};
                agreed = true;
            }
        }
        if (!agreed) ranks = dual_ranks<Rational>(jac, functionals, RationalLift{});
        if (!agreed) out.method = LinearAlgebraMethod::Exact;
    }
    out.dim_jf = ranks.dim_jf;
    out.dim_ieq = kOcticDimension - ranks.annihilator_rank;
    if (out.dim_ieq < out.dim_jf) throw std::logic_error("equisingular ideal smaller than the Jacobian ideal");
    out.h = out.dim_ieq - out.dim_jf;
    return out;
}

}  // namespace octic
