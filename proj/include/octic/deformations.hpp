#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "octic/arrangement.hpp"
#include "octic/modp.hpp"
#include "octic/subspace.hpp"

namespace octic {

/// Number of degree-8 monomials in four variables, C(11, 3).
inline constexpr std::size_t kOcticDimension = 165;

using OcticSubspace = Subspace<Rational>;
using ModOcticSubspace = Subspace<FpElem>;

enum class StratumKind { DoubleLine, TripleLine, Point };

/// A multiple locus of the branch octic together with its multiplicity.
struct Stratum {
    StratumKind kind;
    std::variant<ProjLine, ProjPoint> locus;
    int multiplicity;

    [[nodiscard]] std::string describe() const;
};

class AdmissibilityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Strata entering the equisingular ideal: every double and triple line and
/// every point on at least `min_point_multiplicity` planes, in a fixed order.
std::vector<Stratum> strata(const IncidenceData& d, std::size_t min_point_multiplicity = 3);

/// Jf^(8): span of z_j * df/dz_i.
OcticSubspace jacobian_subspace(const Arrangement& a);
ModOcticSubspace jacobian_subspace_mod_p(const Arrangement& a, std::uint64_t p);

/// (I_locus^m)^(8). Throws when m > 8.
OcticSubspace stratum_subspace(const Stratum& s);
ModOcticSubspace stratum_subspace_mod_p(const Stratum& s, std::uint64_t p);

/// I_eq^(8) as the literal intersection of (I_C^m + Jf) over the strata.
/// Slow; used to cross-check the annihilator route.
OcticSubspace equisingular_subspace(const Arrangement& a, std::size_t min_point_multiplicity = 3);
ModOcticSubspace equisingular_subspace_mod_p(const Arrangement& a, std::uint64_t p, std::size_t min_point_multiplicity = 3);

enum class LinearAlgebraMethod { Modular, Exact };

struct DeformationOptions {
    LinearAlgebraMethod method = LinearAlgebraMethod::Modular;
    std::size_t min_point_multiplicity = 3;
    std::uint64_t seed = 0x0c71c5eedULL;  // prime draws for the modular route
};

struct EquisingularResult {
    std::size_t h = 0;        // dim (I_eq / Jf)^(8)
    std::size_t dim_jf = 0;
    std::size_t dim_ieq = 0;
    std::size_t strata = 0;
    LinearAlgebraMethod method = LinearAlgebraMethod::Modular;
    std::vector<std::uint64_t> primes;  // empty for the exact route
};

/// Number of equisingular deformations; h12 of the double cover for plane
/// arrangements. The modular route runs modulo two random 62-bit primes and
/// only accepts agreeing ranks.
EquisingularResult equisingular_dimension(const Arrangement& a, const DeformationOptions& options = {});

}  // namespace octic
