#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "octic/rational.hpp"

namespace octic {

/// Homogeneous coordinates are ordered (x, y, z, t).
using Coords = std::array<Rational, 4>;

/// a0 x + a1 y + a2 z + a3 t with integral coprime coefficients and a
/// positive first nonzero coefficient.
class LinearForm {
public:
    /// Normalizes `coeffs`; `factor` (when given) receives c with coeffs = c * normalized.
    explicit LinearForm(const Coords& coeffs, Rational* factor = nullptr);

    [[nodiscard]] const Coords& coeffs() const { return c_; }
    [[nodiscard]] const Rational& operator[](std::size_t i) const { return c_[i]; }
    [[nodiscard]] Rational evaluate(const Coords& point) const;
    [[nodiscard]] std::string str() const;  // e.g. "x + 2*y - z - t"

    friend bool operator==(const LinearForm&, const LinearForm&) = default;

private:
    Coords c_;
};

/// Projective point with first nonzero coordinate equal to 1.
class ProjPoint {
public:
    explicit ProjPoint(const Coords& coords);
    [[nodiscard]] const Coords& coords() const { return c_; }
    [[nodiscard]] const Rational& operator[](std::size_t i) const { return c_[i]; }
    /// Same point with coprime integer coordinates (first nonzero positive).
    [[nodiscard]] std::array<mpz_class, 4> primitive() const;
    [[nodiscard]] std::string str() const;  // "(1:-1:0:0)"

    friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
    friend auto operator<=>(const ProjPoint& a, const ProjPoint& b) { return a.c_ <=> b.c_; }

private:
    Coords c_;
};

/// Line of P^3 stored by the RREF of a spanning pair of points, which is
/// independent of the representatives used to build it.
struct ProjLine {
    ProjPoint first;
    ProjPoint second;
    std::vector<std::size_t> planes;  // indices of arrangement planes containing the line

    /// Two independent linear forms cutting out the line (canonical, primitive).
    [[nodiscard]] std::array<LinearForm, 2> ideal_generators() const;
    [[nodiscard]] bool contains(const ProjPoint& p) const;
    [[nodiscard]] std::string str() const;

    friend bool operator==(const ProjLine& a, const ProjLine& b) { return a.first == b.first && a.second == b.second; }
};

struct Arrangement {
    std::string name;
    std::vector<LinearForm> forms;
    mpz_class scale = 1;  // squarefree; the branch equation is scale * prod(forms)

    [[nodiscard]] std::size_t size() const { return forms.size(); }
};

using ParamMap = std::map<char, Rational>;

/// Builds a normalized arrangement from raw plane coefficients. The rational
/// constant lost when normalizing each form is folded (up to squares) into the
/// scale, so the branch equation keeps its square class.
Arrangement make_arrangement(std::string name, const std::vector<Coords>& planes, const mpz_class& scale = 1,
                             std::size_t required_planes = 8);

/// Evaluates a coefficient expression such as "-D/(1-D)", "A*B", "B^2" or "3/4".
Rational evaluate_coefficient(std::string_view expression, const ParamMap& params);

/// Parses the JSON arrangement document. `overrides` replace document params.
Arrangement parse_arrangement(std::string_view document, const ParamMap& overrides = {});

/// Arrangement document for `a` (planes as "num/den" strings).
std::string export_arrangement(const Arrangement& a);

ProjLine intersect_planes(const LinearForm& f, const LinearForm& g);

struct IncidenceCounters {
    std::size_t p3 = 0;
    std::size_t p4_0 = 0;
    std::size_t p4_1 = 0;
    std::size_t p5_0 = 0;
    std::size_t p5_1 = 0;
    std::size_t p5_2 = 0;
    std::size_t l3 = 0;

    [[nodiscard]] std::array<std::size_t, 7> as_array() const { return {p3, p4_0, p4_1, p5_0, p5_1, p5_2, l3}; }
    friend auto operator<=>(const IncidenceCounters&, const IncidenceCounters&) = default;
};

struct IncidencePoint {
    ProjPoint point;
    std::vector<std::size_t> planes;
    std::size_t multiplicity = 0;   // number of planes through the point
    std::size_t triple_lines = 0;   // number of triple lines through the point
};

struct IncidenceData {
    std::vector<ProjLine> double_lines;
    std::vector<ProjLine> triple_lines;
    std::vector<ProjLine> heavy_lines;  // on four or more planes
    std::vector<IncidencePoint> points;  // every point on three or more planes
    IncidenceCounters counters;
};

/// Full incidence lattice of a plane arrangement over Q. Throws on
/// proportional planes.
IncidenceData classify(const Arrangement& a);

/// Counters and double-line count of the reduction modulo an odd prime.
struct ModularIncidence {
    bool distinct_planes = true;
    IncidenceCounters counters;
    std::size_t double_lines = 0;
    std::size_t heavy_lines = 0;
    std::size_t heavy_points = 0;
};
ModularIncidence classify_mod_p(const Arrangement& a, std::uint64_t p);

struct Verdict {
    bool admissible = true;
    std::vector<ProjLine> bad_lines;        // lines on >= 4 planes
    std::vector<IncidencePoint> bad_points;  // points on >= 6 planes
    [[nodiscard]] std::string describe() const;
};

Verdict validate(const IncidenceData& d);

}  // namespace octic
