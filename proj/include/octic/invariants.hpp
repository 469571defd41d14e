#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "octic/arrangement.hpp"

namespace octic {

/// Counts of isolated singular points of the components; always zero for
/// plane arrangements.
struct IsolatedPoints {
    std::size_t m2 = 0;
    std::size_t m4 = 0;
    std::size_t m5 = 0;
};

/// Euler number of the resolved double cover for an octic arrangement with
/// components of degrees `degrees` (no triple elliptic curves).
std::int64_t euler(std::span<const int> degrees, const IncidenceCounters& c, const IsolatedPoints& iso = {});

/// Rank of Pic(Y), Y the blow-up of P^3 resolving an arrangement of r components.
std::int64_t picard_rank_Y(std::size_t r, const IncidenceCounters& c, const IsolatedPoints& iso = {});

/// h^2(Omega^1_Y).
std::int64_t h2_omega1_Y(std::span<const int> degrees, std::size_t m5 = 0);

struct HodgeSplit {
    std::int64_t h11 = 0;
    std::int64_t skew_rank = 0;  // h11 - rho(Y)
};

/// h11 = h12 + e/2 and the skew part of the Picard group. Throws when e is
/// odd or the skew rank would be negative.
HodgeSplit hodge(std::int64_t e, std::int64_t h12, std::int64_t rho_Y);

struct InvariantSet {
    IncidenceCounters counters;
    std::int64_t e = 0;
    std::int64_t rho_Y = 0;
    std::int64_t h11 = 0;
    std::int64_t h12 = 0;
    std::int64_t skew_rank = 0;
};

/// Assembles the invariants of an eight-plane arrangement; h12 comes from the
/// deformation computation.
InvariantSet invariants_for_planes(const IncidenceCounters& c, std::size_t planes, std::int64_t h12);

/// h^{1,2}(Y): sum of genera of blown-up curves. Every centre is a line or a
/// point for plane arrangements.
constexpr std::int64_t kH12OfBlowupForPlanes = 0;

}  // namespace octic
