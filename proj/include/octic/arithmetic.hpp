#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "octic/arrangement.hpp"

namespace octic {

class BadPrimeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct PrimeVerdict {
    bool good = false;
    std::string reason;  // empty when good
};

/// p is good when it is an odd prime not dividing the scale and the reduction
/// mod p has the same incidence counters and the same number of double lines
/// (so no planes collide and no new lines or points of higher multiplicity appear).
PrimeVerdict good_prime(const Arrangement& a, std::uint64_t p);

/// Counting is plain enumeration; primes beyond this bound are refused.
inline constexpr std::uint64_t kMaxCountingPrime = 1u << 20;

struct CountOptions {
    unsigned threads = 1;
    std::size_t chunks = 0;  // 0: one chunk per value of the first affine coordinate
};

/// Sum over P^3(F_p) of 1 + (scale*f / p).
std::int64_t count_singular(const Arrangement& a, std::uint64_t p, const CountOptions& options = {});

/// Number of normalized representatives visited by the enumeration of P^3(F_p).
std::uint64_t enumerated_points(std::uint64_t p, const CountOptions& options = {});

/// Constant term of the line correction, C(8, 2) = 28.
inline constexpr std::int64_t kLineCorrectionConstant = 28;

/// (p4^1 + 6 p5^0 + 7 p5^1 + 8 p5^2 + l3 + 28)(p + p^2).
std::int64_t line_corrections(const IncidenceCounters& c, std::uint64_t p);

/// Sum over P^2(F_p) of 1 + (c * l1 l2 ... / p) for lines given by their
/// coefficients mod p.
std::int64_t count_plane_cover(const std::vector<std::array<std::uint64_t, 3>>& lines, std::uint64_t c,
                               std::uint64_t p);

/// Points gained by blowing up one p4^0 point: the double plane branched along
/// the four incident planes restricted to a complement, minus the single point
/// of the singular cover over P. The complement is the plane `complement` = 0,
/// which must not pass through P; by default the coordinate plane of the first
/// nonzero coordinate of P.
std::int64_t fourfold_correction(const Arrangement& a, const IncidencePoint& point, std::uint64_t p,
                                 const std::optional<LinearForm>& complement = std::nullopt);

struct CountRecord {
    std::uint64_t p = 0;
    std::int64_t raw = 0;
    std::int64_t line_corr = 0;
    std::int64_t fourfold_corr = 0;
    std::int64_t total = 0;
    std::int64_t a_p = 0;

    friend bool operator==(const CountRecord&, const CountRecord&) = default;
};

/// Full count record. h11 and h12 come from the invariants pipeline; h12 only
/// feeds the Weil bound check.
CountRecord count_record(const Arrangement& a, const IncidenceData& d, std::uint64_t p, std::int64_t h11,
                         std::int64_t h12, const CountOptions& options = {});

/// 1 + p^3 + h11 (p + p^2) - #X(F_p).
std::int64_t a_p(const Arrangement& a, std::uint64_t p, std::int64_t h11, std::int64_t h12,
                 const CountOptions& options = {});

/// One record per prime, in the given order. Throws BadPrimeError on the
/// first bad prime.
std::vector<CountRecord> lseries(const Arrangement& a, const std::vector<std::uint64_t>& primes, std::int64_t h11,
                                 std::int64_t h12, const CountOptions& options = {});

/// |a_p| <= b3 p^{3/2} with b3 = 2 + 2 h12.
bool within_weil_bound(std::int64_t a_p, std::uint64_t p, std::int64_t h12);

}  // namespace octic
