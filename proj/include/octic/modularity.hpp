#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "octic/series.hpp"

namespace octic {

/// Primes at which the reference coefficients are tabulated.
inline constexpr std::array<std::uint64_t, 8> kTablePrimes{5, 7, 11, 13, 17, 19, 23, 73};

/// q^shift * prod_m prod_{n>=1} (1 - q^{mn})^{e_m}, shift = sum(m e_m) / 24.
struct EtaQuotient {
    std::map<int, int> exponents;

    [[nodiscard]] int weight_twice() const;    // sum e_m
    [[nodiscard]] int shift_times_24() const;  // sum m e_m
    [[nodiscard]] std::string str() const;     // "eta(2t)^4 eta(4t)^4"
};

enum class CandidateStatus { Verified, Unverified };

struct NewformRef {
    std::string label;
    int level = 0;
    std::map<std::uint64_t, std::int64_t> ap;
    std::vector<EtaQuotient> eta_candidates;
};

/// Reference rows, keyed by label. Checked on first use: complete for the
/// table primes, within the Weil bound, pairwise distinct.
const std::vector<NewformRef>& newform_table();
const NewformRef& newform(std::string_view label);

/// Tabulated a_p; throws for an unknown label or prime.
std::int64_t newform_ap(std::string_view label, std::uint64_t p);

/// prod_{n>=1} (1 - q^{step n}) to the given precision, by the pentagonal
/// number theorem.
IntSeries euler_product(int step, std::size_t precision);

/// Coefficients c_0..c_{N-1} of a weight-4 eta quotient with shift 1. Throws on
/// non-integral weight or shift, or any other weight or shift.
IntSeries eta_qexp(const EtaQuotient& q, std::size_t precision);

/// A candidate is verified when its normalized expansion agrees with the table,
/// is multiplicative on coprime indices and satisfies the Hecke relation at
/// p^2 for the primes whose square fits in the expansion.
CandidateStatus candidate_status(const NewformRef& form, const EtaQuotient& q, std::size_t precision = 200);

struct LabelAgreement {
    std::string label;
    std::size_t agreeing = 0;  // table primes where the values coincide
};

struct MatchResult {
    std::optional<std::string> label;  // set only on agreement at every table prime
    std::vector<LabelAgreement> agreement;
};

/// Label whose table agrees at every table prime. Throws when a table prime is
/// missing from `ap`.
MatchResult match(const std::map<std::uint64_t, std::int64_t>& ap);

}  // namespace octic
