#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "octic/arrangement.hpp"

namespace octic {

/// A row of the classification table of eight-plane arrangements.
struct Table1Row {
    std::size_t number = 0;
    IncidenceCounters counters;
    std::int64_t h12 = 0;
    std::int64_t h11 = 0;
    std::int64_t e = 0;
};

const std::vector<Table1Row>& table1();
const Table1Row& table1_row(std::size_t number);

/// Coefficients of (x, y, z, t) as expressions in the parameters A..D.
using PlaneTemplate = std::array<std::string, 4>;

struct CatalogEntry {
    std::string key;
    std::vector<PlaneTemplate> planes;
    ParamMap defaults;   // empty for rigid entries
    std::size_t row = 0;  // expected table row
    std::optional<std::string> newform;

    [[nodiscard]] bool is_family() const { return !defaults.empty(); }
    [[nodiscard]] std::vector<char> parameters() const;  // letters used by the templates
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry& catalog_entry(std::string_view key);

/// Arrangement of an entry at its defaults, with `overrides` substituted.
Arrangement instantiate(const CatalogEntry& entry, const ParamMap& overrides = {}, const mpz_class& scale = 1);
Arrangement catalog_get(std::string_view key, const ParamMap& overrides = {}, const mpz_class& scale = 1);

/// Deterministic parameter draws tried in order when the defaults degenerate.
const std::vector<ParamMap>& fallback_parameters();

/// First parameter choice in `fallback_parameters()` whose instance reproduces
/// the entry's row (counters and h12); nullopt if none does.
std::optional<ParamMap> resolve_parameters(const CatalogEntry& entry);

/// Arrangement document of an entry at its defaults.
std::string export_entry(std::string_view key);

}  // namespace octic
