#include "octic/invariants.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace octic {

std::int64_t euler(std::span<const int> d, const IncidenceCounters& c, const IsolatedPoints& iso) {
    if (std::accumulate(d.begin(), d.end(), 0) != 8) throw std::invalid_argument("component degrees must sum to 8");
    std::int64_t e = 8;
    const std::size_t r = d.size();
    for (std::size_t i = 0; i < r; ++i) {
        const std::int64_t di = d[i];
        e -= di * di * di - 4 * di * di + 6 * di;
    }
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j) e += 2 * (4 - d[i] - d[j]) * std::int64_t{d[i]} * d[j];
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j)
            for (std::size_t k = j + 1; k < r; ++k) e -= std::int64_t{d[i]} * d[j] * d[k];
    e += 4 * static_cast<std::int64_t>(c.p4_0) + 3 * static_cast<std::int64_t>(c.p4_1) +
         16 * static_cast<std::int64_t>(c.p5_0) + 18 * static_cast<std::int64_t>(c.p5_1) +
         20 * static_cast<std::int64_t>(c.p5_2) + static_cast<std::int64_t>(c.l3) +
         2 * static_cast<std::int64_t>(iso.m2) + 36 * static_cast<std::int64_t>(iso.m4) +
         56 * static_cast<std::int64_t>(iso.m5);
    return e;
}

std::int64_t picard_rank_Y(std::size_t r, const IncidenceCounters& c, const IsolatedPoints& iso) {
    const auto pairs = static_cast<std::int64_t>(r * (r - 1) / 2);
    return 1 + pairs + static_cast<std::int64_t>(c.p4_0 + c.p4_1 + 6 * c.p5_0 + 7 * c.p5_1 + 8 * c.p5_2 + c.l3 +
                                                 iso.m4 + 2 * iso.m5);
}

std::int64_t h2_omega1_Y(std::span<const int> d, std::size_t m5) {
    const std::size_t r = d.size();
    std::int64_t twice = 0;  // sum d_i d_j (d_i + d_j - 4), always even
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j) twice += std::int64_t{d[i]} * d[j] * (d[i] + d[j] - 4);
    return 6 * static_cast<std::int64_t>(m5) + twice / 2 + static_cast<std::int64_t>(r * (r - 1) / 2);
}

HodgeSplit hodge(std::int64_t e, std::int64_t h12, std::int64_t rho_Y) {
    if (e % 2 != 0) throw std::invalid_argument("Euler number must be even, got " + std::to_string(e));
    HodgeSplit s;
    s.h11 = h12 + e / 2;
    s.skew_rank = s.h11 - rho_Y;
    if (s.h11 < 0 || s.skew_rank < 0)
        throw std::invalid_argument("inconsistent invariants: h11=" + std::to_string(s.h11) +
                                    " below rho(Y)=" + std::to_string(rho_Y));
    return s;
}

InvariantSet invariants_for_planes(const IncidenceCounters& c, std::size_t planes, std::int64_t h12) {
    const std::vector<int> degrees(planes, 1);
    InvariantSet inv;
    inv.counters = c;
    inv.e = euler(degrees, c);
    inv.rho_Y = picard_rank_Y(planes, c);
    inv.h12 = h12;
    const auto split = hodge(inv.e, h12, inv.rho_Y);
    inv.h11 = split.h11;
    inv.skew_rank = split.skew_rank;
    return inv;
}

}  // namespace octic
