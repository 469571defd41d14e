#include <random>
#include <vector>

#include "doctest.h"
#include "octic/invariants.hpp"

using octic::IncidenceCounters;

namespace {

const std::vector<int> kPlanes(8, 1);

IncidenceCounters counters(std::size_t p3, std::size_t p40, std::size_t p41, std::size_t p50, std::size_t p51,
                           std::size_t p52, std::size_t l3) {
    return {p3, p40, p41, p50, p51, p52, l3};
}

}  // namespace

TEST_SUITE("invariants") {

TEST_CASE("euler number") {
    CHECK(octic::euler(kPlanes, counters(56, 0, 0, 0, 0, 0, 0)) == 40);
    CHECK(octic::euler(kPlanes, counters(4, 1, 4, 0, 0, 4, 4)) == 140);
    CHECK(octic::euler(kPlanes, counters(8, 0, 4, 0, 0, 4, 4)) == 136);
    CHECK(octic::euler(kPlanes, counters(8, 12, 0, 0, 0, 0, 0)) == 88);
    // the smooth octic: 8 - (512 - 256 + 48) = -296
    CHECK(octic::euler(std::vector<int>{8}, {}) == -296);
    CHECK_THROWS_AS(octic::euler(std::vector<int>(7, 1), {}), std::invalid_argument);
}

TEST_CASE("euler number moves by the documented deltas") {
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<std::size_t> n(0, 12);
    for (int i = 0; i < 200; ++i) {
        const auto c = counters(n(rng), n(rng), n(rng), n(rng), n(rng), n(rng), n(rng));
        const auto e = octic::euler(kPlanes, c);
        auto d = c;
        ++d.p4_0;
        CHECK(octic::euler(kPlanes, d) == e + 4);
        CHECK(octic::picard_rank_Y(8, d) == octic::picard_rank_Y(8, c) + 1);
    }
}

TEST_CASE("picard rank of the blow-up") {
    CHECK(octic::picard_rank_Y(8, counters(4, 1, 4, 0, 0, 4, 4)) == 70);
    CHECK(octic::picard_rank_Y(8, counters(8, 12, 0, 0, 0, 0, 0)) == 41);
    CHECK(octic::picard_rank_Y(8, {}) == 29);
    CHECK(octic::picard_rank_Y(8, counters(0, 0, 0, 1, 1, 1, 0)) == 29 + 6 + 7 + 8);
}

TEST_CASE("h2 of the cotangent sheaf of the blow-up") {
    CHECK(octic::h2_omega1_Y(kPlanes) == 0);
    CHECK(octic::h2_omega1_Y(std::vector<int>{4, 4}) == 33);
    CHECK(octic::h2_omega1_Y(std::vector<int>{8}) == 0);
    CHECK(octic::h2_omega1_Y(kPlanes, 2) == 12);
}

TEST_CASE("hodge numbers from e, h12 and rho") {
    auto s = octic::hodge(140, 0, 70);
    CHECK(s.h11 == 70);
    CHECK(s.skew_rank == 0);
    s = octic::hodge(80, 0, 39);
    CHECK(s.h11 == 40);
    CHECK(s.skew_rank == 1);
    s = octic::hodge(88, 0, 41);
    CHECK(s.h11 == 44);
    CHECK(s.skew_rank == 3);
    CHECK_THROWS_AS(octic::hodge(141, 0, 70), std::invalid_argument);
    CHECK_THROWS_AS(octic::hodge(40, 0, 29), std::invalid_argument);
}

TEST_CASE("assembled invariants satisfy the Euler relation") {
    const auto inv = octic::invariants_for_planes(counters(56, 0, 0, 0, 0, 0, 0), 8, 9);
    CHECK(inv.e == 40);
    CHECK(inv.h11 == 29);
    CHECK(inv.rho_Y == 29);
    CHECK(inv.skew_rank == 0);
    CHECK(inv.e == 2 * (inv.h11 - inv.h12));
    CHECK(octic::kH12OfBlowupForPlanes == 0);
}

}
