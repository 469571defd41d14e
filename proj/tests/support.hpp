#pragma once

#include <algorithm>
#include <array>
#include <random>
#include <string>
#include <vector>

#include "octic/arrangement.hpp"

namespace testing_support {

using IntPlane = std::array<long, 4>;
using IntMatrix = std::array<std::array<long, 4>, 4>;

inline octic::Arrangement from_integers(const std::string& name, const std::vector<IntPlane>& planes,
                                        long scale = 1) {
    std::vector<octic::Coords> out;
    for (const auto& p : planes) out.push_back({octic::Rational(p[0]), octic::Rational(p[1]), octic::Rational(p[2]),
                                                octic::Rational(p[3])});
    return octic::make_arrangement(name, out, scale);
}

inline std::vector<octic::Coords> raw_planes(const octic::Arrangement& a) {
    std::vector<octic::Coords> out;
    for (const auto& f : a.forms) out.push_back(f.coeffs());
    return out;
}

/// f -> f o M, i.e. the row vector of coefficients times M.
inline octic::Arrangement transform(const octic::Arrangement& a, const IntMatrix& m) {
    std::vector<octic::Coords> out;
    for (const auto& f : a.forms) {
        octic::Coords c;
        for (std::size_t j = 0; j < 4; ++j) {
            octic::Rational s(0);
            for (std::size_t i = 0; i < 4; ++i) s += f[i] * octic::Rational(m[i][j]);
            c[j] = s;
        }
        out.push_back(c);
    }
    return octic::make_arrangement(a.name, out, a.scale);
}

/// Determinant +-1, built from a signed permutation and a few elementary row operations.
inline IntMatrix random_unimodular(std::mt19937_64& rng, int operations = 5) {
    IntMatrix m{};
    std::array<std::size_t, 4> perm{0, 1, 2, 3};
    std::shuffle(perm.begin(), perm.end(), rng);
    std::uniform_int_distribution<int> coin(0, 1), idx(0, 3), mult(-2, 2);
    for (std::size_t i = 0; i < 4; ++i) m[i][perm[i]] = coin(rng) ? 1 : -1;
    for (int k = 0; k < operations; ++k) {
        const auto i = static_cast<std::size_t>(idx(rng)), j = static_cast<std::size_t>(idx(rng));
        if (i == j) continue;
        const long c = mult(rng);
        for (std::size_t col = 0; col < 4; ++col) m[i][col] += c * m[j][col];
    }
    return m;
}

inline octic::Arrangement random_arrangement(std::mt19937_64& rng, long bound = 30, const std::string& name = "random") {
    std::uniform_int_distribution<long> coeff(-bound, bound);
    for (;;) {
        std::vector<IntPlane> planes;
        for (int i = 0; i < 8; ++i) planes.push_back({coeff(rng), coeff(rng), coeff(rng), coeff(rng)});
        try {
            return from_integers(name, planes);
        } catch (const std::invalid_argument&) {
            // a zero or repeated plane; draw again
        }
    }
}

inline octic::Rational det4(const std::array<octic::Coords, 4>& rows) {
    octic::Rational total(0);
    std::array<std::size_t, 4> perm{0, 1, 2, 3};
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = i + 1; j < 4; ++j) inversions += perm[i] > perm[j];
        octic::Rational term(inversions % 2 ? -1 : 1);
        for (std::size_t i = 0; i < 4; ++i) term *= rows[i][perm[i]];
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

/// Every four planes independent: then no three share a line and no four share a point.
inline bool in_general_position(const octic::Arrangement& a) {
    const auto n = a.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k)
                for (std::size_t l = k + 1; l < n; ++l)
                    if (det4({a.forms[i].coeffs(), a.forms[j].coeffs(), a.forms[k].coeffs(), a.forms[l].coeffs()})
                            .is_zero())
                        return false;
    return true;
}

inline octic::Arrangement random_generic_arrangement(std::mt19937_64& rng) {
    for (;;) {
        auto a = random_arrangement(rng, 30, "generic");
        if (in_general_position(a)) return a;
    }
}

}  // namespace testing_support
