#include "octic/arithmetic.hpp"

#include <atomic>
#include <cmath>
#include <thread>

#include "octic/modp.hpp"

namespace octic {

namespace {

using Residues = std::array<std::uint64_t, 4>;

std::uint64_t residue(const mpz_class& z, std::uint64_t p) { return FpElem::from_integer(z, p).residue(); }

std::vector<Residues> form_residues(const Arrangement& a, std::uint64_t p) {
    std::vector<Residues> out;
    for (const auto& f : a.forms) {
        Residues r;
        for (std::size_t i = 0; i < 4; ++i) r[i] = residue(f[i].numerator(), p);
        out.push_back(r);
    }
    return out;
}

void check_counting_prime(std::uint64_t p) {
    if (p < 3 || !is_prime(p)) throw BadPrimeError(std::to_string(p) + " is not an odd prime");
    if (p > kMaxCountingPrime) throw BadPrimeError("prime " + std::to_string(p) + " is too large to enumerate");
}

/// Slab s < p holds the points (1:s:*:*); slab p holds the p^2 + p + 1 points
/// with vanishing first coordinate.
template <class Visit>
void visit_slab(std::uint64_t p, std::uint64_t slab, Visit&& visit) {
    if (slab < p) {
        for (std::uint64_t b = 0; b < p; ++b)
            for (std::uint64_t c = 0; c < p; ++c) visit(Residues{1, slab, b, c});
        return;
    }
    for (std::uint64_t b = 0; b < p; ++b)
        for (std::uint64_t c = 0; c < p; ++c) visit(Residues{0, 1, b, c});
    for (std::uint64_t c = 0; c < p; ++c) visit(Residues{0, 0, 1, c});
    visit(Residues{0, 0, 0, 1});
}

/// Sums `per_slab` over the p + 1 slabs, grouped into chunks and spread over
/// worker threads. Integer addition makes the total independent of both.
template <class PerSlab>
std::int64_t reduce_slabs(std::uint64_t p, const CountOptions& options, PerSlab&& per_slab) {
    const std::size_t slabs = p + 1;
    const std::size_t chunks = options.chunks == 0 ? slabs : std::min(options.chunks, slabs);
    std::vector<std::int64_t> partial(chunks, 0);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k; (k = next.fetch_add(1)) < chunks;) {
            const std::size_t lo = k * slabs / chunks, hi = (k + 1) * slabs / chunks;
            std::int64_t sum = 0;
            for (std::size_t s = lo; s < hi; ++s) sum += per_slab(s);
            partial[k] = sum;
        }
    };
    const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(chunks)));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    std::int64_t total = 0;
    for (auto v : partial) total += v;
    return total;
}

std::uint64_t evaluate(const Residues& form, const Residues& x, std::uint64_t p) {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < 4; ++i) s += form[i] * x[i] % p;
    return s % p;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("point count overflows 64 bits");
    return out;
}

}  // namespace

PrimeVerdict good_prime(const Arrangement& a, std::uint64_t p) {
    if (p < 3 || !is_prime(p)) return {false, std::to_string(p) + " is not an odd prime"};
    if (mpz_divisible_ui_p(a.scale.get_mpz_t(), static_cast<unsigned long>(p)))
        return {false, "p divides the scale"};
    const auto d = classify(a);
    const auto m = classify_mod_p(a, p);
    if (!m.distinct_planes) return {false, "planes collide mod p"};
    if (m.counters != d.counters) return {false, "incidence counters change mod p"};
    if (m.double_lines != d.double_lines.size()) return {false, "double lines collide mod p"};
    if (m.heavy_lines != 0 || m.heavy_points != 0) return {false, "reduction is not admissible"};
    return {true, ""};
}

std::int64_t count_singular(const Arrangement& a, std::uint64_t p, const CountOptions& options) {
    check_counting_prime(p);
    const auto forms = form_residues(a, p);
    const std::uint64_t s = residue(a.scale, p);
    if (s == 0) throw BadPrimeError("p divides the scale");
    const LegendreTable chi(static_cast<std::uint32_t>(p));
    return reduce_slabs(p, options, [&](std::uint64_t slab) {
        std::int64_t sum = 0;
        visit_slab(p, slab, [&](const Residues& x) {
            std::uint64_t v = s;
            for (const auto& f : forms) {
                v = v * evaluate(f, x, p) % p;
                if (v == 0) break;
            }
            sum += 1 + chi(v);
        });
        return sum;
    });
}

std::uint64_t enumerated_points(std::uint64_t p, const CountOptions& options) {
    check_counting_prime(p);
    return static_cast<std::uint64_t>(reduce_slabs(p, options, [&](std::uint64_t slab) {
        std::int64_t n = 0;
        visit_slab(p, slab, [&](const Residues&) { ++n; });
        return n;
    }));
}

std::int64_t line_corrections(const IncidenceCounters& c, std::uint64_t p) {
    const auto weight = static_cast<std::int64_t>(c.p4_1 + 6 * c.p5_0 + 7 * c.p5_1 + 8 * c.p5_2 + c.l3) +
                        kLineCorrectionConstant;
    const auto q = static_cast<std::int64_t>(p);
    return checked_mul(weight, q + q * q);
}

std::int64_t count_plane_cover(const std::vector<std::array<std::uint64_t, 3>>& lines, std::uint64_t c,
                               std::uint64_t p) {
    check_counting_prime(p);
    const LegendreTable chi(static_cast<std::uint32_t>(p));
    c %= p;
    std::int64_t sum = 0;
    auto visit = [&](std::uint64_t x, std::uint64_t y, std::uint64_t z) {
        std::uint64_t v = c;
        for (const auto& l : lines) v = v * ((l[0] % p * x + l[1] % p * y + l[2] % p * z) % p) % p;
        sum += 1 + chi(v);
    };
    for (std::uint64_t y = 0; y < p; ++y)
        for (std::uint64_t z = 0; z < p; ++z) visit(1, y, z);
    for (std::uint64_t z = 0; z < p; ++z) visit(0, 1, z);
    visit(0, 0, 1);
    return sum;
}

std::int64_t fourfold_correction(const Arrangement& a, const IncidencePoint& point, std::uint64_t p,
                                 const std::optional<LinearForm>& complement) {
    if (point.multiplicity != 4 || point.triple_lines != 0)
        throw std::invalid_argument("point " + point.point.str() + " is not a fourfold point off the triple lines");
    check_counting_prime(p);
    const auto forms = form_residues(a, p);
    const auto prim = point.point.primitive();
    Residues x;
    for (std::size_t i = 0; i < 4; ++i) x[i] = residue(prim[i], p);

    std::uint64_t c = residue(a.scale, p);
    std::vector<bool> incident(forms.size(), false);
    for (auto i : point.planes) incident[i] = true;
    for (std::size_t i = 0; i < forms.size(); ++i)
        if (!incident[i]) c = c * evaluate(forms[i], x, p) % p;
    if (c == 0) throw BadPrimeError("a non-incident plane passes through the point mod p");

    Residues h{0, 0, 0, 0};
    if (complement) {
        for (std::size_t i = 0; i < 4; ++i) h[i] = residue((*complement)[i].numerator(), p);
    } else {
        std::size_t k = 0;
        while (prim[k] == 0) ++k;
        h[k] = 1;
    }
    if (evaluate(h, x, p) == 0) throw std::invalid_argument("complement plane passes through the point");

    // basis of {h = 0}: e_k - (h_k / h_j) e_j for k != j
    std::size_t j = 0;
    while (h[j] == 0) ++j;
    const FpElem hj_inv = FpElem::from_residue(h[j], p).inverse();
    std::vector<Residues> basis;
    for (std::size_t k = 0; k < 4; ++k) {
        if (k == j) continue;
        Residues v{0, 0, 0, 0};
        v[k] = 1;
        v[j] = (-(FpElem::from_residue(h[k], p) * hj_inv)).residue();
        basis.push_back(v);
    }
    std::vector<std::array<std::uint64_t, 3>> lines;
    for (auto i : point.planes) {
        std::array<std::uint64_t, 3> l;
        for (std::size_t k = 0; k < 3; ++k) l[k] = evaluate(forms[i], basis[k], p);
        lines.push_back(l);
    }
    return count_plane_cover(lines, c, p) - 1;
}

bool within_weil_bound(std::int64_t a_p, std::uint64_t p, std::int64_t h12) {
    // a_p^2 <= (2 + 2 h12)^2 p^3, in exact integers
    const mpz_class b3 = 2 + 2 * h12;
    mpz_class lhs = mpz_class(static_cast<long>(a_p)) * static_cast<long>(a_p);
    mpz_class cube;
    mpz_ui_pow_ui(cube.get_mpz_t(), static_cast<unsigned long>(p), 3);
    return lhs <= b3 * b3 * cube;
}

CountRecord count_record(const Arrangement& a, const IncidenceData& d, std::uint64_t p, std::int64_t h11,
                         std::int64_t h12, const CountOptions& options) {
    if (const auto v = good_prime(a, p); !v.good) throw BadPrimeError("bad prime " + std::to_string(p) + ": " + v.reason);
    CountRecord r;
    r.p = p;
    r.raw = count_singular(a, p, options);
    r.line_corr = line_corrections(d.counters, p);
    for (const auto& pt : d.points)
        if (pt.multiplicity == 4 && pt.triple_lines == 0) r.fourfold_corr += fourfold_correction(a, pt, p);
    r.total = r.raw + r.line_corr + r.fourfold_corr;
    const auto q = static_cast<std::int64_t>(p);
    r.a_p = 1 + checked_mul(q * q, q) + checked_mul(h11, q + q * q) - r.total;
    if (!within_weil_bound(r.a_p, p, h12))
        throw std::logic_error("a_" + std::to_string(p) + " = " + std::to_string(r.a_p) + " violates the Weil bound");
    return r;
}

std::int64_t a_p(const Arrangement& a, std::uint64_t p, std::int64_t h11, std::int64_t h12,
                 const CountOptions& options) {
    return count_record(a, classify(a), p, h11, h12, options).a_p;
}

std::vector<CountRecord> lseries(const Arrangement& a, const std::vector<std::uint64_t>& primes, std::int64_t h11,
                                 std::int64_t h12, const CountOptions& options) {
    const auto d = classify(a);
    std::vector<CountRecord> out;
    for (auto p : primes) out.push_back(count_record(a, d, p, h11, h12, options));
    return out;
}

}  // namespace octic
