#include "octic/modp.hpp"

#include <array>

namespace octic {

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t result = 1 % p;
    base %= p;
    while (exp) {
        if (exp & 1) result = mulmod(result, base, p);
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    return result;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    static constexpr std::array<std::uint64_t, 12> kBases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (auto b : kBases) {
        if (n % b == 0) return n == b;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (auto a : kBases) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::uint64_t random_prime(unsigned bits, std::mt19937_64& rng) {
    if (bits < 3 || bits > 63) throw std::invalid_argument("random_prime: bits must be in [3, 63]");
    const std::uint64_t lo = std::uint64_t{1} << (bits - 1);
    std::uniform_int_distribution<std::uint64_t> dist(lo, (lo << 1) - 1);
    for (;;) {
        const std::uint64_t candidate = dist(rng) | 1;
        if (is_prime(candidate)) return candidate;
    }
}

std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = lo < 2 ? 2 : lo; n <= hi; ++n) {
        bool prime = true;
        for (std::uint64_t d = 2; d * d <= n; ++d) {
            if (n % d == 0) {
                prime = false;
                break;
            }
        }
        if (prime) out.push_back(n);
    }
    return out;
}

FpElem::FpElem(std::int64_t value, std::uint64_t modulus) : modulus_(modulus) {
    if (modulus < 3 || (modulus & 1) == 0) throw std::invalid_argument("FpElem modulus must be an odd prime");
    const auto m = static_cast<std::int64_t>(modulus);
    std::int64_t r = value % m;
    if (r < 0) r += m;
    residue_ = static_cast<std::uint64_t>(r);
}

FpElem FpElem::from_integer(const mpz_class& z, std::uint64_t modulus) {
    static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
    return from_residue(mpz_fdiv_ui(z.get_mpz_t(), modulus), modulus);
}

FpElem FpElem::from_rational(const Rational& r, std::uint64_t modulus) {
    const FpElem num = from_integer(r.numerator(), modulus);
    const FpElem den = from_integer(r.denominator(), modulus);
    if (den.is_zero()) throw std::domain_error("prime divides a denominator");
    return num / den;
}

FpElem FpElem::inverse() const {
    if (residue_ == 0) throw std::domain_error("inverse of zero in F_p");
    return pow(modulus_ - 2);
}

FpElem& FpElem::operator+=(const FpElem& o) {
    check_same(o);
    residue_ += o.residue_;
    if (residue_ >= modulus_) residue_ -= modulus_;
    return *this;
}

FpElem& FpElem::operator-=(const FpElem& o) {
    check_same(o);
    residue_ = residue_ >= o.residue_ ? residue_ - o.residue_ : residue_ + modulus_ - o.residue_;
    return *this;
}

FpElem& FpElem::operator*=(const FpElem& o) {
    check_same(o);
    residue_ = mulmod(residue_, o.residue_, modulus_);
    return *this;
}

int legendre(const FpElem& a) {
    if (a.is_zero()) return 0;
    const std::uint64_t e = a.pow((a.modulus() - 1) / 2).residue();
    return e == 1 ? 1 : -1;
}

LegendreTable::LegendreTable(std::uint32_t p) : p_(p), table_(p, -1) {
    if (p < 3 || (p & 1) == 0) throw std::invalid_argument("LegendreTable needs an odd prime");
    table_[0] = 0;
    for (std::uint64_t a = 1; a <= p / 2; ++a) table_[a * a % p] = 1;
}

}  // namespace octic
