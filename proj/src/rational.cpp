#include "octic/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace octic {

namespace {

bool parse_integer(std::string_view s, mpz_class& out) {
    if (s.empty()) return false;
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) return false;
    for (std::size_t i = start; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    std::string digits(s[0] == '+' ? s.substr(1) : s);
    return out.set_str(digits, 10) == 0;
}

}  // namespace

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    mpz_class num, den = 1;
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!parse_integer(text, num)) throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    } else {
        const auto rest = text.substr(slash + 1);
        if (!parse_integer(text.substr(0, slash), num) || !parse_integer(rest, den) || rest[0] == '-' || rest[0] == '+')
            throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
        if (den == 0) throw std::invalid_argument("malformed rational (zero denominator): '" + std::string(text) + "'");
    }
    return {num, den};
}

std::string Rational::str() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    return Rational(mpq_class(1 / q_));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    q_ /= o.q_;
    return *this;
}

mpz_class squarefree_part(const mpz_class& n) {
    if (n == 0) throw std::domain_error("squarefree part of zero");
    mpz_class m = ::abs(n);
    mpz_class result = 1;
    for (unsigned long d = 2; mpz_class(d) * d <= m; ++d) {
        int e = 0;
        while (mpz_divisible_ui_p(m.get_mpz_t(), d)) {
            m /= d;
            ++e;
        }
        if (e % 2) result *= d;
    }
    result *= m;
    return sgn(n) < 0 ? mpz_class(-result) : result;
}

}  // namespace octic
