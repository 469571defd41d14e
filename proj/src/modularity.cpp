#include "octic/modularity.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace octic {

namespace {

NewformRef row(std::string label, int level, std::array<std::int64_t, 8> values, std::vector<EtaQuotient> eta = {}) {
    NewformRef f{std::move(label), level, {}, std::move(eta)};
    for (std::size_t i = 0; i < kTablePrimes.size(); ++i) f.ap[kTablePrimes[i]] = values[i];
    return f;
}

void check_table(const std::vector<NewformRef>& table) {
    for (std::size_t i = 0; i < table.size(); ++i) {
        const auto& f = table[i];
        if (f.ap.size() != kTablePrimes.size()) throw std::logic_error("incomplete row " + f.label);
        for (const auto& [p, a] : f.ap) {
            const auto q = static_cast<std::int64_t>(p);
            if (a * a >= 4 * q * q * q) throw std::logic_error("row " + f.label + " violates the Weil bound");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (table[j].label == f.label) throw std::logic_error("duplicate label " + f.label);
            if (table[j].ap == f.ap) throw std::logic_error("rows " + table[j].label + " and " + f.label + " coincide");
        }
    }
}

std::vector<NewformRef> build_table() {
    std::vector<NewformRef> t;
    t.push_back(row("8k4A", 8, {-2, 24, -44, 22, 50, 44, -56, 154}, {EtaQuotient{{{2, 4}, {4, 4}}}}));
    t.push_back(row("32k4C", 32, {-10, -16, 40, -50, -30, -40, -48, -630}));
    t.push_back(row("64k4A", 64, {-22, 0, 0, 18, -94, 0, 0, 1098}));
    t.push_back(row("16k4A", 16, {-2, -24, 44, 22, 50, -44, 56, 154},
                    {EtaQuotient{{{1, 4}, {2, -2}, {4, 6}}}, EtaQuotient{{{1, -4}, {2, 10}, {4, 2}}}}));
    t.push_back(row("64k4C", 64, {2, -24, -44, -22, 50, 44, 56, 154}));
    t.push_back(row("6k4A", 6, {6, -16, 12, 38, -126, 20, 168, 218},
                    {EtaQuotient{{{1, 2}, {2, 2}, {3, 2}, {6, 2}}}}));
    t.push_back(row("12k4A", 12, {-18, 8, 36, -10, 18, -100, 72, 26},
                    {EtaQuotient{{{1, -4}, {2, 11}, {3, 4}, {4, -3}, {6, -1}, {12, 1}}},
                     EtaQuotient{{{1, 4}, {2, -1}, {3, -4}, {4, 1}, {6, 11}, {12, -3}}},
                     EtaQuotient{{{1, 5}, {2, 2}, {3, 1}, {4, -3}, {6, 2}, {12, 1}}}}));
    check_table(t);
    return t;
}

bool prime(std::size_t n) {
    if (n < 2) return false;
    for (std::size_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

int EtaQuotient::weight_twice() const {
    int s = 0;
    for (const auto& [m, e] : exponents) s += e;
    return s;
}

int EtaQuotient::shift_times_24() const {
    int s = 0;
    for (const auto& [m, e] : exponents) s += m * e;
    return s;
}

std::string EtaQuotient::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, e] : exponents) {
        if (!first) os << ' ';
        first = false;
        os << "eta(" << (m == 1 ? "" : std::to_string(m)) << "t)^" << e;
    }
    return os.str();
}

const std::vector<NewformRef>& newform_table() {
    static const std::vector<NewformRef> table = build_table();
    return table;
}

const NewformRef& newform(std::string_view label) {
    for (const auto& f : newform_table())
        if (f.label == label) return f;
    throw std::invalid_argument("unknown newform label '" + std::string(label) + "'");
}

std::int64_t newform_ap(std::string_view label, std::uint64_t p) {
    const auto& f = newform(label);
    const auto it = f.ap.find(p);
    if (it == f.ap.end()) throw std::invalid_argument("no tabulated a_" + std::to_string(p) + " for " + f.label);
    return it->second;
}

IntSeries euler_product(int step, std::size_t precision) {
    if (step < 1) throw std::invalid_argument("euler_product step must be positive");
    IntSeries s(precision);
    // sum over k of (-1)^k q^{step k(3k-1)/2}, k ranging over all integers
    if (precision > 0) s[0] = 1;
    const auto st = static_cast<std::size_t>(step);
    for (std::size_t k = 1; st * k * (3 * k - 1) / 2 < precision; ++k) {
        const long sign = (k % 2 == 0) ? 1 : -1;
        s[st * k * (3 * k - 1) / 2] += sign;
        if (const std::size_t n = st * k * (3 * k + 1) / 2; n < precision) s[n] += sign;
    }
    return s;
}

IntSeries eta_qexp(const EtaQuotient& q, std::size_t precision) {
    if (precision < 2) throw std::invalid_argument("eta_qexp needs precision >= 2");
    const int w2 = q.weight_twice(), s24 = q.shift_times_24();
    if (w2 % 2 != 0) throw std::invalid_argument("eta quotient " + q.str() + " has non-integral weight");
    if (s24 % 24 != 0) throw std::invalid_argument("eta quotient " + q.str() + " has non-integral shift");
    if (w2 != 8 || s24 != 24) throw std::invalid_argument("eta quotient " + q.str() + " is not of weight 4 and shift 1");
    IntSeries prod = IntSeries::one(precision - 1);
    for (const auto& [m, e] : q.exponents) prod = prod * euler_product(m, precision - 1).pow(e);
    IntSeries out(precision);
    for (std::size_t n = 1; n < precision; ++n) out[n] = prod[n - 1];
    return out;
}

CandidateStatus candidate_status(const NewformRef& form, const EtaQuotient& q, std::size_t precision) {
    IntSeries f(2);
    try {
        f = eta_qexp(q, precision);
    } catch (const std::invalid_argument&) {
        return CandidateStatus::Unverified;
    }
    if (f[1] != 1) return CandidateStatus::Unverified;
    for (const auto& [p, a] : form.ap)
        if (p >= precision || f[p] != static_cast<long>(a)) return CandidateStatus::Unverified;
    for (std::size_t m = 2; m < precision; ++m)
        for (std::size_t n = m + 1; m * n < precision; ++n)
            if (std::gcd(m, n) == 1 && f[m * n] != f[m] * f[n]) return CandidateStatus::Unverified;
    for (std::size_t p = 2; p * p < precision; ++p) {
        if (!prime(p)) continue;
        mpz_class expected = f[p] * f[p];
        if (form.level % static_cast<int>(p) != 0) expected -= static_cast<long>(p * p * p);
        if (f[p * p] != expected) return CandidateStatus::Unverified;
    }
    return CandidateStatus::Verified;
}

MatchResult match(const std::map<std::uint64_t, std::int64_t>& ap) {
    for (auto p : kTablePrimes)
        if (!ap.contains(p)) throw std::invalid_argument("a_" + std::to_string(p) + " missing from the vector to match");
    MatchResult out;
    for (const auto& f : newform_table()) {
        LabelAgreement agree{f.label, 0};
        for (auto p : kTablePrimes)
            if (ap.at(p) == f.ap.at(p)) ++agree.agreeing;
        if (agree.agreeing == kTablePrimes.size()) out.label = f.label;
        out.agreement.push_back(agree);
    }
    return out;
}

}  // namespace octic
