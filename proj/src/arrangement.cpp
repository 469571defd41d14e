#include "octic/arrangement.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "octic/matrix.hpp"
#include "octic/modp.hpp"

namespace octic {

namespace {

constexpr std::array<const char*, 4> kVariables{"x", "y", "z", "t"};

template <class T>
using Vec4 = std::array<T, 4>;

template <class T>
T dot(const Vec4<T>& a, const Vec4<T>& b) {
    T s = a[0] * b[0];
    for (std::size_t i = 1; i < 4; ++i) s += a[i] * b[i];
    return s;
}

template <class T>
Matrix<T> stack(std::initializer_list<const Vec4<T>*> rows, const T& like) {
    Matrix<T> m(0, 4, zero_like(like));
    for (const auto* r : rows) m.append_row(std::span<const T>(r->data(), 4));
    return m;
}

template <class T>
Vec4<T> row_of(const Matrix<T>& m, std::size_t r) {
    return {m.at(r, 0), m.at(r, 1), m.at(r, 2), m.at(r, 3)};
}

/// Incidence lattice over any exact field; plane sets are bitmasks.
template <class T>
struct GenericIncidence {
    struct Line {
        std::uint32_t planes = 0;
        Matrix<T> span;  // 2 x 4, spanning points as rows
    };
    struct Point {
        std::uint32_t planes = 0;
        Vec4<T> coords;
    };
    bool distinct = true;
    std::vector<Line> lines;
    std::vector<Point> points;
};

template <class T>
GenericIncidence<T> generic_incidence(const std::vector<Vec4<T>>& forms) {
    GenericIncidence<T> out;
    const std::size_t r = forms.size();
    if (r == 0) return out;
    if (r > 32) throw std::invalid_argument("at most 32 planes supported");
    const T like = zero_like(forms[0][0]);

    std::map<std::uint32_t, std::size_t> line_index;
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = i + 1; j < r; ++j) {
            const auto m = stack<T>({&forms[i], &forms[j]}, like);
            if (rank(m) < 2) {
                out.distinct = false;
                continue;
            }
            const auto kernel = nullspace(m, like);
            const auto u = row_of(kernel, 0), v = row_of(kernel, 1);
            std::uint32_t mask = 0;
            for (std::size_t k = 0; k < r; ++k)
                if (is_zero(dot(forms[k], u)) && is_zero(dot(forms[k], v))) mask |= 1u << k;
            if (line_index.contains(mask)) continue;
            line_index.emplace(mask, out.lines.size());
            out.lines.push_back({mask, kernel});
        }
    }

    std::map<std::uint32_t, std::size_t> point_index;
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = i + 1; j < r; ++j) {
            for (std::size_t k = j + 1; k < r; ++k) {
                const auto m = stack<T>({&forms[i], &forms[j], &forms[k]}, like);
                if (rank(m) < 3) continue;
                auto p = row_of(nullspace(m, like), 0);
                std::uint32_t mask = 0;
                for (std::size_t l = 0; l < r; ++l)
                    if (is_zero(dot(forms[l], p))) mask |= 1u << l;
                if (point_index.contains(mask)) continue;
                // normalize: first nonzero coordinate 1
                const auto lead = std::find_if(p.begin(), p.end(), [](const T& c) { return !is_zero(c); });
                const T inv = lead->inverse();
                for (auto& c : p) c *= inv;
                point_index.emplace(mask, out.points.size());
                out.points.push_back({mask, p});
            }
        }
    }
    return out;
}

std::vector<std::size_t> mask_indices(std::uint32_t mask) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < 32; ++i)
        if (mask & (1u << i)) out.push_back(i);
    return out;
}

/// Shared tagging of counters from plane-set bitmasks.
template <class T>
IncidenceCounters count(const GenericIncidence<T>& g, std::vector<std::size_t>* tags = nullptr) {
    IncidenceCounters c;
    std::vector<std::uint32_t> triple;
    for (const auto& l : g.lines)
        if (std::popcount(l.planes) == 3) triple.push_back(l.planes);
    c.l3 = triple.size();
    for (const auto& p : g.points) {
        std::size_t i = 0;
        for (auto t : triple)
            if ((t & p.planes) == t) ++i;
        if (tags) tags->push_back(i);
        switch (std::popcount(p.planes)) {
            case 3: ++c.p3; break;
            case 4: (i == 0 ? c.p4_0 : c.p4_1) += 1; break;
            case 5: (i == 0 ? c.p5_0 : i == 1 ? c.p5_1 : c.p5_2) += 1; break;
            default: break;
        }
    }
    return c;
}

std::array<Rational, 4> to_coords(const Vec4<Rational>& v) { return v; }

ProjLine make_line(const Matrix<Rational>& span, std::uint32_t mask) {
    const auto red = rref(span);
    if (red.rank != 2) throw std::logic_error("line span must have rank 2");
    return ProjLine{ProjPoint(row_of(red.reduced, 0)), ProjPoint(row_of(red.reduced, 1)), mask_indices(mask)};
}

std::string format_form(const Coords& c) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < 4; ++i) {
        if (c[i].is_zero()) continue;
        const Rational mag = c[i].abs();
        if (first) {
            if (c[i].sign() < 0) os << "-";
        } else {
            os << (c[i].sign() < 0 ? " - " : " + ");
        }
        if (mag != Rational(1)) os << mag.str() << "*";
        os << kVariables[i];
        first = false;
    }
    return first ? "0" : os.str();
}

// ---- coefficient expressions ---------------------------------------------

class ExpressionParser {
public:
    ExpressionParser(std::string_view text, const ParamMap& params) : s_(text), params_(params) {}

    Rational parse() {
        Rational v = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw std::invalid_argument("malformed coefficient '" + std::string(s_) + "': " + why);
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    Rational expr() {
        Rational v = term();
        for (;;) {
            if (accept('+')) v += term();
            else if (accept('-')) v -= term();
            else return v;
        }
    }
    Rational term() {
        Rational v = unary();
        for (;;) {
            if (accept('*')) {
                if (accept('*')) v = power_tail(v);  // "**" as power
                else v *= unary();
            } else if (accept('/')) {
                const Rational d = unary();
                if (d.is_zero()) fail("division by zero");
                v /= d;
            } else {
                return v;
            }
        }
    }
    Rational unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        Rational b = base();
        if (accept('^')) return power_tail(b);
        return b;
    }
    Rational power_tail(const Rational& b) {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("exponent must be a nonnegative integer");
        const int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
        Rational out(1);
        for (int i = 0; i < e; ++i) out *= b;
        return out;
    }
    Rational base() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Rational v = expr();
            if (!accept(')')) fail("missing ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return Rational::parse(s_.substr(start, pos_ - start));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            ++pos_;
            const auto it = params_.find(c);
            if (it == params_.end()) throw std::invalid_argument(std::string("unbound parameter '") + c + "'");
            return it->second;
        }
        fail("unexpected character");
    }

    std::string_view s_;
    const ParamMap& params_;
    std::size_t pos_ = 0;
};

Rational json_rational(const nlohmann::json& v, const ParamMap& params) {
    if (v.is_number_integer()) return Rational(mpz_class(v.dump()));
    if (v.is_string()) return evaluate_coefficient(v.get<std::string>(), params);
    throw std::invalid_argument("coefficient must be a string or an integer: " + v.dump());
}

}  // namespace

// ---- LinearForm / ProjPoint / ProjLine --------------------------------------

LinearForm::LinearForm(const Coords& coeffs, Rational* factor) {
    mpz_class lcm = 1;
    for (const auto& a : coeffs) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), a.denominator().get_mpz_t());
    std::array<mpz_class, 4> ints;
    mpz_class g = 0;
    for (std::size_t i = 0; i < 4; ++i) {
        ints[i] = (coeffs[i] * Rational(lcm)).numerator();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
    }
    if (g == 0) throw std::invalid_argument("linear form with all coefficients zero");
    const auto lead = std::find_if(ints.begin(), ints.end(), [](const mpz_class& z) { return z != 0; });
    if (*lead < 0) g = -g;
    for (std::size_t i = 0; i < 4; ++i) c_[i] = Rational(mpz_class(ints[i] / g));
    if (factor) *factor = Rational(g, lcm);
}

Rational LinearForm::evaluate(const Coords& p) const { return dot(c_, p); }

std::string LinearForm::str() const { return format_form(c_); }

ProjPoint::ProjPoint(const Coords& coords) : c_(coords) {
    const auto lead = std::find_if(c_.begin(), c_.end(), [](const Rational& r) { return !r.is_zero(); });
    if (lead == c_.end()) throw std::invalid_argument("projective point with all coordinates zero");
    const Rational inv = lead->inverse();
    for (auto& c : c_) c *= inv;
}

std::array<mpz_class, 4> ProjPoint::primitive() const {
    Rational unused;
    const LinearForm as_form(c_, &unused);  // same normalization rule
    std::array<mpz_class, 4> out;
    for (std::size_t i = 0; i < 4; ++i) out[i] = as_form[i].numerator();
    return out;
}

std::string ProjPoint::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < 4; ++i) s += (i ? ":" : "") + c_[i].str();
    return s + ")";
}

std::array<LinearForm, 2> ProjLine::ideal_generators() const {
    const auto m = stack<Rational>({&first.coords(), &second.coords()}, Rational(0));
    const auto red = rref(nullspace(m)).reduced;
    return {LinearForm(row_of(red, 0)), LinearForm(row_of(red, 1))};
}

bool ProjLine::contains(const ProjPoint& p) const {
    return rank(stack<Rational>({&first.coords(), &second.coords(), &p.coords()}, Rational(0))) == 2;
}

std::string ProjLine::str() const {
    const auto gens = ideal_generators();
    return gens[0].str() + " = " + gens[1].str() + " = 0";
}

ProjLine intersect_planes(const LinearForm& f, const LinearForm& g) {
    const auto m = stack<Rational>({&f.coeffs(), &g.coeffs()}, Rational(0));
    if (rank(m) < 2) throw std::invalid_argument("intersect_planes: proportional forms");
    return make_line(nullspace(m), 0);
}

// ---- construction and parsing ------------------------------------------------

Arrangement make_arrangement(std::string name, const std::vector<Coords>& planes, const mpz_class& scale,
                             std::size_t required_planes) {
    if (required_planes != 0 && planes.size() != required_planes)
        throw std::invalid_argument("wrong total degree: " + std::to_string(planes.size()) + " planes, expected " +
                                    std::to_string(required_planes));
    if (scale == 0) throw std::invalid_argument("scale must be nonzero");
    Arrangement a;
    a.name = std::move(name);
    Rational total(1);
    for (const auto& p : planes) {
        Rational factor;
        a.forms.emplace_back(p, &factor);
        total *= factor;
    }
    for (std::size_t i = 0; i < a.forms.size(); ++i)
        for (std::size_t j = i + 1; j < a.forms.size(); ++j)
            if (a.forms[i] == a.forms[j])
                throw std::invalid_argument("duplicate plane: " + a.forms[i].str() + " (planes " + std::to_string(i) +
                                            " and " + std::to_string(j) + ")");
    // n/d has the square class of n*d
    a.scale = squarefree_part(scale * total.numerator() * total.denominator());
    return a;
}

Rational evaluate_coefficient(std::string_view expression, const ParamMap& params) {
    return ExpressionParser(expression, params).parse();
}

Arrangement parse_arrangement(std::string_view document, const ParamMap& overrides) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(document);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed arrangement document: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("planes") || !doc["planes"].is_array())
        throw std::invalid_argument("arrangement document needs a 'planes' array");
    ParamMap params;
    if (doc.contains("params")) {
        for (const auto& [key, value] : doc["params"].items()) {
            if (key.size() != 1 || !std::isalpha(static_cast<unsigned char>(key[0])))
                throw std::invalid_argument("parameter names are single letters: '" + key + "'");
            params[key[0]] = json_rational(value, {});
        }
    }
    for (const auto& [k, v] : overrides) params[k] = v;

    std::vector<Coords> planes;
    for (const auto& plane : doc["planes"]) {
        if (!plane.is_array() || plane.size() != 4)
            throw std::invalid_argument("each plane needs exactly 4 coefficients: " + plane.dump());
        Coords c;
        for (std::size_t i = 0; i < 4; ++i) c[i] = json_rational(plane[i], params);
        planes.push_back(c);
    }
    mpz_class scale = 1;
    if (doc.contains("scale")) {
        const auto& s = doc["scale"];
        const Rational r = s.is_string() ? Rational::parse(s.get<std::string>()) : json_rational(s, {});
        if (!r.is_integer()) throw std::invalid_argument("scale must be an integer");
        scale = r.numerator();
    }
    return make_arrangement(doc.value("name", std::string("arrangement")), planes, scale);
}

std::string export_arrangement(const Arrangement& a) {
    nlohmann::ordered_json doc;
    doc["name"] = a.name;
    auto planes = nlohmann::ordered_json::array();
    for (const auto& f : a.forms) {
        auto row = nlohmann::ordered_json::array();
        for (const auto& c : f.coeffs()) row.push_back(c.str());
        planes.push_back(row);
    }
    doc["planes"] = planes;
    doc["scale"] = a.scale.get_si();
    return doc.dump(2);
}

// ---- classification ---------------------------------------------------------

IncidenceData classify(const Arrangement& a) {
    std::vector<Vec4<Rational>> forms;
    for (const auto& f : a.forms) forms.push_back(f.coeffs());
    const auto g = generic_incidence(forms);
    if (!g.distinct) throw std::invalid_argument("classify: arrangement has proportional planes");

    IncidenceData d;
    std::vector<std::size_t> tags;
    d.counters = count(g, &tags);
    for (const auto& l : g.lines) {
        auto line = make_line(l.span, l.planes);
        switch (std::popcount(l.planes)) {
            case 2: d.double_lines.push_back(std::move(line)); break;
            case 3: d.triple_lines.push_back(std::move(line)); break;
            default: d.heavy_lines.push_back(std::move(line)); break;
        }
    }
    for (std::size_t i = 0; i < g.points.size(); ++i) {
        const auto& p = g.points[i];
        d.points.push_back({ProjPoint(to_coords(p.coords)), mask_indices(p.planes),
                            static_cast<std::size_t>(std::popcount(p.planes)), tags[i]});
    }
    std::sort(d.points.begin(), d.points.end(),
              [](const IncidencePoint& x, const IncidencePoint& y) { return x.point < y.point; });
    return d;
}

ModularIncidence classify_mod_p(const Arrangement& a, std::uint64_t p) {
    std::vector<Vec4<FpElem>> forms;
    for (const auto& f : a.forms) {
        Vec4<FpElem> v;
        for (std::size_t i = 0; i < 4; ++i) v[i] = FpElem::from_integer(f[i].numerator(), p);
        forms.push_back(v);
    }
    const auto g = generic_incidence(forms);
    ModularIncidence out;
    out.distinct_planes = g.distinct;
    out.counters = count(g);
    for (const auto& l : g.lines) {
        const int n = std::popcount(l.planes);
        if (n == 2) ++out.double_lines;
        if (n >= 4) ++out.heavy_lines;
    }
    for (const auto& pt : g.points)
        if (std::popcount(pt.planes) >= 6) ++out.heavy_points;
    return out;
}

Verdict validate(const IncidenceData& d) {
    Verdict v;
    v.bad_lines = d.heavy_lines;
    for (const auto& p : d.points)
        if (p.multiplicity >= 6) v.bad_points.push_back(p);
    v.admissible = v.bad_lines.empty() && v.bad_points.empty();
    return v;
}

std::string Verdict::describe() const {
    if (admissible) return "admissible";
    std::ostringstream os;
    os << "not admissible:";
    for (const auto& l : bad_lines) os << " line {" << l.str() << "} lies on " << l.planes.size() << " planes;";
    for (const auto& p : bad_points) os << " point " << p.point.str() << " lies on " << p.multiplicity << " planes;";
    return os.str();
}

}  // namespace octic
