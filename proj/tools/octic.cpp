// Command-line front end: arrangement analysis, point counts and newform matching.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "octic/arithmetic.hpp"
#include "octic/catalog.hpp"
#include "octic/deformations.hpp"
#include "octic/invariants.hpp"
#include "octic/modularity.hpp"

namespace {

using octic::Arrangement;
using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInadmissible = 2;
constexpr int kExitMismatch = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Source {
    std::string catalog;
    std::string file;
    std::string params;
    std::string scale;
};

struct PrimeSelection {
    std::string list;
    std::string range;
};

struct Common {
    Source source;
    PrimeSelection primes;
    unsigned threads = 1;
    bool json = false;
    bool exact = false;
};

template <class T>
std::string s(const T& v) {
    if constexpr (std::is_same_v<T, mpz_class>) return v.get_str();
    else return std::to_string(v);
}

octic::ParamMap parse_params(const std::string& text) {
    octic::ParamMap out;
    std::stringstream in(text);
    for (std::string item; std::getline(in, item, ',');) {
        const auto eq = item.find('=');
        if (eq != 1 || item.size() < 3 || item[0] < 'A' || item[0] > 'Z')
            throw UsageError("malformed parameter '" + item + "', expected e.g. A=1 or B=-3/2");
        out[item[0]] = octic::Rational::parse(item.substr(2));
    }
    return out;
}

std::uint64_t parse_prime(const std::string& text) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || text.empty() || text[0] == '-') throw UsageError("malformed prime '" + text + "'");
    return v;
}

Arrangement load(const Source& src) {
    if (src.catalog.empty() == src.file.empty()) throw UsageError("give exactly one of --catalog and --file");
    const auto overrides = parse_params(src.params);
    Arrangement a;
    if (!src.catalog.empty()) {
        a = octic::catalog_get(src.catalog, overrides);
    } else {
        std::ifstream in(src.file);
        if (!in) throw UsageError("cannot read " + src.file);
        std::stringstream buf;
        buf << in.rdbuf();
        a = octic::parse_arrangement(buf.str(), overrides);
    }
    if (!src.scale.empty()) {
        const auto k = octic::Rational::parse(src.scale);
        if (!k.is_integer() || k.is_zero()) throw UsageError("--scale needs a nonzero integer");
        a.scale = octic::squarefree_part(a.scale * k.numerator());
    }
    return a;
}

struct SelectedPrimes {
    std::vector<std::uint64_t> good;
    std::vector<std::uint64_t> skipped;  // bad primes dropped from a range
};

SelectedPrimes select_primes(const Arrangement& a, const PrimeSelection& sel) {
    SelectedPrimes out;
    if (!sel.list.empty() && !sel.range.empty()) throw UsageError("give at most one of --primes and --prime-range");
    if (!sel.range.empty()) {
        const auto dots = sel.range.find("..");
        if (dots == std::string::npos) throw UsageError("--prime-range expects A..B");
        const auto lo = parse_prime(sel.range.substr(0, dots)), hi = parse_prime(sel.range.substr(dots + 2));
        if (hi > octic::kMaxCountingPrime) throw UsageError("--prime-range upper end is too large to enumerate");
        for (auto p : octic::primes_in_range(lo, hi)) (octic::good_prime(a, p).good ? out.good : out.skipped).push_back(p);
        return out;
    }
    std::stringstream in(sel.list);
    for (std::string item; std::getline(in, item, ',');) {
        const auto p = parse_prime(item);
        if (const auto v = octic::good_prime(a, p); !v.good)
            throw UsageError("bad prime " + std::to_string(p) + ": " + v.reason);
        out.good.push_back(p);
    }
    return out;
}

struct Analysis {
    octic::IncidenceData incidence;
    octic::EquisingularResult deformation;
    octic::InvariantSet invariants;
};

Analysis analyze(const Arrangement& a, bool exact) {
    Analysis r;
    r.incidence = octic::classify(a);
    if (const auto v = octic::validate(r.incidence); !v.admissible) throw octic::AdmissibilityError(v.describe());
    octic::DeformationOptions opt;
    if (exact) opt.method = octic::LinearAlgebraMethod::Exact;
    r.deformation = octic::equisingular_dimension(a, opt);
    r.invariants = octic::invariants_for_planes(r.incidence.counters, a.size(),
                                                static_cast<std::int64_t>(r.deformation.h));
    return r;
}

Json counters_json(const octic::IncidenceCounters& c) {
    return Json{{"p3", s(c.p3)},     {"p4_0", s(c.p4_0)}, {"p4_1", s(c.p4_1)}, {"p5_0", s(c.p5_0)},
                {"p5_1", s(c.p5_1)}, {"p5_2", s(c.p5_2)}, {"l3", s(c.l3)}};
}

Json arrangement_json(const Arrangement& a) {
    Json planes = Json::array();
    for (const auto& f : a.forms) planes.push_back(f.str());
    return Json{{"name", a.name}, {"scale", s(a.scale)}, {"planes", planes}};
}

Json invariants_json(const Analysis& r) {
    const auto& i = r.invariants;
    return Json{{"e", s(i.e)},
                {"h11", s(i.h11)},
                {"h12", s(i.h12)},
                {"rho_Y", s(i.rho_Y)},
                {"skew_rank", s(i.skew_rank)},
                {"dim_jf", s(r.deformation.dim_jf)},
                {"dim_ieq", s(r.deformation.dim_ieq)}};
}

Json record_json(const octic::CountRecord& r) {
    return Json{{"p", s(r.p)},
                {"raw", s(r.raw)},
                {"line_corr", s(r.line_corr)},
                {"fourfold_corr", s(r.fourfold_corr)},
                {"total", s(r.total)},
                {"a_p", s(r.a_p)}};
}

std::string counters_text(const octic::IncidenceCounters& c) {
    std::string out = "(";
    const auto v = c.as_array();
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out + ")";
}

void emit(const Common& c, const Json& j, const std::string& text) {
    if (c.json) std::cout << j.dump(2) << '\n';
    else std::cout << text;
}

int cmd_analyze(const Common& c) {
    const auto a = load(c.source);
    const auto r = analyze(a, c.exact);
    const Json j{{"arrangement", arrangement_json(a)},
                 {"counters", counters_json(r.incidence.counters)},
                 {"invariants", invariants_json(r)}};
    std::ostringstream t;
    t << a.name << ": counters (p3,p4_0,p4_1,p5_0,p5_1,p5_2,l3) = " << counters_text(r.incidence.counters) << '\n'
      << "e = " << r.invariants.e << ", h11 = " << r.invariants.h11 << ", h12 = " << r.invariants.h12
      << ", rho(Y) = " << r.invariants.rho_Y << ", skew = " << r.invariants.skew_rank << '\n';
    emit(c, j, t.str());
    return kExitOk;
}

int cmd_hodge(const Common& c) {
    const auto a = load(c.source);
    const auto r = analyze(a, c.exact);
    const auto list = octic::strata(r.incidence);
    Json strata = Json::array();
    for (const auto& st : list) strata.push_back(st.describe());
    Json primes = Json::array();
    for (auto p : r.deformation.primes) primes.push_back(s(p));
    const Json j{{"arrangement", arrangement_json(a)},
                 {"method", r.deformation.method == octic::LinearAlgebraMethod::Exact ? "exact" : "modular"},
                 {"primes", primes},
                 {"strata", strata},
                 {"dim_jf", s(r.deformation.dim_jf)},
                 {"dim_ieq", s(r.deformation.dim_ieq)},
                 {"h12", s(r.invariants.h12)},
                 {"h11", s(r.invariants.h11)},
                 {"e", s(r.invariants.e)}};
    std::ostringstream t;
    t << a.name << ": " << list.size() << " strata\n";
    for (const auto& st : list) t << "  " << st.describe() << '\n';
    t << "dim Jf = " << r.deformation.dim_jf << ", dim I_eq = " << r.deformation.dim_ieq
      << ", h12 = " << r.invariants.h12 << ", h11 = " << r.invariants.h11 << '\n';
    emit(c, j, t.str());
    return kExitOk;
}

int cmd_count(const Common& c) {
    const auto a = load(c.source);
    const auto r = analyze(a, c.exact);
    if (c.primes.list.empty() && c.primes.range.empty()) throw UsageError("count needs --primes or --prime-range");
    const auto sel = select_primes(a, c.primes);
    const auto records = octic::lseries(a, sel.good, r.invariants.h11, r.invariants.h12, {c.threads, 0});
    Json recs = Json::array(), skipped = Json::array();
    std::ostringstream t;
    t << a.name << " (h11 = " << r.invariants.h11 << ")\n";
    for (const auto& rec : records) {
        recs.push_back(record_json(rec));
        t << "p = " << rec.p << ": raw " << rec.raw << " + lines " << rec.line_corr << " + fourfold "
          << rec.fourfold_corr << " = " << rec.total << ", a_p = " << rec.a_p << '\n';
    }
    for (auto p : sel.skipped) {
        skipped.push_back(s(p));
        t << "p = " << p << ": bad prime, skipped\n";
    }
    Json j{{"arrangement", arrangement_json(a)}, {"h11", s(r.invariants.h11)}, {"records", recs}};
    if (!sel.skipped.empty()) j["skipped"] = skipped;
    emit(c, j, t.str());
    return kExitOk;
}

int cmd_modular(const Common& c) {
    const auto a = load(c.source);
    const auto r = analyze(a, c.exact);
    std::vector<std::uint64_t> primes(octic::kTablePrimes.begin(), octic::kTablePrimes.end());
    for (auto p : primes)
        if (const auto v = octic::good_prime(a, p); !v.good)
            throw UsageError("table prime " + std::to_string(p) + " is bad: " + v.reason);
    std::map<std::uint64_t, std::int64_t> ap;
    for (const auto& rec : octic::lseries(a, primes, r.invariants.h11, r.invariants.h12, {c.threads, 0}))
        ap[rec.p] = rec.a_p;
    const auto m = octic::match(ap);

    Json vec = Json::object(), agreement = Json::object();
    for (const auto& [p, v] : ap) vec[s(p)] = s(v);
    std::ostringstream t;
    t << a.name << ": a_p =";
    for (const auto& [p, v] : ap) t << ' ' << v;
    t << "\nmatch: " << (m.label ? *m.label : "none") << '\n';
    for (const auto& row : octic::newform_table()) {
        Json per = Json::object();
        for (auto p : primes) per[s(p)] = ap.at(p) == row.ap.at(p);
        agreement[row.label] = per;
    }
    for (const auto& la : m.agreement) t << "  " << la.label << ": " << la.agreeing << "/" << primes.size() << '\n';
    const Json j{{"arrangement", arrangement_json(a)},
                 {"ap_vector", vec},
                 {"matched_label", m.label ? Json(*m.label) : Json(nullptr)},
                 {"agreement", agreement}};
    emit(c, j, t.str());
    return kExitOk;
}

Json row_json(const octic::Table1Row& row) {
    return Json{{"row", s(row.number)},
                {"counters", counters_json(row.counters)},
                {"h12", s(row.h12)},
                {"h11", s(row.h11)},
                {"e", s(row.e)}};
}

int cmd_catalog_list(const Common& c) {
    Json entries = Json::array();
    std::ostringstream t;
    for (const auto& e : octic::catalog()) {
        const auto& row = octic::table1_row(e.row);
        Json params = Json::object();
        for (const auto& [k, v] : e.defaults) params[std::string(1, k)] = v.str();
        Json j{{"key", e.key}, {"expected", row_json(row)}, {"params", params}};
        if (e.newform) j["newform"] = *e.newform;
        entries.push_back(j);
        t << e.key << "\trow " << row.number << "\t" << counters_text(row.counters) << " h12=" << row.h12
          << " h11=" << row.h11 << " e=" << row.e << (e.newform ? "\t" + *e.newform : "") << '\n';
    }
    emit(c, Json{{"entries", entries}}, t.str());
    return kExitOk;
}

int cmd_catalog_export(const std::string& key) {
    std::cout << octic::export_entry(key) << '\n';
    return kExitOk;
}

int cmd_table1(const Common& c) {
    Json rows = Json::array();
    std::ostringstream t;
    bool all = true;
    for (const auto& e : octic::catalog()) {
        const auto a = octic::instantiate(e);
        const auto r = analyze(a, c.exact);
        const auto& want = octic::table1_row(e.row);
        const auto& got = r.invariants;
        const bool ok = got.counters == want.counters && got.h12 == want.h12 && got.h11 == want.h11 && got.e == want.e;
        all = all && ok;
        rows.push_back(Json{{"key", e.key},
                            {"row", s(want.number)},
                            {"match", ok},
                            {"computed",
                             Json{{"counters", counters_json(got.counters)},
                                  {"h12", s(got.h12)},
                                  {"h11", s(got.h11)},
                                  {"e", s(got.e)}}},
                            {"expected", row_json(want)}});
        t << (ok ? "ok       " : "MISMATCH ") << e.key << "\trow " << want.number << "\t" << counters_text(got.counters)
          << " h12=" << got.h12 << " h11=" << got.h11 << " e=" << got.e;
        if (!ok)
            t << "  expected " << counters_text(want.counters) << " h12=" << want.h12 << " h11=" << want.h11
              << " e=" << want.e;
        t << '\n';
    }
    emit(c, Json{{"rows", rows}, {"all_match", all}}, t.str());
    return all ? kExitOk : kExitMismatch;
}

void add_source(CLI::App* cmd, Common& c) {
    cmd->add_option("--catalog", c.source.catalog, "catalog key, e.g. 85 or f42");
    cmd->add_option("--file", c.source.file, "arrangement document (JSON)");
    cmd->add_option("--params", c.source.params, "parameter values, e.g. A=1,B=3");
    cmd->add_option("--scale", c.source.scale, "multiply the branch equation by this integer");
    cmd->add_flag("--exact", c.exact, "exact rational linear algebra for h12");
}

void add_primes(CLI::App* cmd, Common& c) {
    cmd->add_option("--primes", c.primes.list, "comma-separated primes");
    cmd->add_option("--prime-range", c.primes.range, "all good primes in A..B");
    cmd->add_option("--threads", c.threads, "worker threads for point counting")->check(CLI::Range(1u, 256u));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Double octic Calabi-Yau threefolds from eight-plane arrangements"};
    app.require_subcommand(1);
    Common c;
    app.add_flag("--json", c.json, "JSON report");

    auto* analyze_cmd = app.add_subcommand("analyze", "incidence counters and Hodge numbers");
    add_source(analyze_cmd, c);
    auto* hodge_cmd = app.add_subcommand("hodge", "equisingular deformation detail");
    add_source(hodge_cmd, c);
    auto* count_cmd = app.add_subcommand("count", "point counts and a_p");
    add_source(count_cmd, c);
    add_primes(count_cmd, c);
    auto* modular_cmd = app.add_subcommand("modular", "match a_p against the newform table");
    add_source(modular_cmd, c);
    modular_cmd->add_option("--threads", c.threads, "worker threads for point counting")->check(CLI::Range(1u, 256u));
    auto* catalog_cmd = app.add_subcommand("catalog", "built-in arrangements");
    catalog_cmd->require_subcommand(1);
    auto* list_cmd = catalog_cmd->add_subcommand("list", "keys with expected table rows");
    auto* export_cmd = catalog_cmd->add_subcommand("export", "arrangement document of an entry");
    std::string export_key;
    export_cmd->add_option("key", export_key, "catalog key")->required();
    auto* table_cmd = app.add_subcommand("table1", "recompute every catalog entry against its table row");
    table_cmd->add_flag("--exact", c.exact, "exact rational linear algebra for h12");
    for (auto* sub : {analyze_cmd, hodge_cmd, count_cmd, modular_cmd, list_cmd, table_cmd})
        sub->add_flag("--json", c.json, "JSON report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;  // help requests exit 0
    }

    try {
        if (*analyze_cmd) return cmd_analyze(c);
        if (*hodge_cmd) return cmd_hodge(c);
        if (*count_cmd) return cmd_count(c);
        if (*modular_cmd) return cmd_modular(c);
        if (*list_cmd) return cmd_catalog_list(c);
        if (*export_cmd) return cmd_catalog_export(export_key);
        if (*table_cmd) return cmd_table1(c);
    } catch (const octic::AdmissibilityError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInadmissible;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
