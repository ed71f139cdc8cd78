#pragma once

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hultman/genfunc.hpp"
#include "hultman/ginibre.hpp"
#include "hultman/polynomial.hpp"
#include "hultman/tables.hpp"
#include "hultman/verify.hpp"

namespace hultman {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

// Integers that can exceed 64 bits always travel as decimal strings.
inline json big_to_json(const BigInt& v) { return v.str(); }

inline BigInt big_from_json(const json& v, const char* context) {
    try {
        if (v.is_string()) return BigInt(v.get<std::string>());
        if (v.is_number_integer()) return BigInt(v.get<long long>());
    } catch (const std::exception&) {
    }
    throw InvalidInputError(std::string(context) + ": expected a decimal integer, got " +
                            v.dump());
}

inline json poly_to_json(const IntPolynomial& p) {
    json coeffs = json::array();
    for (const BigInt& c : p.coeffs()) coeffs.push_back(big_to_json(c));
    return json{{"variable", p.variable()},
                {"coeffs", std::move(coeffs)},
                {"text", p.to_string()}};
}

inline IntPolynomial poly_from_json(const json& j, const char* context) {
    if (!j.is_object() || !j.contains("coeffs") || !j.contains("variable"))
        throw InvalidInputError(std::string(context) + ": malformed polynomial");
    std::vector<BigInt> coeffs;
    for (const json& c : j.at("coeffs")) coeffs.push_back(big_from_json(c, context));
    return IntPolynomial(std::move(coeffs), j.at("variable").get<std::string>());
}

inline json table_to_json(const HultmanTable& t) {
    json rows = json::array();
    for (int n = 0; n <= t.n_max(); ++n)
        for (int k = 1; k <= n + 1; ++k)
            rows.push_back(json{{"n", n}, {"k", k}, {"H", big_to_json(t.H(n, k))}});
    return json{{"n_max", t.n_max()},
                {"source", to_string(t.source())},
                {"rows", std::move(rows)}};
}

inline std::string table_to_csv(const HultmanTable& t) {
    std::string out = "n,k,H\n";
    for (int n = 0; n <= t.n_max(); ++n)
        for (int k = 1; k <= n + 1; ++k)
            out += std::to_string(n) + "," + std::to_string(k) + "," + t.H(n, k).str() + "\n";
    return out;
}

inline json pn_to_json(const PnFamily& family) {
    json polys = json::array();
    for (int n = 0; n <= family.n_max(); ++n) {
        json entry = poly_to_json(family.poly(n));
        entry["n"] = n;
        polys.push_back(std::move(entry));
    }
    return json{{"n_max", family.n_max()},
                {"source", family.source()},
                {"polynomials", std::move(polys)}};
}

inline std::string pn_to_csv(const PnFamily& family) {
    std::string out = "n,i,coeff\n";
    for (int n = 0; n <= family.n_max(); ++n) {
        const auto& coeffs = family.poly(n).coeffs();
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            out += std::to_string(n) + "," + std::to_string(i) + "," + coeffs[i].str() + "\n";
    }
    return out;
}

inline json pg_to_json(const std::vector<PgPolynomial>& list) {
    json polys = json::array();
    for (const PgPolynomial& p : list) {
        json entry = poly_to_json(p.poly);
        entry["g"] = p.g;
        entry["provenance"] = to_string(p.provenance);
        polys.push_back(std::move(entry));
    }
    return json{{"g_max", list.empty() ? -1 : list.back().g},
                {"polynomials", std::move(polys)}};
}

inline std::string pg_to_csv(const std::vector<PgPolynomial>& list) {
    std::string out = "g,i,coeff\n";
    for (const PgPolynomial& p : list) {
        const auto& coeffs = p.poly.coeffs();
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            out += std::to_string(p.g) + "," + std::to_string(i) + "," + coeffs[i].str() + "\n";
    }
    return out;
}

inline json property_report_to_json(const PgPropertyReport& r) {
    return json{{"g", r.g},
                {"lowest_coeff_ok", r.lowest_coeff_ok},
                {"leading_coeff_ok", r.leading_coeff_ok},
                {"value_at_one_ok", r.value_at_one_ok},
                {"valuation_ok", r.valuation_ok},
                {"degree_ok", r.degree_ok},
                {"all_coeffs_positive", r.all_coeffs_positive},
                {"pass", r.pass}};
}

inline json mc_report_to_json(const MCConfig& cfg, const MCReport& r) {
    return json{{"N", cfg.N},
                {"n", cfg.n},
                {"samples", cfg.samples},
                {"seed", cfg.seed},
                {"mean", r.estimate.mean},
                {"std_error", r.estimate.std_error},
                {"exact", big_to_json(r.estimate.exact_value)},
                {"z_score", r.estimate.z_score},
                {"z_threshold", r.z_threshold},
                {"pass", r.pass}};
}

inline json suite_result_to_json(const SuiteResult& s) {
    json checks = json::array();
    for (const VerifyCheck& c : s.checks)
        checks.push_back(json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    return json{{"suite", s.suite},
                {"pass", s.pass},
                {"checks", std::move(checks)},
                {"elapsed_ms", s.elapsed_ms}};
}

inline json verify_to_json(const std::vector<SuiteResult>& results) {
    json suites = json::array();
    bool pass = true;
    for (const SuiteResult& s : results) {
        pass = pass && s.pass;
        suites.push_back(suite_result_to_json(s));
    }
    return json{{"pass", pass}, {"suites", std::move(suites)}};
}

/// Removes every "elapsed_ms" field, recursively; used when comparing
/// payloads that must be identical up to timing.
inline void strip_timing(json& j) {
    if (j.is_object()) {
        j.erase("elapsed_ms");
        for (auto& [key, value] : j.items()) strip_timing(value);
    } else if (j.is_array()) {
        for (json& value : j) strip_timing(value);
    }
}

// ---------------------------------------------------------------------------
// Cache: canonical layout <dir>/<kind>-<params>-<source>.json. Loading
// re-validates the mathematical invariants before trusting anything.

namespace detail {

inline void require(bool ok, const std::string& message) {
    if (!ok) throw InvalidInputError(message);
}

} // namespace detail

inline HultmanTable table_from_json(const json& j, const char* context) {
    detail::require(j.is_object() && j.contains("n_max") && j.contains("rows"),
                    std::string(context) + ": malformed table");
    const int n_max = j.at("n_max").get<int>();
    detail::require(n_max >= 0, std::string(context) + ": negative n_max");
    std::vector<std::vector<BigInt>> hg(n_max + 1);
    for (int n = 0; n <= n_max; ++n) hg[n].assign(n / 2 + 1, 0);
    std::size_t rows_seen = 0;
    for (const json& row : j.at("rows")) {
        const int n = row.at("n").get<int>();
        const int k = row.at("k").get<int>();
        detail::require(n >= 0 && n <= n_max && k >= 1 && k <= n + 1,
                        std::string(context) + ": row (" + std::to_string(n) + "," +
                            std::to_string(k) + ") out of range");
        const BigInt value = big_from_json(row.at("H"), context);
        if ((n - k) % 2 == 0) {
            detail::require(value == 0, std::string(context) + ": parity violated at n=" +
                                            std::to_string(n) + " k=" + std::to_string(k));
        } else {
            hg[n][(n + 1 - k) / 2] = value;
        }
        ++rows_seen;
    }
    std::size_t rows_expected = 0;
    for (int n = 0; n <= n_max; ++n) rows_expected += n + 1;
    detail::require(rows_seen == rows_expected,
                    std::string(context) + ": expected " + std::to_string(rows_expected) +
                        " rows, found " + std::to_string(rows_seen));

    TableSource source = TableSource::recursion;
    const std::string tag = j.value("source", "recursion");
    if (tag == "brute") source = TableSource::brute;
    else if (tag == "stirling") source = TableSource::stirling;

    HultmanTable t(n_max, std::move(hg), source);
    for (int n = 0; n <= n_max; ++n) {
        detail::require(t.row_sum(n) == factorial(n),
                        std::string(context) + ": row sum at n=" + std::to_string(n) +
                            " is not n!");
        detail::require(t.H(n, n + 1) == 1,
                        std::string(context) + ": H(n,n+1) != 1 at n=" + std::to_string(n));
    }
    return t;
}

inline PnFamily pn_from_json(const json& j, const char* context) {
    detail::require(j.is_object() && j.contains("polynomials"),
                    std::string(context) + ": malformed polynomial family");
    std::vector<IntPolynomial> polys;
    for (const json& entry : j.at("polynomials"))
        polys.push_back(poly_from_json(entry, context));
    PnFamily family(std::move(polys), j.value("source", "unknown"));
    for (int n = 0; n <= family.n_max(); ++n) {
        const IntPolynomial& p = family.poly(n);
        detail::require(p.degree() == n + 1 && p.coeff(n + 1) == 1,
                        std::string(context) + ": p_" + std::to_string(n) +
                            " has wrong degree or leading coefficient");
        detail::require(p.eval(1) == factorial(n),
                        std::string(context) + ": p_" + std::to_string(n) + "(1) != n!");
        for (int i = 0; i <= n + 1; ++i)
            if ((n + 1 - i) % 2 == 1)
                detail::require(p.coeff(i) == 0, std::string(context) + ": p_" +
                                                     std::to_string(n) +
                                                     " has a forbidden exponent");
    }
    return family;
}

inline std::vector<PgPolynomial> pg_from_json(const json& j, const char* context) {
    detail::require(j.is_object() && j.contains("polynomials"),
                    std::string(context) + ": malformed numerator list");
    std::vector<PgPolynomial> list;
    int g = 0;
    for (const json& entry : j.at("polynomials")) {
        PgPolynomial p;
        p.g = entry.value("g", g);
        p.poly = poly_from_json(entry, context);
        p.provenance = entry.value("provenance", std::string("series-truncation")) == "ode-step"
                           ? PgPolynomial::Provenance::ode_step
                           : PgPolynomial::Provenance::series_truncation;
        detail::require(p.g == g, std::string(context) + ": non-contiguous g values");
        if (g == 0) {
            detail::require(p.poly == IntPolynomial::constant(1, p.poly.variable()),
                            std::string(context) + ": P_0 != 1");
        } else {
            detail::require(verify_Pg_properties(p).pass,
                            std::string(context) + ": P_" + std::to_string(g) +
                                " fails its defining identities");
        }
        list.push_back(std::move(p));
        ++g;
    }
    return list;
}

inline std::string cache_file_name(const std::string& kind, const std::string& param,
                                   const std::string& source) {
    return kind + "-" + param + "-" + source + ".json";
}

inline std::string cache_write(const std::string& dir, const std::string& file_name,
                               const std::string& kind, const json& params,
                               const json& object) {
    const json doc{{"schema_version", kSchemaVersion},
                   {"kind", kind},
                   {"params", params},
                   {"object", object}};
    const std::string path = dir + "/" + file_name;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidInputError("cache: cannot write " + path);
    out << doc.dump(2) << "\n";
    return path;
}

inline json cache_read(const std::string& dir, const std::string& file_name,
                       const std::string& kind) {
    const std::string path = dir + "/" + file_name;
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInputError("cache: cannot read " + path);
    json doc;
    try {
        in >> doc;
    } catch (const std::exception& e) {
        throw InvalidInputError("cache: " + path + " is not valid JSON: " + e.what());
    }
    if (!doc.is_object() || doc.value("kind", "") != kind || !doc.contains("object"))
        throw InvalidInputError("cache: " + path + " does not hold a " + kind);
    // Validate the payload before handing it out.
    const std::string context = "cache: " + path;
    if (kind == "table") table_from_json(doc.at("object"), context.c_str());
    else if (kind == "pn") pn_from_json(doc.at("object"), context.c_str());
    else if (kind == "pg") pg_from_json(doc.at("object"), context.c_str());
    else throw InvalidInputError("cache: unknown kind " + kind);
    return doc;
}

} // namespace hultman
