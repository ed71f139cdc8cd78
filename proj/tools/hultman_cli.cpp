// Command-line interface: exact Hultman-number tables, moment and numerator
// polynomials by several independent algorithms, cycle-graph decompositions,
// the cross-verification suites, and Monte Carlo spot checks. Reports are
// machine-readable JSON (big integers as decimal strings) or CSV.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hultman/hultman.hpp"
#include "hultman/serialize.hpp"
#include "hultman/verify.hpp"

namespace {

using hultman::json;

struct GlobalOptions {
    std::string format = "json";
    std::string out;
    int threads = 1;
    std::string cache_dir;
    std::uint64_t seed = hultman::kDefaultSeed;
    int enum_cap = hultman::kDefaultEnumerationCap;

    std::string resolved_cache_dir() const {
        if (!cache_dir.empty()) return cache_dir;
        if (const char* env = std::getenv("HULTMAN_CACHE_DIR"); env && *env) return env;
        return "cache";
    }
};

struct CommandResult {
    std::string status = "pass";  // pass | fail | error
    json payload;
    std::string csv;  // set when the payload has a CSV rendering

    int exit_code() const {
        if (status == "pass") return 0;
        if (status == "fail") return 1;
        return 2;
    }
};

void require_member(const std::string& value, const std::vector<std::string>& allowed,
                    const std::string& flag) {
    for (const auto& a : allowed)
        if (value == a) return;
    std::string msg = flag + " must be one of {";
    for (std::size_t i = 0; i < allowed.size(); ++i)
        msg += (i ? ", " : "") + allowed[i];
    msg += "}, got '" + value + "'";
    throw hultman::InvalidInputError(msg);
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            const int v = std::stoi(item, &pos);
            if (pos != item.size()) throw std::invalid_argument(item);
            values.push_back(v);
        } catch (const std::exception&) {
            throw hultman::InvalidInputError("cannot parse '" + item + "' as an integer");
        }
    }
    if (values.empty()) throw hultman::InvalidInputError("empty permutation literal");
    return values;
}

hultman::HultmanTable build_table(const std::string& source, int n_max,
                                  const GlobalOptions& global) {
    if (source == "brute")
        return hultman::hultman_table_brute(n_max, global.enum_cap, global.threads);
    if (source == "stirling") return hultman::hultman_table_stirling(n_max);
    return hultman::h_table_via_recursion(n_max);
}

hultman::PnFamily build_pn(const std::string& source, int n_max, const GlobalOptions& global) {
    if (source == "recursion") return hultman::p_family_via_recursion(n_max);
    if (source == "table")
        return hultman::p_family_from_table(hultman::hultman_table_stirling(n_max));
    std::vector<hultman::IntPolynomial> polys;
    for (int n = 0; n <= n_max; ++n)
        polys.push_back(hultman::wick_polynomial(n, global.enum_cap, global.threads));
    return hultman::PnFamily(std::move(polys), "wick");
}

std::vector<hultman::PgPolynomial> build_pg(const std::string& source, int g_max) {
    if (source == "ode") return hultman::Pg_chain_via_ode(g_max);
    const hultman::HultmanTable table = hultman::h_table_via_recursion(4 * g_max + 6);
    std::vector<hultman::PgPolynomial> list;
    for (int g = 0; g <= g_max; ++g) list.push_back(hultman::Pg_via_truncation(g, table));
    return list;
}

CommandResult cmd_table(const std::string& source, int n_max, const GlobalOptions& global) {
    require_member(source, {"brute", "stirling", "recursion"}, "--source");
    if (n_max < 0) throw hultman::InvalidInputError("--n-max must be non-negative");
    const hultman::HultmanTable table = build_table(source, n_max, global);
    CommandResult result;
    result.payload = hultman::table_to_json(table);
    result.csv = hultman::table_to_csv(table);
    return result;
}

CommandResult cmd_pn(const std::string& source, int n_max, const GlobalOptions& global) {
    require_member(source, {"recursion", "table", "wick"}, "--source");
    if (n_max < 0) throw hultman::InvalidInputError("--n-max must be non-negative");
    const hultman::PnFamily family = build_pn(source, n_max, global);
    CommandResult result;
    result.payload = hultman::pn_to_json(family);
    result.csv = hultman::pn_to_csv(family);
    return result;
}

CommandResult cmd_pg(const std::string& source, int g_max) {
    require_member(source, {"truncation", "ode"}, "--source");
    if (g_max < 0) throw hultman::InvalidInputError("--g-max must be non-negative");
    CommandResult result;
    std::vector<hultman::PgPolynomial> list;
    try {
        list = build_pg(source, g_max);
    } catch (const hultman::InternalConsistencyError& e) {
        result.status = "fail";
        result.payload = json{{"error", e.what()}};
        return result;
    }
    json properties = json::array();
    bool all_pass = true;
    for (const auto& p : list) {
        if (p.g == 0) continue;
        const hultman::PgPropertyReport report = hultman::verify_Pg_properties(p);
        all_pass = all_pass && report.pass;
        properties.push_back(hultman::property_report_to_json(report));
    }
    result.payload = hultman::pg_to_json(list);
    result.payload["source"] = source;
    result.payload["properties"] = std::move(properties);
    result.csv = hultman::pg_to_csv(list);
    if (!all_pass) result.status = "fail";
    return result;
}

CommandResult cmd_cycles(const std::string& perm_literal) {
    const hultman::Permutation p =
        hultman::Permutation::from_values(parse_int_list(perm_literal));
    const hultman::AltCycleDecomposition d = hultman::alternating_cycle_decomposition(p);
    const hultman::GluingResult glued = hultman::glue_polygon(p);

    json cycles = json::array();
    for (const auto& cycle : d.cycles) cycles.push_back(cycle);
    CommandResult result;
    result.payload = json{{"permutation", p.values()}, {"n", p.size()},
                          {"k", d.k},                  {"cycles", std::move(cycles)},
                          {"genus", glued.genus},      {"vertex_orbits", glued.vertex_orbits}};
    return result;
}

CommandResult cmd_verify(const std::string& suite, const std::string& tier,
                         const GlobalOptions& global) {
    require_member(suite, {"all", "theorem1", "eq1", "pn", "pg", "F", "mc"}, "--suite");
    require_member(tier, {"fast", "slow"}, "--tier");
    hultman::VerifyOptions opts;
    opts.tier = tier == "slow" ? hultman::Tier::slow : hultman::Tier::fast;
    opts.threads = global.threads;
    opts.seed = global.seed;
    opts.enum_cap = global.enum_cap;

    const std::vector<hultman::SuiteResult> results = hultman::run_verify(suite, opts);
    CommandResult result;
    result.payload = hultman::verify_to_json(results);
    result.payload["tier"] = tier;
    if (!result.payload.at("pass").get<bool>()) result.status = "fail";
    return result;
}

CommandResult cmd_mc(int N, int n, std::uint64_t samples, double z_threshold,
                     const GlobalOptions& global) {
    const hultman::MCConfig cfg{N, n, samples, global.seed};
    const hultman::PnFamily family = hultman::p_family_via_recursion(std::max(n, 1));
    const hultman::MCReport report =
        hultman::mc_verify(cfg, family, z_threshold, global.threads);
    CommandResult result;
    result.payload = hultman::mc_report_to_json(cfg, report);
    if (!report.pass) result.status = "fail";
    return result;
}

CommandResult cmd_cache(const std::string& action, const std::string& object,
                        const std::string& source, int n_max, int g_max,
                        const GlobalOptions& global) {
    require_member(action, {"store", "load"}, "action");
    require_member(object, {"table", "pn", "pg"}, "--object");
    const std::string dir = global.resolved_cache_dir();

    std::string file_name;
    json object_json;
    json params;
    if (object == "table") {
        require_member(source, {"brute", "stirling", "recursion"}, "--source");
        if (n_max < 0) throw hultman::InvalidInputError("--n-max must be non-negative");
        file_name = hultman::cache_file_name("table", "n" + std::to_string(n_max), source);
        params = json{{"n_max", n_max}, {"source", source}};
        if (action == "store")
            object_json = hultman::table_to_json(build_table(source, n_max, global));
    } else if (object == "pn") {
        require_member(source, {"recursion", "table", "wick"}, "--source");
        if (n_max < 0) throw hultman::InvalidInputError("--n-max must be non-negative");
        file_name = hultman::cache_file_name("pn", "n" + std::to_string(n_max), source);
        params = json{{"n_max", n_max}, {"source", source}};
        if (action == "store")
            object_json = hultman::pn_to_json(build_pn(source, n_max, global));
    } else {
        require_member(source, {"truncation", "ode"}, "--source");
        if (g_max < 0) throw hultman::InvalidInputError("--g-max must be non-negative");
        file_name = hultman::cache_file_name("pg", "g" + std::to_string(g_max), source);
        params = json{{"g_max", g_max}, {"source", source}};
        if (action == "store") object_json = hultman::pg_to_json(build_pg(source, g_max));
    }

    CommandResult result;
    if (action == "store") {
        std::filesystem::create_directories(dir);
        const std::string path =
            hultman::cache_write(dir, file_name, object, params, object_json);
        result.payload = json{{"path", path}, {"kind", object}, {"params", params}};
    } else {
        result.payload = hultman::cache_read(dir, file_name, object);
    }
    return result;
}

void emit(const json& report, const CommandResult& result, const GlobalOptions& global) {
    const std::string text =
        global.format == "csv" ? result.csv : report.dump(2) + "\n";
    if (global.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(global.out, std::ios::binary);
        if (!out) throw hultman::InvalidInputError("cannot write " + global.out);
        out << text;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Hultman-number engine: tables, generating functions and "
                 "cross-verification"};
    app.require_subcommand(1);

    GlobalOptions global;
    app.add_option("--format", global.format, "output format: json or csv")
        ->default_val("json");
    app.add_option("--out", global.out, "write the report to a file instead of stdout");
    app.add_option("--threads", global.threads, "worker threads (never changes results)")
        ->default_val(1);
    app.add_option("--cache-dir", global.cache_dir,
                   "cache directory (default: $HULTMAN_CACHE_DIR or ./cache)");
    app.add_option("--seed", global.seed, "RNG seed for Monte Carlo runs")
        ->default_val(hultman::kDefaultSeed);
    app.add_option("--enum-cap", global.enum_cap,
                   "largest n for exhaustive S_n enumeration")
        ->default_val(hultman::kDefaultEnumerationCap);

    std::string table_source = "recursion";
    int table_n_max = 9;
    CLI::App* table = app.add_subcommand("table", "emit the H(n,k) table");
    table->add_option("--n-max", table_n_max, "largest n")->required();
    table->add_option("--source", table_source, "brute | stirling | recursion");

    std::string pn_source = "recursion";
    int pn_n_max = 9;
    CLI::App* pn = app.add_subcommand("pn", "emit the moment polynomials p_n(N)");
    pn->add_option("--n-max", pn_n_max, "largest n")->required();
    pn->add_option("--source", pn_source, "recursion | table | wick");

    std::string pg_source = "truncation";
    int pg_g_max = 5;
    CLI::App* pg = app.add_subcommand("pg", "emit the numerator polynomials P_g(x)");
    pg->add_option("--g-max", pg_g_max, "largest genus")->required();
    pg->add_option("--source", pg_source, "truncation | ode");

    std::string cycles_perm;
    CLI::App* cycles =
        app.add_subcommand("cycles", "alternating cycles and gluing genus of one permutation");
    cycles->add_option("--perm", cycles_perm, "comma-separated one-line notation")->required();

    std::string verify_suite = "all";
    std::string verify_tier = "fast";
    CLI::App* verify = app.add_subcommand("verify", "run the cross-verification suites");
    verify->add_option("--suite", verify_suite, "all | eq1 | theorem1 | pn | pg | F | mc");
    verify->add_option("--tier", verify_tier, "fast | slow");

    int mc_N = 2;
    int mc_n = 3;
    std::uint64_t mc_samples = 1000000;
    double mc_z = 4.0;
    CLI::App* mc = app.add_subcommand("mc", "Monte Carlo trace-moment estimate vs exact");
    mc->add_option("--N", mc_N, "matrix dimension")->required();
    mc->add_option("--n", mc_n, "moment order")->required();
    mc->add_option("--samples", mc_samples, "sample count")->default_val(1000000);
    mc->add_option("--z-threshold", mc_z, "pass threshold on |z|")->default_val(4.0);

    std::string cache_action;
    std::string cache_object = "table";
    std::string cache_source = "recursion";
    int cache_n_max = 9;
    int cache_g_max = 5;
    CLI::App* cache = app.add_subcommand("cache", "store/load validated result files");
    cache->add_option("action", cache_action, "store | load")->required();
    cache->add_option("--object", cache_object, "table | pn | pg");
    cache->add_option("--source", cache_source, "producing algorithm tag");
    cache->add_option("--n-max", cache_n_max, "largest n (table, pn)");
    cache->add_option("--g-max", cache_g_max, "largest genus (pg)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ||
            e.get_name() == "CallForVersion")
            return app.exit(e);
        app.exit(e);
        return 2;
    }

    std::string command;
    json params;
    const auto started = std::chrono::steady_clock::now();
    CommandResult result;
    try {
        if (global.format != "json" && global.format != "csv")
            throw hultman::InvalidInputError("--format must be json or csv");
        if (global.threads < 1)
            throw hultman::InvalidInputError("--threads must be at least 1");

        if (table->parsed()) {
            command = "table";
            params = json{{"n_max", table_n_max}, {"source", table_source}};
            result = cmd_table(table_source, table_n_max, global);
        } else if (pn->parsed()) {
            command = "pn";
            params = json{{"n_max", pn_n_max}, {"source", pn_source}};
            result = cmd_pn(pn_source, pn_n_max, global);
        } else if (pg->parsed()) {
            command = "pg";
            params = json{{"g_max", pg_g_max}, {"source", pg_source}};
            result = cmd_pg(pg_source, pg_g_max);
        } else if (cycles->parsed()) {
            command = "cycles";
            params = json{{"perm", cycles_perm}};
            result = cmd_cycles(cycles_perm);
        } else if (verify->parsed()) {
            command = "verify";
            params = json{{"suite", verify_suite},
                          {"tier", verify_tier},
                          {"seed", global.seed},
                          {"threads", global.threads},
                          {"enum_cap", global.enum_cap}};
            result = cmd_verify(verify_suite, verify_tier, global);
        } else if (mc->parsed()) {
            command = "mc";
            params = json{{"N", mc_N},
                          {"n", mc_n},
                          {"samples", mc_samples},
                          {"z_threshold", mc_z},
                          {"seed", global.seed},
                          {"threads", global.threads}};
            result = cmd_mc(mc_N, mc_n, mc_samples, mc_z, global);
        } else if (cache->parsed()) {
            command = "cache";
            params = json{{"action", cache_action},
                          {"object", cache_object},
                          {"source", cache_source},
                          {"n_max", cache_n_max},
                          {"g_max", cache_g_max},
                          {"dir", global.resolved_cache_dir()}};
            result = cmd_cache(cache_action, cache_object, cache_source, cache_n_max,
                               cache_g_max, global);
        }

        if (global.format == "csv" && result.status != "error" && result.csv.empty())
            throw hultman::InvalidInputError("csv output is only available for table, pn and pg");
    } catch (const hultman::InternalConsistencyError& e) {
        result.status = "fail";
        result.payload = json{{"error", e.what()}};
        result.csv.clear();
        std::cerr << "error: " << e.what() << "\n";
    } catch (const std::exception& e) {
        result.status = "error";
        result.payload = json{{"error", e.what()}};
        result.csv.clear();
        std::cerr << "error: " << e.what() << "\n";
    }

    const double elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
            .count();
    json report{{"schema_version", hultman::kSchemaVersion},
                {"command", command},
                {"params", params},
                {"status", result.status},
                {"payload", result.payload},
                {"elapsed_ms", elapsed_ms}};

    try {
        if (result.status != "pass" && global.format == "csv") {
            // Failure and error reports are always JSON; CSV has no shape for them.
            GlobalOptions json_format = global;
            json_format.format = "json";
            emit(report, result, json_format);
        } else {
            emit(report, result, global);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return result.exit_code();
}
