#pragma once

// Command-line front end: argument parsing, command dispatch and the
// deterministic report writer. Kept in a header so tests can drive it
// without spawning processes.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "segbounds/segbounds.hpp"

namespace segbounds::cli {

using nlohmann::json;

enum ExitCode : int { pass = 0, violation = 1, inconclusive = 2, usage = 64 };

struct Outcome {
    int exit_code = pass;
    std::string output;       // report text (stdout unless out_path is set)
    std::string diagnostics;  // usage / error text for stderr
    std::string out_path;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------- writers

inline std::string format_double(double v) {
    if (!std::isfinite(v)) return "null";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace detail {

inline void emit(const json& j, std::string& out, int indent) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
    switch (j.type()) {
        case json::value_t::object: {
            if (j.empty()) { out += "{}"; return; }
            out += "{\n";
            bool first = true;
            for (const auto& [k, v] : j.items()) {  // std::map storage: keys sorted
                if (!first) out += ",\n";
                first = false;
                out += inner + json(k).dump() + ": ";
                emit(v, out, indent + 1);
            }
            out += "\n" + pad + "}";
            return;
        }
        case json::value_t::array: {
            if (j.empty()) { out += "[]"; return; }
            out += "[\n";
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i) out += ",\n";
                out += inner;
                emit(j[i], out, indent + 1);
            }
            out += "\n" + pad + "]";
            return;
        }
        case json::value_t::number_float: out += format_double(j.get<double>()); return;
        default: out += j.dump(); return;
    }
}

inline std::string scalar_text(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_float()) return format_double(v.get<double>());
    if (v.is_null()) return "";
    std::string s;
    emit(v, s, 0);
    return s;
}

inline void flatten(const json& j, const std::string& prefix, std::map<std::string, std::string>& row) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, row);
        return;
    }
    if (j.is_array()) {
        row[prefix] = j.dump();
        return;
    }
    row[prefix] = scalar_text(j);
}

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

}  // namespace detail

inline std::string to_json_text(const json& j) {
    std::string out;
    detail::emit(j, out, 0);
    return out + "\n";
}

/// The results table as CSV: one row per record, nested fields dotted,
/// columns sorted by name.
inline std::string to_csv_text(const json& results) {
    std::vector<std::map<std::string, std::string>> rows;
    std::set<std::string> columns;
    auto add = [&](const json& rec) {
        std::map<std::string, std::string> row;
        detail::flatten(rec, rec.is_object() ? "" : "value", row);
        for (const auto& [k, v] : row) columns.insert(k);
        rows.push_back(std::move(row));
    };
    if (results.is_array())
        for (const auto& rec : results) add(rec);
    else
        add(results);
    std::string out;
    bool first = true;
    for (const auto& c : columns) {
        out += (first ? "" : ",") + detail::csv_field(c);
        first = false;
    }
    out += "\n";
    for (const auto& row : rows) {
        first = true;
        for (const auto& c : columns) {
            auto it = row.find(c);
            out += (first ? "" : ",") + detail::csv_field(it == row.end() ? "" : it->second);
            first = false;
        }
        out += "\n";
    }
    return out;
}

inline json rational_json(const Rational& q) { return {{"exact", to_fraction_string(q)}, {"float", q.get_d()}}; }

template <class T>
json optional_json(const std::optional<T>& v) {
    return v ? json(*v) : json(nullptr);
}

// ---------------------------------------------------------------- options

struct Options {
    std::string command;
    std::string target;
    std::optional<int> d, d_max;
    std::optional<long> n, n_max, m, grid, cases, exact_max, degree_max;
    std::optional<std::uint64_t> seed;
    std::string format = "json";
    std::string out;
    bool timing = false;
};

inline constexpr long default_grid = 1L << 17;
inline constexpr long default_exact_max = 40;

struct CommandResult {
    json parameters = json::object();
    json results;
    json summary = json::object();
    int exit_code = pass;
};

inline int combine(int a, int b) {
    if (a == violation || b == violation) return violation;
    if (a == inconclusive || b == inconclusive) return inconclusive;
    return pass;
}

inline std::string status_name(int code) {
    return code == pass ? "pass" : code == violation ? "violation" : "inconclusive";
}

inline std::size_t as_size(long v) { return static_cast<std::size_t>(v); }

inline void require(bool ok, const std::string& what) {
    if (!ok) throw UsageError(what);
}

// ---------------------------------------------------------------- commands

inline CommandResult cmd_coeffs(const Options& o) {
    const int d = o.d.value_or(2);
    const std::size_t N = as_size(o.n.value_or(10));
    CommandResult r;
    r.parameters = {{"d", d}, {"n", N}};
    const auto table = sqrt_coeffs_recurrence(d, N);
    const bool oracle = table.values == sqrt_coeffs_oracle(d, N).values;
    const bool squaring = squaring_identity_holds(table);
    r.results = json::array();
    for (std::size_t k = 0; k <= N; ++k) r.results.push_back({{"k", k}, {"value", rational_json(table.values[k])}});
    r.summary = {{"provenance", to_string(table.provenance)},
                 {"oracle", to_string(Provenance::convolution_oracle)},
                 {"oracle_agrees", oracle},
                 {"squaring_identity", squaring}};
    r.exit_code = oracle && squaring ? pass : violation;
    return r;
}

inline json bound_json(const BoundReport& b) {
    return {{"family", to_string(b.family)},
            {"d", b.d},
            {"n", b.n},
            {"value", b.exact_value ? rational_json(*b.exact_value) : json(nullptr)},
            {"limit", optional_json(b.limit)},
            {"gap_to_limit", optional_json(b.gap_to_limit)}};
}

inline CommandResult cmd_bounds(const Options& o) {
    CommandResult r;
    if (o.target == "limit") {
        const int d = o.d.value_or(2);
        r.parameters = {{"family", "limit"}, {"d", d}};
        const auto q = segment_limit_quadrature(d);
        json rec = {{"d", d}, {"value", q.value}, {"error_estimate", q.error}, {"panels", q.panels}};
        if (d == 1) rec["closed_form"] = pair_limit();
        if (d == 2) rec["closed_form"] = trinomial_limit();
        r.results = json::array({rec});
        r.summary = {{"limit", q.value}};
        return r;
    }
    const BoundFamily family = o.target == "landau"       ? BoundFamily::landau
                               : o.target == "szasz-pair" ? BoundFamily::szasz_pair
                               : o.target == "trinomial"  ? BoundFamily::trinomial
                                                          : BoundFamily::general_d;
    require(!(o.n && o.n_max), "give --n or --n-max, not both");
    require(!o.d || family == BoundFamily::general_d, "--d applies to general-d and limit only");
    const int d = o.d.value_or(2);
    const std::size_t top = as_size(o.n_max.value_or(o.n.value_or(10)));
    const std::size_t from = o.n_max ? 0 : top;
    auto reports = bound_reports(family, top, d);
    r.parameters = {{"family", o.target}, {o.n_max ? "n_max" : "n", top}};
    if (family == BoundFamily::general_d) r.parameters["d"] = d;
    r.results = json::array();
    for (std::size_t n = from; n <= top; ++n) r.results.push_back(bound_json(reports[n]));
    r.summary = {{"rows", r.results.size()}};
    return r;
}

inline CommandResult verify_signs(const Options& o) {
    require(!o.d || *o.d == 2, "the sign pattern is stated for d = 2 only");
    const std::size_t N = as_size(o.n_max.value_or(2000));
    CommandResult r;
    r.parameters = {{"d", 2}, {"n_max", N}};
    const auto table = sqrt_coeffs_recurrence(2, N);
    const auto signs = check_sign_pattern(table, true);
    const auto step = check_induction_step(table);
    std::optional<std::size_t> sqrt3_failure;
    Rational partial;
    for (std::size_t n = 0; n <= N; ++n) {
        partial += table.values[n];
        if (!exceeds_inverse_sqrt3(partial)) {
            sqrt3_failure = n;
            break;
        }
    }
    r.results = {{"sign_pattern", {{"conforms", signs.conforms}, {"first_violation", optional_json(signs.first_violation)}}},
                 {"induction_step",
                  {{"holds", step.holds}, {"applicable", step.applicable}, {"first_violation", optional_json(step.first_violation)}}},
                 {"value_at_one_squared_exceeds_third",
                  {{"holds", !sqrt3_failure}, {"first_violation", optional_json(sqrt3_failure)}}}};
    r.exit_code = signs.conforms && step.holds && !sqrt3_failure ? pass : violation;
    r.summary = {{"checked", N + 1}, {"holds", r.exit_code == pass}};
    return r;
}

inline CommandResult verify_gamma(const Options& o) {
    const std::size_t N = as_size(o.n_max.value_or(200));
    if (o.m) require(as_size(*o.m) >= N + 1, "--m must be at least n-max + 1");
    CommandResult r;
    r.parameters = {{"n_max", N}, {"m", o.m ? json(*o.m) : json("3n+16")}};
    sqrt_coeffs_recurrence(2, N + 1);
    helper_coeffs(o.m ? as_size(*o.m) : default_gamma_truncation(N));
    auto rows = parallel_map(N + 1, [&](std::size_t n) {
        const std::size_t M = o.m ? as_size(*o.m) : default_gamma_truncation(n);
        const auto g = gamma_coeffs(n, M);
        const auto v = check_gamma_claims(g);
        const auto ts = truncated_gamma_sum(g);
        json rec = {{"n", n},
                    {"m", M},
                    {"nonpositive_failure", optional_json(v.nonpositive_failure)},
                    {"strict_tail_failure", optional_json(v.strict_tail_failure)},
                    {"small_pattern_failure", optional_json(v.small_pattern_failure)},
                    {"truncated_sum_in_range", ts.holds()},
                    {"successor_identity", n % 3 == 0 ? json(successor_gamma_identity(n)) : json(nullptr)}};
        rec["holds"] = v.holds() && ts.holds() && (n % 3 != 0 || successor_gamma_identity(n));
        return rec;
    });
    r.results = json::array();
    std::size_t failures = 0;
    for (auto& rec : rows) {
        if (!rec["holds"].get<bool>()) ++failures;
        r.results.push_back(std::move(rec));
    }
    r.summary = {{"checked", N + 1}, {"failures", failures}};
    r.exit_code = failures == 0 ? pass : violation;
    return r;
}

inline CommandResult verify_prodpoly(const Options& o) {
    const std::size_t N = as_size(o.n_max.value_or(60));
    require(N >= 1, "--n-max must be at least 1");
    CommandResult r;
    r.parameters = {{"n_max", N}, {"quotient_k", "3n"}};
    sqrt_coeffs_recurrence(2, 3 * N + 1);
    helper_coeffs(3 * N + 1);
    auto rows = parallel_map(N, [&](std::size_t i) {
        const std::size_t n = i + 1;
        const auto pp = build_P(n);
        const auto loc = verify_root_localization(pp);
        const auto qi = verify_quotient_identity(n, 3 * n);
        const bool leading = pp.P.leading() == taylor_at_one(2, n);
        json rec = {{"n", n},
                    {"roots_in_window", loc.roots_with_multiplicity},
                    {"distinct_roots", loc.distinct_roots},
                    {"gcd_degree", loc.gcd_degree},
                    {"integer_roots_ok", loc.integer_roots_ok},
                    {"sign_k3_ok", loc.sign_k3_ok},
                    {"beyond_positive_ok", loc.beyond_positive_ok},
                    {"leading_is_value_at_one", leading},
                    {"quotient_identity", qi.holds},
                    {"quotient_first_failure", optional_json(qi.first_failure)}};
        rec["holds"] = loc.holds() && qi.holds && leading;
        return rec;
    });
    r.results = json::array();
    std::size_t failures = 0;
    for (auto& rec : rows) {
        if (!rec["holds"].get<bool>()) ++failures;
        r.results.push_back(std::move(rec));
    }
    r.summary = {{"checked", N}, {"failures", failures}};
    r.exit_code = failures == 0 ? pass : violation;
    return r;
}

inline json certificate_json(const ZeroFreeCertificate& c, int d, std::size_t n) {
    json rec = {{"d", d},
                {"n", n},
                {"poly_id", c.poly_id},
                {"method", to_string(c.method)},
                {"boundary_zero_count", c.boundary_zero_count},
                {"winding_number", optional_json(c.winding_number)},
                {"verdict", to_string(c.verdict)}};
    if (c.method == ZeroFreeMethod::float_lipschitz) {
        rec["grid_points"] = c.grid_points;
        rec["min_modulus_lower_bound"] = c.min_modulus_lower_bound;
    }
    return rec;
}

struct ZeroFreeRun {
    json rows = json::array();
    std::size_t zero_free = 0, has_zeros = 0, inconclusive = 0;
};

inline ZeroFreeRun run_zero_free(int d_lo, int d_hi, std::size_t n_max, std::size_t exact_max, std::size_t grid) {
    struct Point {
        int d;
        std::size_t n;
    };
    std::vector<Point> points;
    for (int d = d_lo; d <= d_hi; ++d) {
        sqrt_coeffs_recurrence(d, n_max);
        for (std::size_t n = 1; n <= n_max; ++n) points.push_back({d, n});
    }
    auto certs = parallel_map(points.size(), [&](std::size_t i) {
        const auto [d, n] = points[i];
        const PolyQ T = sqrt_coeffs_recurrence(d, n).section(n);
        const std::string id = "T_" + std::to_string(n) + "^(" + std::to_string(d) + ")";
        return n <= exact_max ? certify_zero_free(T, id) : float_zero_scan(T, std::max(grid, 8 * n), id);
    });
    ZeroFreeRun run;
    for (std::size_t i = 0; i < certs.size(); ++i) {
        const auto& c = certs[i];
        if (c.verdict == ZeroFreeVerdict::zero_free) ++run.zero_free;
        if (c.verdict == ZeroFreeVerdict::has_zeros) ++run.has_zeros;
        if (c.verdict == ZeroFreeVerdict::inconclusive) ++run.inconclusive;
        run.rows.push_back(certificate_json(c, points[i].d, points[i].n));
    }
    return run;
}

inline CommandResult zero_free_command(const Options& o, bool scan) {
    const int d_lo = o.d.value_or(2);
    const int d_hi = scan ? o.d_max.value_or(d_lo) : d_lo;
    require(d_hi >= d_lo, "--d-max must be at least --d");
    const std::size_t N = as_size(o.n_max.value_or(40));
    const std::size_t exact_max = as_size(o.exact_max.value_or(default_exact_max));
    const std::size_t grid = as_size(o.grid.value_or(default_grid));
    CommandResult r;
    r.parameters = {{"d", d_lo}, {"n_max", N}, {"exact_max", exact_max}, {"grid", grid}};
    if (scan) r.parameters["d_max"] = d_hi;
    auto run = run_zero_free(d_lo, d_hi, N, exact_max, grid);
    r.results = std::move(run.rows);
    r.summary = {{"zero_free", run.zero_free}, {"has_zeros", run.has_zeros}, {"inconclusive", run.inconclusive}};
    if (run.has_zeros) r.exit_code = violation;
    else if (run.inconclusive) r.exit_code = inconclusive;
    if (scan) r.exit_code = run.inconclusive ? inconclusive : pass;  // zeros are findings, not failures
    return r;
}

inline CommandResult verify_extremal(const Options& o) {
    const std::size_t N = as_size(o.n_max.value_or(30));
    require(N >= 2, "--n-max must be at least 2");
    CommandResult r;
    r.parameters = {{"n_max", N}, {"samples", 1024}, {"tolerance", 1e-10}};
    sqrt_coeffs_recurrence(2, N);
    auto rows = parallel_map(N - 1, [&](std::size_t i) {
        const std::size_t n = i + 2;
        const auto f = extremal_function(n, false);
        const auto a = rational_series(f, n);
        const GaussianRational seg = a.segment_sum(n - 2, n);
        const Rational bound = squared_sum(2, n);
        const double dev = max_unimodular_deviation(f, 1024);
        const bool equal = seg.im == 0 && seg.re == bound;
        return json{{"n", n},
                    {"segment_sum", rational_json(seg.re)},
                    {"bound", rational_json(bound)},
                    {"equality", equal},
                    {"max_unimodular_deviation", dev},
                    {"holds", equal && dev < 1e-10}};
    });
    r.results = json::array();
    std::size_t failures = 0;
    for (auto& rec : rows) {
        if (!rec["holds"].get<bool>()) ++failures;
        r.results.push_back(std::move(rec));
    }
    r.summary = {{"checked", N - 1}, {"failures", failures}};
    r.exit_code = failures == 0 ? pass : violation;
    return r;
}

inline CommandResult verify_szasz(const Options& o) {
    const std::size_t cases = as_size(o.cases.value_or(1000));
    const std::uint64_t seed = o.seed.value_or(7);
    const int max_degree = static_cast<int>(o.degree_max.value_or(8));
    const std::size_t max_n = as_size(o.n_max.value_or(10));
    require(max_degree >= 1, "--degree-max must be at least 1");
    CommandResult r;
    r.parameters = {{"cases", cases}, {"seed", seed}, {"degree_max", max_degree}, {"n_max", max_n}, {"mu", "1,1,1,0,..."}};
    auto results = parallel_map(cases, [&](std::size_t i) { return szasz_case(seed, i, max_degree, max_n); });
    std::size_t checks = 0, failures = 0;
    double min_slack = std::numeric_limits<double>::infinity();
    json failing = json::array();
    for (const auto& c : results) {
        checks += c.checks;
        failures += c.failures;
        min_slack = std::min(min_slack, c.min_slack);
        if (c.failures) failing.push_back({{"case", c.case_index}, {"seed", c.seed}, {"degree", c.degree}});
    }
    const auto fx = coefficient_fixtures();
    r.results = {{"cases", cases},
                 {"checks", checks},
                 {"failures", failures},
                 {"failing_cases", failing},
                 {"min_slack", cases ? json(min_slack) : json(nullptr)},
                 {"fixtures",
                  {{"mobius_abs_sum", rational_json(fx.mobius_abs_sum)},
                   {"non_consecutive_sum", rational_json(fx.blaschke_skip_sum)},
                   {"trinomial_bound_2", rational_json(fx.trinomial_bound_2)},
                   {"mobius_exceeds_bound", fx.mobius_exceeds},
                   {"non_consecutive_exceeds_bound", fx.blaschke_exceeds}}}};
    r.exit_code = failures == 0 ? pass : violation;
    r.summary = {{"checks", checks}, {"failures", failures}};
    return r;
}

inline json positivity_json(const PositivityCertificate& c) {
    return {{"d", c.d},
            {"n", c.n},
            {"verdict", to_string(c.verdict)},
            {"roots_in_interval", c.roots_in_interval},
            {"witness_lo", c.witness_lo ? json(to_fraction_string(*c.witness_lo)) : json(nullptr)},
            {"witness_hi", c.witness_hi ? json(to_fraction_string(*c.witness_hi)) : json(nullptr)},
            {"grid_min", c.min_estimate}};
}

inline CommandResult positivity_command(const Options& o, bool scan) {
    const int d_lo = o.d.value_or(2);
    const int d_hi = scan ? o.d_max.value_or(d_lo) : d_lo;
    require(d_hi >= d_lo, "--d-max must be at least --d");
    const std::size_t N = as_size(o.n_max.value_or(40));
    CommandResult r;
    r.parameters = {{"d", d_lo}, {"n_max", N}};
    if (scan) r.parameters["d_max"] = d_hi;
    const auto certs = scan_conjecture(d_lo, d_hi, 1, N);
    r.results = json::array();
    json non_positive = json::array();
    std::size_t positive = 0;
    for (const auto& c : certs) {
        r.results.push_back(positivity_json(c));
        if (c.positive()) ++positive;
        else non_positive.push_back({{"d", c.d}, {"n", c.n}, {"verdict", to_string(c.verdict)}});
    }
    r.summary = {{"certificates", certs.size()}, {"positive", positive}, {"non_positive", non_positive}};
    if (!scan && !non_positive.empty()) r.exit_code = violation;
    return r;
}

inline CommandResult dispatch(const Options& o);

inline CommandResult cmd_report(const Options& o) {
    CommandResult r;
    r.results = json::object();
    for (const char* target : {"signs", "gamma", "prodpoly", "zerofree", "extremal", "szasz", "positivity"}) {
        Options sub;
        sub.command = "verify";
        sub.target = target;
        const auto part = dispatch(sub);
        r.results[target] = {{"parameters", part.parameters},
                             {"summary", part.summary},
                             {"status", status_name(part.exit_code)}};
        r.exit_code = combine(r.exit_code, part.exit_code);
    }
    (void)o;
    r.summary = {{"status", status_name(r.exit_code)}};
    return r;
}

inline CommandResult dispatch(const Options& o) {
    if (o.command == "coeffs") return cmd_coeffs(o);
    if (o.command == "bounds") return cmd_bounds(o);
    if (o.command == "report") return cmd_report(o);
    if (o.command == "scan") return o.target == "positivity" ? positivity_command(o, true) : zero_free_command(o, true);
    if (o.target == "signs") return verify_signs(o);
    if (o.target == "gamma") return verify_gamma(o);
    if (o.target == "prodpoly") return verify_prodpoly(o);
    if (o.target == "zerofree") return zero_free_command(o, false);
    if (o.target == "extremal") return verify_extremal(o);
    if (o.target == "szasz") return verify_szasz(o);
    return positivity_command(o, false);
}

// ---------------------------------------------------------------- parsing

inline void add_options(CLI::App* sub, Options& o, std::initializer_list<std::string> names) {
    const std::set<std::string> want(names);
    auto has = [&](const char* k) { return want.count(k) > 0; };
    if (has("d")) sub->add_option("--d", o.d, "Polynomial degree d of 1 + z + ... + z^d")->check(CLI::Range(1, 1000));
    if (has("d-max")) sub->add_option("--d-max", o.d_max, "Upper end of the d range")->check(CLI::Range(1, 1000));
    if (has("n")) sub->add_option("--n", o.n, "Index n")->check(CLI::Range(0L, 100000L));
    if (has("n-max")) sub->add_option("--n-max", o.n_max, "Upper end of the n range")->check(CLI::Range(0L, 100000L));
    if (has("m")) sub->add_option("--m", o.m, "Truncation index M (default 3n+16)")->check(CLI::Range(1L, 1000000L));
    if (has("grid"))
        sub->add_option("--grid", o.grid, "Float scan grid size (default 131072)")->check(CLI::Range(8L, 1L << 26));
    if (has("exact-max"))
        sub->add_option("--exact-max", o.exact_max, "Largest n certified exactly (default 40)")->check(CLI::Range(0L, 100000L));
    if (has("seed")) sub->add_option("--seed", o.seed, "Harness seed (default 7)");
    if (has("cases")) sub->add_option("--cases", o.cases, "Harness case count (default 1000)")->check(CLI::Range(0L, 10000000L));
    if (has("degree-max"))
        sub->add_option("--degree-max", o.degree_max, "Largest Blaschke degree (default 8)")->check(CLI::Range(1L, 64L));
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", o.out, "Write the report to PATH");
    sub->add_flag("--timing", o.timing, "Include wall-clock milliseconds (breaks byte stability)");
}

inline Outcome run(const std::vector<std::string>& args) {
    Outcome result;
    Options o;
    CLI::App app{"Exact verification of segment bounds for bounded power series", "segbounds"};
    app.require_subcommand(1);
    app.set_version_flag("--version", SEGBOUNDS_VERSION);

    auto* coeffs = app.add_subcommand("coeffs", "Taylor coefficients of sqrt(1 + z + ... + z^d)");
    add_options(coeffs, o, {"d", "n"});

    auto* bounds = app.add_subcommand("bounds", "Sharp segment bounds and their limits");
    bounds->add_option("family", o.target, "landau | szasz-pair | trinomial | general-d | limit")
        ->required()
        ->check(CLI::IsMember({"landau", "szasz-pair", "trinomial", "general-d", "limit"}));
    add_options(bounds, o, {"d", "n", "n-max"});

    auto* verify = app.add_subcommand("verify", "Run one exact verification");
    verify->add_option("target", o.target, "signs | gamma | prodpoly | zerofree | extremal | szasz | positivity")
        ->required()
        ->check(CLI::IsMember({"signs", "gamma", "prodpoly", "zerofree", "extremal", "szasz", "positivity"}));
    add_options(verify, o, {"d", "n-max", "m", "grid", "exact-max", "seed", "cases", "degree-max"});

    auto* scan = app.add_subcommand("scan", "Evidence scans over ranges of d and n");
    scan->add_option("target", o.target, "positivity | zerofree")
        ->required()
        ->check(CLI::IsMember({"positivity", "zerofree"}));
    add_options(scan, o, {"d", "d-max", "n-max", "grid", "exact-max"});

    auto* report = app.add_subcommand("report", "Every verification at its default parameters");
    add_options(report, o, {});

    std::vector<std::string> argv_storage{"segbounds"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_storage) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        result.output = app.help();
        return result;
    } catch (const CLI::CallForVersion&) {
        result.output = std::string(SEGBOUNDS_VERSION) + "\n";
        return result;
    } catch (const CLI::ParseError& e) {
        result.exit_code = usage;
        result.diagnostics = e.what() + std::string("\n") + app.help();
        return result;
    }
    for (auto* sub : app.get_subcommands()) o.command = sub->get_name();

    const auto start = std::chrono::steady_clock::now();
    CommandResult cr;
    try {
        cr = dispatch(o);
    } catch (const UsageError& e) {
        result.exit_code = usage;
        result.diagnostics = std::string("usage: ") + e.what() + "\n";
        return result;
    } catch (const std::exception& e) {
        result.exit_code = inconclusive;
        result.diagnostics = std::string("error: ") + e.what() + "\n";
        return result;
    }
    const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    const std::string command = o.target.empty() ? o.command : o.command + " " + o.target;
    if (o.format == "csv") {
        result.output = to_csv_text(cr.results);
    } else {
        json report = {{"command", command},
                       {"parameters", cr.parameters},
                       {"results", cr.results},
                       {"summary", cr.summary},
                       {"status", status_name(cr.exit_code)},
                       {"version", SEGBOUNDS_VERSION}};
        if (o.timing) report["timing_ms"] = elapsed;
        result.output = to_json_text(report);
    }
    result.exit_code = cr.exit_code;
    result.out_path = o.out;
    return result;
}

}  // namespace segbounds::cli
