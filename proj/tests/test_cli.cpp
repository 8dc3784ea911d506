#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "cli.hpp"

using namespace segbounds;
using cli::run;

namespace {

std::string golden(const std::string& name) {
    std::ifstream in(std::string(SEGBOUNDS_GOLDEN_DIR) + "/" + name, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void expect_golden(const std::vector<std::string>& args, const std::string& file) {
    const auto out = run(args);
    EXPECT_EQ(out.exit_code, 0) << out.diagnostics;
    const std::string expected = golden(file);
    ASSERT_FALSE(expected.empty()) << file;
    EXPECT_EQ(out.output, expected) << file;
}

}  // namespace

TEST(Golden, Coefficients) { expect_golden({"coeffs", "--d", "2", "--n", "5"}, "coeffs_d2_n5.json"); }

TEST(Golden, TrinomialBound) { expect_golden({"bounds", "trinomial", "--n", "2"}, "bounds_trinomial_n2.json"); }

TEST(Golden, PairBoundsCsv) {
    expect_golden({"bounds", "szasz-pair", "--n-max", "3", "--format", "csv"}, "bounds_pair_nmax3.csv");
}

TEST(Golden, SzaszHarness) { expect_golden({"verify", "szasz", "--cases", "20", "--seed", "7"}, "verify_szasz_20.json"); }

TEST(Golden, PositivityScan) {
    expect_golden({"scan", "positivity", "--d", "2", "--d-max", "3", "--n-max", "3"}, "scan_positivity.json");
}

TEST(Report, SchemaAndDeterminism) {
    const auto a = run({"verify", "extremal", "--n-max", "6"});
    const auto b = run({"verify", "extremal", "--n-max", "6"});
    EXPECT_EQ(a.output, b.output);
    const auto j = nlohmann::json::parse(a.output);
    for (const char* key : {"command", "parameters", "results", "status", "summary", "version"}) EXPECT_TRUE(j.contains(key)) << key;
    EXPECT_FALSE(j.contains("timing_ms"));
    EXPECT_EQ(j["version"], SEGBOUNDS_VERSION);
    EXPECT_EQ(j["results"].size(), 5u);
    const auto timed = nlohmann::json::parse(run({"verify", "extremal", "--n-max", "3", "--timing"}).output);
    EXPECT_TRUE(timed.contains("timing_ms"));
}

TEST(Report, ValuesFromCommands) {
    const auto lim = nlohmann::json::parse(run({"bounds", "limit", "--d", "2"}).output);
    EXPECT_NEAR(lim["results"][0]["value"].get<double>(), trinomial_limit(), 1e-12);
    const auto landau = nlohmann::json::parse(run({"bounds", "landau", "--n", "0"}).output);
    EXPECT_EQ(landau["results"][0]["value"]["exact"], "1/1");
    const auto d1 = nlohmann::json::parse(run({"coeffs", "--d", "1", "--n", "3"}).output);
    EXPECT_EQ(d1["results"][3]["value"]["exact"], "1/16");
    EXPECT_EQ(d1["summary"]["oracle_agrees"], true);
}

TEST(ExitCodes, Usage) {
    EXPECT_EQ(run({"coeffs", "--d", "0", "--n", "3"}).exit_code, cli::usage);
    EXPECT_EQ(run({}).exit_code, cli::usage);
    EXPECT_EQ(run({"verify", "nonsense"}).exit_code, cli::usage);
    EXPECT_EQ(run({"bounds", "trinomial", "--n", "2", "--n-max", "3"}).exit_code, cli::usage);
    EXPECT_EQ(run({"bounds", "landau", "--d", "3"}).exit_code, cli::usage);
    EXPECT_EQ(run({"verify", "extremal", "--n-max", "1"}).exit_code, cli::usage);
    EXPECT_EQ(run({"verify", "signs", "--d", "3"}).exit_code, cli::usage);
    EXPECT_EQ(run({"verify", "gamma", "--n-max", "10", "--m", "5"}).exit_code, cli::usage);
    EXPECT_EQ(run({"coeffs", "--format", "xml"}).exit_code, cli::usage);
    EXPECT_EQ(run({"scan", "zerofree", "--d", "4", "--d-max", "3"}).exit_code, cli::usage);
    const auto bad = run({"coeffs", "--d", "0"});
    EXPECT_TRUE(bad.output.empty());
    EXPECT_FALSE(bad.diagnostics.empty());
}

TEST(ExitCodes, PassingVerifications) {
    EXPECT_EQ(run({"verify", "signs", "--n-max", "300"}).exit_code, cli::pass);
    EXPECT_EQ(run({"verify", "gamma", "--n-max", "20"}).exit_code, cli::pass);
    EXPECT_EQ(run({"verify", "prodpoly", "--n-max", "12"}).exit_code, cli::pass);
    EXPECT_EQ(run({"verify", "zerofree", "--d", "2", "--n-max", "12"}).exit_code, cli::pass);
    EXPECT_EQ(run({"verify", "positivity", "--d", "3", "--n-max", "8"}).exit_code, cli::pass);
    EXPECT_EQ(run({"--help"}).exit_code, cli::pass);
    EXPECT_EQ(run({"--version"}).output, std::string(SEGBOUNDS_VERSION) + "\n");
}

TEST(ExitCodes, FloatScanInconclusiveIsReported) {
    // A coarse grid cannot certify; the command reports inconclusive (2).
    const auto out = run({"verify", "zerofree", "--d", "2", "--n-max", "30", "--exact-max", "0", "--grid", "240"});
    EXPECT_EQ(out.exit_code, cli::inconclusive);
    const auto j = nlohmann::json::parse(out.output);
    EXPECT_EQ(j["status"], "inconclusive");
    EXPECT_GT(j["summary"]["inconclusive"].get<int>(), 0);
}

TEST(ExitCodes, Combine) {
    EXPECT_EQ(cli::combine(cli::pass, cli::inconclusive), cli::inconclusive);
    EXPECT_EQ(cli::combine(cli::inconclusive, cli::violation), cli::violation);
    EXPECT_EQ(cli::combine(cli::pass, cli::pass), cli::pass);
}

TEST(Writers, JsonAndCsv) {
    const nlohmann::json j = {{"b", 0.1}, {"a", {{"z", "x,y"}, {"y", nullptr}}}};
    EXPECT_EQ(cli::to_json_text(j), "{\n  \"a\": {\n    \"y\": null,\n    \"z\": \"x,y\"\n  },\n  \"b\": 0.10000000000000001\n}\n");
    const nlohmann::json rows = nlohmann::json::array({{{"k", 1}, {"v", {{"s", "say \"hi\""}}}}, {{"k", 2}}});
    EXPECT_EQ(cli::to_csv_text(rows), "k,v.s\n1,\"say \"\"hi\"\"\"\n2,\n");
    EXPECT_EQ(cli::format_double(1.0 / 3.0), "0.33333333333333331");
}

TEST(Writers, OutPathIsPassedThrough) {
    const auto out = run({"coeffs", "--n", "1", "--out", "/tmp/x.json"});
    EXPECT_EQ(out.out_path, "/tmp/x.json");
    EXPECT_FALSE(out.output.empty());
}
