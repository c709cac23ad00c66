#include <gtest/gtest.h>

#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gcdpairs/cli.hpp"
#include "gcdpairs/serialize.hpp"

using namespace gcdpairs;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::size_t lines(const std::string& text) { return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')); }

Outcome run_binary(const std::string& args, const std::string& env = "") {
    const std::string command = env + std::string(GCDPAIRS_BINARY) + " " + args + " 2>/dev/null";
    FILE* pipe = ::popen(command.c_str(), "r");
    std::string out;
    char buf[4096];
    for (std::size_t got; (got = std::fread(buf, 1, sizeof buf, pipe)) > 0;) out.append(buf, got);
    const int status = ::pclose(pipe);
    return {WEXITSTATUS(status), out, ""};
}

}  // namespace

TEST(CliList, Golden6) {
    auto r = run({"list", "6"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out,
              "{0,1}\n{0,2}\n{0,3}\n{1,1}\n{1,2}\n{1,3}\n{1,4}\n{1,5}\n{2,2}\n{2,3}\n{2,4}\n{2,5}\n"
              "{3,3}\n{3,4}\n{3,5}\n{4,5}\nThe number of gcd-pairs is 16\n");
}

TEST(CliList, Subsets) {
    EXPECT_EQ(run({"list", "6", "--subset", "zero-divisors"}).out,
              "{2,2}\n{2,3}\n{2,4}\n{3,3}\n{3,4}\nThe number of gcd-pairs is 5\n");
    EXPECT_EQ(run({"list", "6", "--subset", "units"}).out, "{1,1}\n{1,5}\nThe number of gcd-pairs is 2\n");
    EXPECT_EQ(run({"list", "6", "--subset", "2,3"}).out, "{2,2}\n{2,3}\n{3,3}\nThe number of gcd-pairs is 3\n");
    EXPECT_EQ(run({"list", "1"}).out, "The number of gcd-pairs is 0\n");
    EXPECT_EQ(run({"list", "1", "--subset", "units"}).out, "The number of gcd-pairs is 0\n");
    EXPECT_EQ(lines(run({"list", "9"}).out), 27u);
}

TEST(CliList, UsageErrors) {
    EXPECT_EQ(run({"list", "0"}).code, 2);
    EXPECT_EQ(run({"list", "6", "--subset", "2,6"}).code, 2);
    EXPECT_EQ(run({"list", "6", "--subset", "two"}).code, 2);
    EXPECT_EQ(run({"list", "-3"}).code, 2);
    EXPECT_EQ(run({"list"}).code, 2);
    EXPECT_EQ(run({"list", "70000"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
}

TEST(CliList, JsonRoundTrip) {
    auto r = run({"list", "6", "--subset", "zero-divisors", "--json"});
    ASSERT_EQ(r.code, 0);
    auto set = serialize::pair_set_from_json(serialize::parse(r.out));
    EXPECT_EQ(set.size(), 5u);
    EXPECT_EQ(set.subset(), (std::vector<Natural>{2, 3, 4}));
    EXPECT_EQ(serialize::print(serialize::to_json(set)), r.out);
    EXPECT_EQ(r.out,
              "{\n  \"schema_version\": 1,\n  \"n\": 6,\n  \"label\": \"zero-divisors\",\n  \"subset\": [\n    2,\n"
              "    3,\n    4\n  ],\n  \"pairs\": [\n    [\n      2,\n      2\n    ],\n    [\n      2,\n      3\n"
              "    ],\n    [\n      2,\n      4\n    ],\n    [\n      3,\n      3\n    ],\n    [\n      3,\n"
              "      4\n    ]\n  ],\n  \"count\": 5\n}\n");
}

TEST(CliCheck, Verdicts) {
    auto no = run({"check", "9", "4", "6"});
    EXPECT_EQ(no.code, 1);
    EXPECT_EQ(no.out, "{4,6} is not a gcd-pair of Z_9 (gcd = 2)\n");
    auto yes = run({"check", "6", "-4", "3"});
    EXPECT_EQ(yes.code, 0);
    EXPECT_EQ(yes.out, "{2,3} is a gcd-pair of Z_6 (gcd = 1)\n");
    EXPECT_EQ(run({"check", "6", "0", "0"}).code, 1);
    EXPECT_EQ(run({"check", "6", "14", "-9"}).code, 0);
    EXPECT_EQ(run({"check", "0", "1", "1"}).code, 2);
    EXPECT_EQ(run({"check", "6", "1"}).code, 2);
    EXPECT_EQ(run({"check", "6", "x", "1"}).code, 2);
}

TEST(CliCheck, Json) {
    auto r = run({"check", "6", "-4", "3", "--json"});
    auto doc = serialize::parse(r.out);
    EXPECT_EQ(doc.at("schema_version"), 1);
    EXPECT_EQ(doc.at("residues"), (serialize::Json{2, 3}));
    EXPECT_EQ(doc.at("gcd_pair"), true);
}

TEST(CliCount, Methods) {
    auto both = run({"count", "9", "--method", "both"});
    EXPECT_EQ(both.code, 0);
    EXPECT_NE(both.out.find("|nu_n|   enumerate: 26\n"), std::string::npos);
    EXPECT_NE(both.out.find("|nu_n|   formula: Exact 26 ["), std::string::npos);

    auto formula = run({"count", "15", "--method", "formula"});
    EXPECT_EQ(formula.code, 0);
    EXPECT_NE(formula.out.find("|nu_n,Z| formula: LowerBound 13 [pq form"), std::string::npos);
    EXPECT_EQ(formula.out.find("enumerate"), std::string::npos);

    auto enumerate = run({"count", "6", "--method", "enumerate"});
    EXPECT_EQ(enumerate.out, "n = 6\n|nu_n|   enumerate: 16\n|nu_n,Z| enumerate: 5\n");

    auto one = run({"count", "1"});
    EXPECT_EQ(one.code, 0);
    EXPECT_NE(one.out.find("|nu_n|   formula: unavailable"), std::string::npos);

    EXPECT_EQ(run({"count", "6", "--method", "guess"}).code, 2);
    EXPECT_EQ(run({"count", "0"}).code, 2);
}

TEST(CliCount, ExactFormulasAgreeWithEnumeration) {
    for (int n = 1; n <= 120; ++n) EXPECT_EQ(run({"count", std::to_string(n)}).code, 0) << n;
}

TEST(CliCount, Json) {
    auto doc = serialize::parse(run({"count", "15", "--json"}).out);
    EXPECT_EQ(doc.at("enumerate").at("nu_zero_divisors"), 14);
    EXPECT_EQ(doc.at("formula").at("nu").at("kind"), "StrictLowerBound");
    EXPECT_EQ(doc.at("formula").at("nu_zero_divisors").size(), 3u);
    EXPECT_TRUE(doc.at("mismatches").empty());
}

TEST(CliGraph, Analyze) {
    auto r6 = run({"graph", "6", "--analyze"});
    EXPECT_EQ(r6.code, 0);
    EXPECT_EQ(r6.out,
              "G_6: 6 vertices, 13 edges, 3 loops\nconnected: true\ngamma: 1\ntriangle: (0,1,2)\ntraceable: true\n"
              "hamiltonian: true\nclique_number: 5\nchromatic_number: 5\nplanar: false\n");
    auto r7 = run({"graph", "7", "--analyze"});
    EXPECT_NE(r7.out.find("chromatic_number: 4\n"), std::string::npos);
    EXPECT_NE(r7.out.find("planar: true\n"), std::string::npos);
    EXPECT_NE(r7.out.find("hamiltonian: false\n"), std::string::npos);
}

TEST(CliGraph, JsonRoundTripAndNulls) {
    auto r = run({"graph", "20", "--analyze", "--json"});
    ASSERT_EQ(r.code, 0);
    auto doc = serialize::parse(r.out);
    EXPECT_TRUE(doc.at("invariants").at("chromatic_number").is_null());  // above the default bound of 16
    EXPECT_EQ(doc.at("invariants").at("clique_number"), 12);
    EXPECT_EQ(doc.at("notes").size(), 1u);
    auto parsed = serialize::graph_document_from_json(doc);
    EXPECT_EQ(serialize::print(serialize::to_json(parsed)), r.out);
}

TEST(CliGraph, Dot) {
    const auto path = std::filesystem::temp_directory_path() / "gcdpairs_cli_test_g5.dot";
    auto r = run({"graph", "5", "--dot", path.string()});
    EXPECT_EQ(r.code, 0);
    std::ifstream in(path);
    std::stringstream text;
    text << in.rdbuf();
    EXPECT_EQ(text.str(), "graph G5 {\n1 -- 1;\n0 -- 1;\n1 -- 2;\n1 -- 3;\n1 -- 4;\n2 -- 3;\n3 -- 4;\n}\n");
    std::filesystem::remove(path);
    EXPECT_EQ(run({"graph", "5", "--dot", "/nonexistent-dir/g.dot"}).code, 2);
    EXPECT_EQ(run({"graph", "0"}).code, 2);
}

TEST(CliVerify, FilteredRun) {
    auto r = run({"verify", "--claim", "clique.semiprime", "--max-n", "22"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("Discrepancy"), std::string::npos);
    EXPECT_NE(r.out.find("1 claims: 0 Pass, 0 Fail, 1 Discrepancy, 0 Noted"), std::string::npos);
    EXPECT_EQ(run({"verify", "--claim", "nothing-matches"}).code, 2);

    auto json = run({"verify", "--claim", "erratum", "--json"});
    auto report = serialize::report_from_json(serialize::parse(json.out));
    EXPECT_EQ(report.entries.size(), 5u);
}

TEST(CliHelp, MentionsBounds) {
    auto r = run({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("Brute-force oracles"), std::string::npos);
}

TEST(CliBinary, ExitCodesAndDeterminism) {
    auto a = run_binary("list 6");
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, run({"list", "6"}).out);
    EXPECT_EQ(run_binary("list 6").out, a.out);
    EXPECT_EQ(run_binary("check 9 4 6").code, 1);
    EXPECT_EQ(run_binary("check 6 -4 3").code, 0);
    EXPECT_EQ(run_binary("list 0").code, 2);
    EXPECT_EQ(run_binary("graph 6 --analyze --json").out, run_binary("graph 6 --analyze --json").out);
}

TEST(CliBinary, EnvironmentOverridesBounds) {
    auto plain = run_binary("graph 20 --analyze --json");
    EXPECT_TRUE(serialize::parse(plain.out).at("invariants").at("chromatic_number").is_null());
    auto raised = run_binary("graph 20 --analyze --json", "GCDPAIRS_MAX_EXACT=chromatic=20 ");
    EXPECT_EQ(raised.code, 0);
    EXPECT_EQ(serialize::parse(raised.out).at("invariants").at("chromatic_number"), 12);
    EXPECT_EQ(run_binary("graph 6 --analyze", "GCDPAIRS_MAX_EXACT=bogus ").code, 2);
}
