// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "gcdpairs/cli.hpp"
#include "gcdpairs/graph.hpp"
#include "gcdpairs/oracle.hpp"
#include "gcdpairs/pairs.hpp"
#include "gcdpairs/verify.hpp"

using namespace gcdpairs;
using Clock = std::chrono::steady_clock;

namespace {

struct Verdict {
    bool ok = true;
    std::string detail;

    void require(bool condition, const std::string& what) {
        if (condition) return;
        if (ok) detail = what;
        ok = false;
    }
};

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string run_cli(const std::vector<std::string>& args, int& code) {
    std::ostringstream out, err;
    code = cli::run(args, out, err);
    return out.str();
}

std::string pair_lines(const std::vector<std::pair<int, int>>& pairs) {
    std::string text;
    for (auto [a, b] : pairs) text += "{" + std::to_string(a) + "," + std::to_string(b) + "}\n";
    return text + "The number of gcd-pairs is " + std::to_string(pairs.size()) + "\n";
}

Verdict list6() {
    Verdict v;
    const std::string expected = pair_lines({{0, 1}, {0, 2}, {0, 3}, {1, 1}, {1, 2}, {1, 3}, {1, 4}, {1, 5},
                                             {2, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 3}, {3, 4}, {3, 5}, {4, 5}});
    int code = 0;
    const auto start = Clock::now();
    const std::string out = run_cli({"list", "6"}, code);
    const double elapsed = seconds_since(start);
    v.require(code == 0 && out == expected, "output differs from the 16 listed pairs");
    v.require(elapsed < 1e-3, "took " + std::to_string(elapsed * 1e3) + " ms");
    if (v.ok) v.detail = "16 pairs in " + std::to_string(elapsed * 1e6) + " us";
    return v;
}

Verdict list9() {
    Verdict v;
    std::vector<std::pair<int, int>> listed{{0, 3}, {3, 3}, {3, 6}, {0, 1}, {1, 1}, {1, 2}, {1, 3}, {2, 3}, {1, 4},
                                            {3, 4}, {1, 5}, {2, 5}, {3, 5}, {4, 5}, {1, 6}, {5, 6}, {1, 7}, {2, 7},
                                            {3, 7}, {4, 7}, {5, 7}, {6, 7}, {1, 8}, {3, 8}, {5, 8}, {7, 8}};
    std::sort(listed.begin(), listed.end());
    int code = 0;
    v.require(run_cli({"list", "9"}, code) == pair_lines(listed) && code == 0, "output differs from the 26 listed pairs");
    if (v.ok) v.detail = "26 pairs";
    return v;
}

std::vector<PrimePower> prime_powers_upto(Natural limit) {
    std::vector<PrimePower> out;
    for (Natural p : numtheory::primes_below(limit + 1)) {
        unsigned k = 1;
        for (Natural value = p; value <= limit; value *= p, ++k) out.push_back({p, k});
    }
    return out;
}

Verdict prime_power_formula() {
    Verdict v;
    const auto start = Clock::now();
    const auto cases = prime_powers_upto(2048);
    for (const auto& pp : cases) {
        const Natural n = pp.value();
        const Natural naive = oracle::naive_count_within(n, [](Natural) { return true; });
        v.require(pairs::count_prime_power_formula(pp).value == naive, "mismatch at " + std::to_string(n));
    }
    const double elapsed = seconds_since(start);
    v.require(elapsed < 30, "took " + std::to_string(elapsed) + " s");
    if (v.ok) v.detail = std::to_string(cases.size()) + " prime powers in " + std::to_string(elapsed) + " s";
    return v;
}

Verdict composite_bound() {
    Verdict v;
    std::size_t checked = 0;
    for (Natural n = 4; n <= 1000; ++n) {
        if (numtheory::is_prime(n)) continue;
        ++checked;
        const Natural naive = oracle::naive_count_within(n, [](Natural) { return true; });
        v.require(naive > pairs::composite_lower_bound(n).value, "violated at " + std::to_string(n));
    }
    if (v.ok) v.detail = std::to_string(checked) + " composites, 0 violations";
    return v;
}

Verdict zero_divisor_forms() {
    Verdict v;
    auto exact_form = [&](Natural n, std::string_view prefix) {
        const Natural actual = oracle::naive_zero_divisor_pair_count(n);
        bool seen = false;
        for (const auto& r : pairs::zero_divisor_formulas(n))
            if (r.provenance.rfind(prefix, 0) == 0) {
                seen = true;
                v.require(r.kind == pairs::CountKind::Exact && r.value == actual,
                          std::string(prefix) + " wrong at " + std::to_string(n));
            }
        v.require(seen, std::string(prefix) + " missing at " + std::to_string(n));
    };
    std::size_t cases = 0;
    for (Natural p : numtheory::primes_below(98)) {
        if (p != 2) exact_form(2 * p, "2p form"), ++cases;
        if (p != 3) exact_form(3 * p, "3p form"), ++cases;
    }
    for (const auto& pp : prime_powers_upto(2048)) {
        const auto closed = pairs::count_zero_divisor_closed(pp.value());
        v.require(closed.kind == pairs::CountKind::Exact &&
                      closed.value == oracle::naive_zero_divisor_pair_count(pp.value()),
                  "p^k form wrong at " + std::to_string(pp.value()));
        ++cases;
    }
    bool pq_seen = false;
    for (const auto& r : pairs::zero_divisor_formulas(15))
        if (r.provenance.rfind("pq form", 0) == 0) pq_seen = r.value == 13;
    v.require(pq_seen && oracle::naive_zero_divisor_pair_count(15) == 14, "pq bound 13 vs 14 at n = 15");
    for (Natural n = 2; n <= 500; ++n) {
        const Natural actual = oracle::naive_zero_divisor_pair_count(n);
        v.require(pairs::zero_divisor_formulas(n).back().value <= actual, "divisor-cell sum at " + std::to_string(n));
    }
    if (v.ok) v.detail = std::to_string(cases) + " exact cases, pq 13 <= 14 at 15, divisor-cell sum n <= 500";
    return v;
}

Verdict graph_propositions() {
    Verdict v;
    const auto start = Clock::now();
    verify::Options options;
    options.filter = "graph.";
    const auto report = verify::run(options);
    for (const auto& e : report.entries)
        v.require(e.status == verify::Status::Pass, e.id + ": " + e.details);
    v.require(report.entries.size() == 8, "expected 8 graph claim families");
    const double elapsed = seconds_since(start);
    v.require(elapsed < 60, "took " + std::to_string(elapsed) + " s");
    if (v.ok) v.detail = std::to_string(report.entries.size()) + " families for n <= 200 in " + std::to_string(elapsed) + " s";
    return v;
}

Verdict clique_planarity_coloring() {
    Verdict v;
    v.require(graph::max_clique(graph::GcdGraph::build(6)).vertices.size() == 5, "omega(G_6) != 5");
    v.require(graph::max_clique(graph::GcdGraph::build(7)).vertices.size() == 4, "omega(G_7) != 4");
    for (Natural n = 1; n <= 60; ++n)
        v.require(graph::find_clique(graph::GcdGraph::build(n), 5).has_value() == (n >= 6 && n != 7),
                  "K5 at " + std::to_string(n));
    for (Natural n = 1; n <= 30; ++n)
        v.require(graph::is_planar(graph::GcdGraph::build(n)) == (n <= 7 && n != 6), "planarity at " + std::to_string(n));
    const Natural chi[] = {2, 2, 3, 3, 5, 4};
    for (Natural n = 2; n <= 7; ++n)
        v.require(graph::chromatic_number(graph::GcdGraph::build(n)).coloring.color_count == chi[n - 2],
                  "chi(G_" + std::to_string(n) + ")");
    for (Natural n = 1; n <= 12; ++n)
        v.require(graph::chromatic_number(graph::GcdGraph::build(n)).coloring.color_count == oracle::exhaustive_chromatic(n),
                  "chi vs oracle at " + std::to_string(n));
    if (v.ok) v.detail = "omega 5/4, K5 n <= 60, planarity n <= 30, chi exact n <= 12";
    return v;
}

Verdict discrepancy_ledger() {
    Verdict v;
    const auto report = verify::run({});
    v.require(!report.has_failures(), "verify reports a Fail");
    const auto* clique = report.find("clique.semiprime");
    v.require(clique && clique->status == verify::Status::Discrepancy, "semiprime clique not a Discrepancy");
    v.require(clique && clique->claimed && clique->claimed->find("n=22: 12") != std::string::npos,
              "claimed order 12 at n = 22 not recorded");
    v.require(clique && clique->observed && clique->observed->find("n=22: omega 10") != std::string::npos,
              "observed order at n = 22 not recorded");
    for (const char* id : {"erratum.zero-divisors-z8", "erratum.units-z9"}) {
        const auto* e = report.find(id);
        v.require(e && e->status == verify::Status::Noted, std::string(id) + " not Noted");
    }
    if (v.ok) v.detail = "n=22 claimed 12, observed 10; Z(Z_8) and U(Z_9) Noted";
    return v;
}

Verdict list5000() {
    Verdict v;
    int code = 0;
    const auto start = Clock::now();
    const std::string out = run_cli({"list", "5000"}, code);
    const double elapsed = seconds_since(start);
    v.require(code == 0, "exit code " + std::to_string(code));
    v.require(elapsed < 10, "took " + std::to_string(elapsed) + " s");

    std::vector<std::pair<Natural, Natural>> listed;
    std::istringstream lines(out);
    std::string line;
    while (std::getline(lines, line) && line.front() == '{') {
        const auto comma = line.find(',');
        listed.emplace_back(std::stoull(line.substr(1, comma - 1)), std::stoull(line.substr(comma + 1)));
    }
    v.require(line == "The number of gcd-pairs is " + std::to_string(listed.size()), "count line mismatch");
    v.require(std::is_sorted(listed.begin(), listed.end()), "output not sorted");

    std::mt19937_64 rng(5000);
    std::uniform_int_distribution<Natural> residue(0, 4999);
    for (int i = 0; i < 20; ++i) {
        Natural a = residue(rng), b = residue(rng);
        if (a > b) std::swap(a, b);
        const bool present = std::binary_search(listed.begin(), listed.end(), std::pair{a, b});
        v.require(present == oracle::naive_is_pair(5000, a, b), "spot check {" + std::to_string(a) + "," +
                                                                   std::to_string(b) + "}");
    }
    if (v.ok) v.detail = std::to_string(listed.size()) + " pairs in " + std::to_string(elapsed) + " s, 20 spot checks";
    return v;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
        {"nu_6 reproduction", list6},
        {"nu_9 reproduction", list9},
        {"prime-power count formula", prime_power_formula},
        {"composite strict inequality", composite_bound},
        {"zero-divisor closed forms", zero_divisor_forms},
        {"graph propositions", graph_propositions},
        {"clique, K5, planarity, colouring", clique_planarity_coloring},
        {"discrepancy ledger", discrepancy_ledger},
        {"list 5000 performance", list5000},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Verdict v;
        try {
            v = criteria[i].second();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        failures += !v.ok;
        std::cout << (v.ok ? "PASS" : "FAIL") << ' ' << (i + 1) << ' ' << criteria[i].first << ": " << v.detail
                  << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
