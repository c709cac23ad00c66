#include "gcdpairs/verify.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <type_traits>

#include "gcdpairs/error.hpp"
#include "gcdpairs/oracle.hpp"
#include "gcdpairs/pairs.hpp"

namespace gcdpairs::verify {

std::string_view to_string(Status s) noexcept {
    switch (s) {
        case Status::Pass: return "Pass";
        case Status::Fail: return "Fail";
        case Status::Discrepancy: return "Discrepancy";
        case Status::Noted: return "Noted";
    }
    return "?";
}

std::optional<Status> parse_status(std::string_view text) noexcept {
    for (Status s : {Status::Pass, Status::Fail, Status::Discrepancy, Status::Noted})
        if (to_string(s) == text) return s;
    return std::nullopt;
}

bool Report::has_failures() const noexcept {
    return std::any_of(entries.begin(), entries.end(), [](const Entry& e) { return e.status == Status::Fail; });
}

const Entry* Report::find(std::string_view id) const noexcept {
    for (const auto& e : entries)
        if (e.id == id) return &e;
    return nullptr;
}

namespace {

using graph::GcdGraph;
using graph::Vertex;
using pairs::PairSet;

// Collects violations; keeps the first few verbatim.
class Tally {
public:
    // `what` is a string or a callable producing one; it is only evaluated on failure.
    template <class What>
    void check(bool ok, What&& what) {
        ++checks_;
        if (ok) return;
        if (failures_.size() < 5) {
            if constexpr (std::is_invocable_v<What>)
                failures_.push_back(std::string(what()));
            else
                failures_.push_back(std::string(what));
        }
        ++failed_;
    }
    bool ok() const { return failed_ == 0; }
    std::size_t checks() const { return checks_; }
    std::string summary() const {
        if (ok()) return std::to_string(checks_) + " checks passed";
        std::string out = std::to_string(failed_) + " of " + std::to_string(checks_) + " checks failed: ";
        for (std::size_t i = 0; i < failures_.size(); ++i) out += (i ? "; " : "") + failures_[i];
        return out;
    }

private:
    std::size_t checks_ = 0;
    std::size_t failed_ = 0;
    std::vector<std::string> failures_;
};

std::string join(const std::vector<Natural>& xs) {
    std::string out = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
    return out + "}";
}

std::string pair_list(const PairSet& ps) {
    std::string out;
    for (const auto& e : ps.entries()) out += "{" + std::to_string(e.a) + "," + std::to_string(e.b) + "}";
    return out;
}

PairSet listed(Natural n, std::vector<std::pair<std::uint32_t, std::uint32_t>> raw,
               std::optional<std::vector<Natural>> subset = std::nullopt) {
    std::vector<PairSet::Entry> entries;
    for (auto [a, b] : raw) entries.push_back({std::min(a, b), std::max(a, b)});
    std::sort(entries.begin(), entries.end());
    std::string label = subset ? "listed subset" : std::string(PairSet::kFullLabel);
    return PairSet::from_entries(n, label, std::move(subset), std::move(entries));
}

Entry tally_entry(Tally&& t) {
    Entry e;
    e.status = t.ok() ? Status::Pass : Status::Fail;
    e.details = t.summary();
    return e;
}

std::string upto(Natural lo, Natural hi, const std::string& var) {
    return std::to_string(lo) + " <= " + var + " <= " + std::to_string(hi);
}

std::vector<PrimePower> prime_powers_upto(Natural limit) {
    std::vector<PrimePower> out;
    for (Natural p : numtheory::primes_below(limit + 1)) {
        unsigned k = 1;
        for (Natural v = p; v <= limit; v *= p, ++k) out.push_back({p, k});
    }
    std::sort(out.begin(), out.end(), [](auto& a, auto& b) { return a.value() < b.value(); });
    return out;
}

std::vector<Natural> units_of(Natural n) {
    std::vector<Natural> out;
    for (Natural a = 1; a < n; ++a)
        if (oracle::naive_gcd(a, n) == 1) out.push_back(a);
    return out;
}

// ---- worked examples -------------------------------------------------------

Entry example_nu6(Natural) {
    Tally t;
    auto expected = listed(6, {{0, 1}, {0, 2}, {0, 3}, {1, 1}, {1, 2}, {1, 3}, {1, 4}, {1, 5},
                               {2, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 3}, {3, 4}, {3, 5}, {4, 5}});
    t.check(pairs::enumerate(6) == expected, "enumerate(6) differs from the listed 16 pairs");
    t.check(oracle::naive_enumerate(6) == expected, "naive_enumerate(6) differs from the listed 16 pairs");
    return tally_entry(std::move(t));
}

Entry example_nu9(Natural) {
    Tally t;
    auto expected = listed(9, {{0, 3}, {3, 3}, {3, 6}, {0, 1}, {1, 1}, {1, 2}, {1, 3}, {2, 3}, {1, 4},
                               {3, 4}, {1, 5}, {2, 5}, {3, 5}, {4, 5}, {1, 6}, {5, 6}, {1, 7}, {2, 7},
                               {3, 7}, {4, 7}, {5, 7}, {6, 7}, {1, 8}, {3, 8}, {5, 8}, {7, 8}});
    t.check(expected.size() == 26, "listed nu_9 does not have 26 pairs");
    t.check(pairs::enumerate(9) == expected, "enumerate(9) differs from the listed 26 pairs");
    t.check(!pairs::is_gcd_pair(9, 4, 6) && !pairs::is_gcd_pair(9, 4, 8), "{4,6} or {4,8} accepted mod 9");
    return tally_entry(std::move(t));
}

Entry example_nu6_zero_divisors(Natural) {
    Tally t;
    auto zd = pairs::classify_elements(6).zero_divisors;
    t.check(zd == std::vector<Natural>{2, 3, 4}, "Z(Z_6) != {2,3,4}");
    auto got = pairs::restrict(pairs::enumerate(6), zd, "listed subset");
    auto expected = listed(6, {{2, 2}, {2, 3}, {2, 4}, {3, 3}, {3, 4}}, zd);
    t.check(got == expected, "nu_{6,Z} = " + pair_list(got));
    for (const auto& r : pairs::zero_divisor_formulas(6))
        if (r.kind == pairs::CountKind::Exact) t.check(r.value == 5, r.provenance + " gives " + std::to_string(r.value));
    return tally_entry(std::move(t));
}

Entry example_nu15_zero_divisors(Natural) {
    Tally t;
    auto zd = pairs::classify_elements(15).zero_divisors;
    t.check(zd == std::vector<Natural>{3, 5, 6, 9, 10, 12}, "Z(Z_15) = " + join(zd));
    auto got = pairs::restrict(pairs::enumerate(15), zd, "listed subset");
    auto expected = listed(15,
                           {{3, 3}, {3, 5}, {3, 6}, {3, 9}, {3, 10}, {3, 12}, {5, 5}, {5, 6},
                            {5, 9}, {5, 10}, {5, 12}, {6, 9}, {9, 10}, {9, 12}},
                           zd);
    t.check(got == expected, "nu_{15,Z} = " + pair_list(got));
    t.check(pairs::count_prime_power_formula({3, 1}).value == 3, "|nu_3| != 3");
    t.check(pairs::count_prime_power_formula({5, 1}).value == 7, "|nu_5| != 7");
    bool saw_pq = false;
    for (const auto& r : pairs::zero_divisor_formulas(15)) {
        if (r.provenance.rfind("pq form", 0) != 0) continue;
        saw_pq = true;
        t.check(r.value == 13 && r.kind == pairs::CountKind::LowerBound, "pq bound at 15 is " + std::to_string(r.value));
        t.check(got.size() == 14 && got.size() >= r.value, "14 >= 13 fails");
    }
    t.check(saw_pq, "no pq formula offered for 15");
    return tally_entry(std::move(t));
}

Entry example_nu8_zero_divisors(Natural) {
    Tally t;
    auto zd = pairs::classify_elements(8).zero_divisors;
    auto got = pairs::restrict(pairs::enumerate(8), zd, "listed subset");
    t.check(got == listed(8, {{2, 2}, {2, 4}, {2, 6}, {4, 4}, {4, 6}}, zd), "nu_{8,Z} = " + pair_list(got));
    t.check(pairs::enumerate(4) == listed(4, {{0, 1}, {0, 2}, {1, 1}, {1, 2}, {1, 3}, {2, 2}, {2, 3}}),
            "nu_4 differs from the listed 7 pairs");
    auto closed = pairs::count_zero_divisor_closed(8);
    t.check(closed.value == 7 - 3 + 1 && closed.kind == pairs::CountKind::Exact, "closed form for 8 is not Exact 5");
    return tally_entry(std::move(t));
}

Entry example_partition6(Natural) {
    Tally t;
    auto part = pairs::zero_divisor_partition(6);
    t.check(part.cells.size() == 2 && part.cells.at(2) == std::vector<Natural>{2, 4} &&
                part.cells.at(3) == std::vector<Natural>{3},
            "partition of Z(Z_6) is not S'_2={2,4}, S'_3={3}");
    t.check(pairs::is_gcd_pair(6, 2, 3) && pairs::is_gcd_pair(6, 3, 4), "cross-cell pairs {2,3}, {3,4} missing");
    return tally_entry(std::move(t));
}

// ---- pair properties -------------------------------------------------------

Entry divisor_criterion(Natural hi) {
    Tally t;
    for (Natural n = 1; n <= hi; ++n)
        for (Natural a = 1; a < n; ++a) {
            if (n % a != 0) continue;
            for (Natural b = 0; b < n; ++b)
                t.check(oracle::naive_is_pair(n, a, b) && pairs::is_gcd_pair(n, std::int64_t(a), std::int64_t(b)),
                        [&] { return "{" + std::to_string(a) + "," + std::to_string(b) + "} mod " + std::to_string(n); });
        }
    return tally_entry(std::move(t));
}

Entry unit_coprimality(Natural hi) {
    Tally t;
    for (Natural n = 2; n <= hi; ++n)
        for (Natural a : units_of(n))
            for (Natural b = 0; b < n; ++b)
                if (pairs::is_gcd_pair(n, std::int64_t(a), std::int64_t(b)))
                    t.check(oracle::naive_gcd(a, b) == 1, [&] {
                        return "{" + std::to_string(a) + "," + std::to_string(b) + "} mod " + std::to_string(n);
                    });
    return tally_entry(std::move(t));
}

Entry enumerate_vs_naive(Natural hi) {
    Tally t;
    for (Natural n = 1; n <= hi; ++n) {
        t.check(pairs::enumerate(n) == oracle::naive_enumerate(n), "n = " + std::to_string(n));
        t.check(pairs::count(n) == pairs::enumerate(n).size(), "count(" + std::to_string(n) + ")");
    }
    return tally_entry(std::move(t));
}

// ---- counting --------------------------------------------------------------

Entry prime_power_count(Natural hi) {
    Tally t;
    for (const auto& pp : prime_powers_upto(hi)) {
        const Natural n = pp.value();
        const Natural naive = oracle::naive_count_within(n, [](Natural) { return true; });
        const Natural formula = pairs::count_prime_power_formula(pp).value;
        t.check(formula == naive, "p^k = " + std::to_string(n) + ": formula " + std::to_string(formula) +
                                      ", brute force " + std::to_string(naive));
    }
    Entry e = tally_entry(std::move(t));
    e.details = std::to_string(prime_powers_upto(hi).size()) + " prime powers; " + e.details;
    return e;
}

Entry composite_bound(Natural hi) {
    Tally t;
    for (Natural n = 4; n <= hi; ++n) {
        if (numtheory::is_prime(n)) continue;
        const Natural bound = pairs::composite_lower_bound(n).value;
        const Natural actual = pairs::count(n);
        t.check(actual > bound, "n = " + std::to_string(n) + ": |nu_n| = " + std::to_string(actual) +
                                    " vs bound " + std::to_string(bound));
    }
    return tally_entry(std::move(t));
}

Entry partition_property(Natural hi) {
    Tally t;
    for (Natural n = 2; n <= hi; ++n) {
        auto part = pairs::zero_divisor_partition(n);
        std::vector<Natural> seen;
        for (const auto& [d, cell] : part.cells) {
            for (Natural x : cell) t.check(oracle::naive_gcd(x, n) == d, [&] { return "element " + std::to_string(x); });
            seen.insert(seen.end(), cell.begin(), cell.end());
        }
        std::sort(seen.begin(), seen.end());
        const bool disjoint = std::adjacent_find(seen.begin(), seen.end()) == seen.end();
        std::vector<Natural> zd;
        for (Natural a = 1; a < n; ++a)
            if (oracle::naive_gcd(a, n) != 1) zd.push_back(a);
        t.check(disjoint && seen == zd, "n = " + std::to_string(n));
    }
    return tally_entry(std::move(t));
}

Entry cell_bijection(Natural hi) {
    Tally t;
    for (Natural n = 4; n <= hi; ++n)
        for (Natural d : numtheory::nontrivial_divisors(n)) {
            if (d == n) continue;
            auto bij = pairs::sprime_unit_bijection(n, d);
            const Natural m = n / d;
            const Natural expected = oracle::naive_count_within(
                m, [m](Natural r) { return r != 0 && oracle::naive_gcd(r, m) == 1; });
            t.check(bij.complete && bij.matches.size() == expected,
                    "n = " + std::to_string(n) + ", d = " + std::to_string(d));
        }
    return tally_entry(std::move(t));
}

Entry divisor_cell_sum(Natural hi) {
    Tally t;
    for (Natural n = 4; n <= hi; ++n) {
        if (numtheory::is_prime(n)) continue;
        const Natural actual = oracle::naive_zero_divisor_pair_count(n);
        Natural sum = 0;
        for (Natural d : numtheory::nontrivial_divisors(n)) {
            if (d == n) continue;
            const Natural m = n / d;
            sum += oracle::naive_count_within(m, [m](Natural r) { return r != 0 && oracle::naive_gcd(r, m) == 1; });
        }
        t.check(actual >= sum, "n = " + std::to_string(n) + ": " + std::to_string(actual) + " < " + std::to_string(sum));
        const auto formulas = pairs::zero_divisor_formulas(n);
        t.check(formulas.back().value == sum, "divisor-cell sum mismatch at n = " + std::to_string(n));
    }
    return tally_entry(std::move(t));
}

// Checks one zero-divisor closed form against brute force for every n in `moduli`.
Entry zero_divisor_form(std::string_view prefix, const std::vector<Natural>& moduli) {
    Tally t;
    for (Natural n : moduli) {
        const Natural actual = oracle::naive_zero_divisor_pair_count(n);
        bool found = false;
        for (const auto& r : pairs::zero_divisor_formulas(n)) {
            if (r.provenance.rfind(prefix, 0) != 0) continue;
            found = true;
            const bool ok = r.kind == pairs::CountKind::Exact ? r.value == actual : r.value <= actual;
            t.check(ok, "n = " + std::to_string(n) + ": " + std::string(to_string(r.kind)) + " " +
                            std::to_string(r.value) + " vs brute force " + std::to_string(actual));
        }
        t.check(found, "no '" + std::string(prefix) + "' formula for n = " + std::to_string(n));
    }
    return tally_entry(std::move(t));
}

Entry pq_bound(Natural hi) {
    std::vector<Natural> moduli;
    const auto primes = numtheory::primes_below(hi / 2 + 1);
    for (std::size_t i = 0; i < primes.size(); ++i)
        for (std::size_t j = i + 1; j < primes.size() && primes[i] * primes[j] <= hi; ++j)
            moduli.push_back(primes[i] * primes[j]);
    std::sort(moduli.begin(), moduli.end());
    return zero_divisor_form("pq form", moduli);
}

Entry two_p(Natural hi) {
    std::vector<Natural> moduli;
    for (Natural p : numtheory::primes_below(hi + 1))
        if (p != 2) moduli.push_back(2 * p);
    return zero_divisor_form("2p form", moduli);
}

Entry three_p(Natural hi) {
    std::vector<Natural> moduli;
    for (Natural p : numtheory::primes_below(hi + 1))
        if (p != 3) moduli.push_back(3 * p);
    return zero_divisor_form("3p form", moduli);
}

Entry prime_power_zero_divisors(Natural hi) {
    Tally t;
    for (const auto& pp : prime_powers_upto(hi)) {
        const Natural n = pp.value();
        const auto closed = pairs::count_zero_divisor_closed(n);
        const Natural actual = oracle::naive_zero_divisor_pair_count(n);
        t.check(closed.kind == pairs::CountKind::Exact && closed.value == actual,
                "n = " + std::to_string(n) + ": " + std::to_string(closed.value) + " vs " + std::to_string(actual));
    }
    return tally_entry(std::move(t));
}

// ---- graph propositions ----------------------------------------------------

Entry embedding(Natural hi) {
    Tally t;
    for (Natural n = 1; n <= hi; ++n)
        for (Natural m : numtheory::divisors(n)) {
            auto adj_m = oracle::naive_adjacency(m);
            auto adj_n = oracle::naive_adjacency(n);
            bool inside = true;
            for (Natural a = 0; a < m; ++a)
                for (Natural b = 0; b < m; ++b) inside = inside && (!adj_m[a][b] || adj_n[a][b]);
            t.check(inside && graph::embedding_check(m, n).embedded,
                    "G_" + std::to_string(m) + " in G_" + std::to_string(n));
        }
    return tally_entry(std::move(t));
}

Entry star(Natural hi) {
    Tally t;
    for (Natural n = 2; n <= hi; ++n) {
        auto adj = oracle::naive_adjacency(n);
        auto s = graph::star_subgraph(GcdGraph::build(n));
        bool ok = s.center == 1 && s.leaves.size() == n - 1;
        for (Vertex v : s.leaves) ok = ok && adj[1][v];
        t.check(ok, "n = " + std::to_string(n));
    }
    return tally_entry(std::move(t));
}

Entry domination(Natural hi) {
    Tally t;
    for (Natural n = 2; n <= hi; ++n) {
        auto g = GcdGraph::build(n);
        auto dom = graph::domination_number(g);
        const std::vector<Vertex> centre{1};
        t.check(dom.gamma == 1 && graph::dominates(g, dom.witness) && graph::dominates(g, centre),
                "n = " + std::to_string(n));
        if (n <= oracle::kMaxDominationOrder)
            t.check(oracle::exhaustive_domination(n) == 1, "oracle gamma at n = " + std::to_string(n));
    }
    return tally_entry(std::move(t));
}

Entry connected(Natural hi) {
    Tally t;
    for (Natural n = 1; n <= hi; ++n) {
        auto adj = oracle::naive_adjacency(n);
        // Oracle reachability by repeated relaxation.
        std::vector<bool> reached(n, false);
        reached[0] = true;
        for (bool grew = true; grew;) {
            grew = false;
            for (Natural a = 0; a < n; ++a)
                for (Natural b = 0; b < n; ++b)
                    if (reached[a] && adj[a][b] && !reached[b]) reached[b] = grew = true;
        }
        const bool all = std::all_of(reached.begin(), reached.end(), [](bool r) { return r; });
        t.check(all && graph::is_connected(GcdGraph::build(n)), "n = " + std::to_string(n));
    }
    return tally_entry(std::move(t));
}

Entry triangle(Natural hi) {
    Tally t;
    for (Natural n = 1; n <= hi; ++n) {
        auto g = GcdGraph::build(n);
        auto tri = graph::has_triangle(g);
        t.check(tri.has_value() == (n >= 4), "n = " + std::to_string(n));
        if (tri) t.check(tri->valid_in(g), "invalid triangle at n = " + std::to_string(n));
        for (Natural a = 2; n >= 4 && a + 1 <= n - 1; ++a)
            t.check(graph::PathWitness{{1, a, a + 1}, true}.valid_in(g), [&] {
                return "(1," + std::to_string(a) + "," + std::to_string(a + 1) + ") at n = " + std::to_string(n);
            });
    }
    return tally_entry(std::move(t));
}

Entry traceable(Natural hi) {
    Tally t;
    for (Natural n = 2; n <= hi; ++n) {
        auto adj = oracle::naive_adjacency(n);
        bool ok = true;
        for (Natural a = 0; a + 1 < n; ++a) ok = ok && adj[a][a + 1];
        t.check(ok && graph::hamiltonian_path(GcdGraph::build(n)).vertices.size() == n, "n = " + std::to_string(n));
    }
    return tally_entry(std::move(t));
}

Entry hamiltonian_even(Natural hi) {
    Tally t;
    for (Natural n = 4; n <= hi; n += 2) {
        auto g = GcdGraph::build(n);
        auto hc = graph::hamiltonian_cycle(g);
        t.check(hc.cycle && hc.cycle->valid_in(g) && hc.cycle->vertices.size() == n, "n = " + std::to_string(n));
        if (n <= oracle::kMaxHamiltonianOrder)
            t.check(oracle::exhaustive_hamiltonian(n).hamiltonian_cycle.has_value(),
                    "oracle finds no Hamiltonian cycle at n = " + std::to_string(n));
    }
    return tally_entry(std::move(t));
}

Entry odd_cycles(Natural hi) {
    Tally t;
    for (Natural n = 3; n <= hi; n += 2) {
        auto g = GcdGraph::build(n);
        auto hc = graph::hamiltonian_cycle(g);
        t.check(!hc.cycle && hc.independent_certificate.size() == (n + 1) / 2 &&
                    graph::is_independent(g, hc.independent_certificate),
                "certificate at n = " + std::to_string(n));
        if (n >= 5) t.check(graph::longest_cycle_constructive(g).vertices.size() == n - 1, "n = " + std::to_string(n));
        if (n <= oracle::kMaxHamiltonianOrder) {
            auto survey = oracle::exhaustive_hamiltonian(n);
            t.check(!survey.hamiltonian_cycle, "oracle Hamiltonian cycle at odd n = " + std::to_string(n));
            if (n >= 5)
                t.check(survey.longest_cycle_order == n - 1, "oracle longest cycle " +
                                                                 std::to_string(survey.longest_cycle_order) +
                                                                 " at n = " + std::to_string(n));
        }
    }
    Entry e = tally_entry(std::move(t));
    e.details += "; oracle cycle search for n <= " + std::to_string(std::min(hi, oracle::kMaxHamiltonianOrder));
    return e;
}

// ---- cliques, planarity, colouring ------------------------------------------

Natural observed_clique_number(Natural n, const Options& opt, Tally& t) {
    auto fast = graph::max_clique(GcdGraph::build(n), std::max(opt.bounds.clique, n));
    if (n <= oracle::kMaxCliqueOrder) {
        auto slow = oracle::exhaustive_max_clique(n);
        t.check(slow.vertices == fast.vertices, "max_clique disagrees with the oracle at n = " + std::to_string(n));
    }
    return fast.vertices.size();
}

Entry semiprime_clique(Natural hi, const Options& opt) {
    static const std::vector<Natural> kModuli{6, 10, 14, 15, 21, 22, 26, 33};
    Tally t;
    std::string claimed, observed, details;
    bool discrepancy = false;
    for (Natural n : kModuli) {
        if (n > hi) continue;
        auto c = graph::clique_construction(n);
        auto g = GcdGraph::build(n);
        t.check(c.witness.is_clique_in(g) && c.witness.maximal, "construction at n = " + std::to_string(n));
        const Natural omega = observed_clique_number(n, opt, t);
        t.check(omega >= c.valid_subset.size(), "omega below valid construction at n = " + std::to_string(n));
        const bool holds = c.claimed_is_clique && c.claimed_order <= omega;
        discrepancy = discrepancy || !holds;
        claimed += (claimed.empty() ? "" : ", ") + std::string("n=") + std::to_string(n) + ": " +
                   std::to_string(c.claimed_order);
        observed += (observed.empty() ? "" : ", ") + std::string("n=") + std::to_string(n) + ": omega " +
                    std::to_string(omega) + ", valid construction " + std::to_string(c.valid_subset.size());
        if (!holds)
            details += "n=" + std::to_string(n) + " claimed set " + join(c.claimed) + " is not a clique; ";
    }
    Entry e;
    if (!t.ok()) {
        e.status = Status::Fail;
        e.details = t.summary();
    } else {
        e.status = discrepancy ? Status::Discrepancy : Status::Pass;
        e.details = discrepancy ? details + "powers p^i, p^j with 2 <= i < j share gcd p^i, which does not divide pq"
                                : t.summary();
    }
    e.claimed = claimed;
    e.observed = observed;
    return e;
}

Entry prime_power_clique(Natural hi, const Options& opt) {
    Tally t;
    for (const auto& pp : prime_powers_upto(hi)) {
        const Natural n = pp.value();
        auto c = graph::clique_construction(n);
        auto g = GcdGraph::build(n);
        const auto primes = numtheory::primes_below(n);
        const Natural m = static_cast<Natural>(std::count_if(primes.begin(), primes.end(), [&](Natural x) { return x != pp.p; }));
        const Natural expected = (pp.p == 2 && pp.k == 1) ? 2 : m + pp.k;
        t.check(c.claimed_is_clique && c.extension.empty() && c.witness.maximal &&
                    c.witness.vertices.size() == expected && c.witness.is_clique_in(g),
                "n = " + std::to_string(n) + ": construction of order " + std::to_string(c.witness.vertices.size()) +
                    ", expected " + std::to_string(expected));
        t.check(observed_clique_number(n, opt, t) >= expected, "omega below construction at n = " + std::to_string(n));
    }
    return tally_entry(std::move(t));
}

Entry primes_clique(Natural hi, const Options& opt) {
    Tally t;
    for (Natural n = 2; n <= hi; ++n) {
        auto g = GcdGraph::build(n);
        auto primes = numtheory::primes_below(n);
        graph::CliqueWitness base{{1}, false, false};
        base.vertices.insert(base.vertices.end(), primes.begin(), primes.end());
        std::sort(base.vertices.begin(), base.vertices.end());
        t.check(base.is_clique_in(g), "{1} + primes not a clique at n = " + std::to_string(n));
        t.check(observed_clique_number(n, opt, t) >= primes.size() + 1, "omega < m + 1 at n = " + std::to_string(n));
        auto c = graph::clique_construction(n);
        t.check(c.witness.is_clique_in(g) && c.witness.maximal, "construction not maximal at n = " + std::to_string(n));
    }
    return tally_entry(std::move(t));
}

Entry k5(Natural hi) {
    Tally t;
    for (Natural n = 1; n <= hi; ++n) {
        auto g = GcdGraph::build(n);
        const bool present = graph::find_clique(g, 5).has_value();
        t.check(present == (n >= 6 && n != 7), "K5 presence wrong at n = " + std::to_string(n));
        if (n == 6) t.check(graph::CliqueWitness{{1, 2, 3, 4, 5}}.is_clique_in(g), "{1,2,3,4,5} at n = 6");
        if (n >= 8) t.check(graph::CliqueWitness{{1, 2, 3, 5, 7}}.is_clique_in(g), "{1,2,3,5,7} at n = " + std::to_string(n));
    }
    return tally_entry(std::move(t));
}

Entry max_clique_vs_oracle(Natural hi, const Options& opt) {
    Tally t;
    for (Natural n = 1; n <= hi; ++n) observed_clique_number(n, opt, t);
    return tally_entry(std::move(t));
}

Entry planarity(Natural hi) {
    Tally t;
    for (Natural n = 1; n <= hi; ++n) {
        auto g = GcdGraph::build(n);
        const bool planar = graph::is_planar(g);
        t.check(planar == (n <= 7 && n != 6), "planarity wrong at n = " + std::to_string(n));
        if (n >= 3 && g.simple_edges().size() > 3 * n - 6) t.check(!planar, "edge bound at n = " + std::to_string(n));
    }
    return tally_entry(std::move(t));
}

Entry coloring_small(Natural) {
    Tally t;
    const Natural expected[] = {2, 2, 3, 3, 5, 4};
    for (Natural n = 2; n <= 7; ++n) {
        const auto got = graph::chromatic_number(GcdGraph::build(n)).coloring.color_count;
        t.check(got == expected[n - 2], "chi(G_" + std::to_string(n) + ") = " + std::to_string(got));
        t.check(oracle::exhaustive_chromatic(n) == expected[n - 2], "oracle chi at n = " + std::to_string(n));
    }
    return tally_entry(std::move(t));
}

Entry coloring_vs_oracle(Natural hi, const Options& opt) {
    Tally t;
    for (Natural n = 1; n <= hi; ++n) {
        auto g = GcdGraph::build(n);
        auto exact = graph::chromatic_number(g, std::max(opt.bounds.chromatic, n));
        t.check(exact.exact && exact.coloring.proper_in(g), "invalid colouring at n = " + std::to_string(n));
        t.check(exact.coloring.color_count == oracle::exhaustive_chromatic(n), "chi mismatch at n = " + std::to_string(n));
        t.check(exact.coloring.color_count >= graph::max_clique(g, n).vertices.size(), "chi < omega at n = " + std::to_string(n));
    }
    return tally_entry(std::move(t));
}

Entry coloring_bounds(Natural hi, const Options& opt) {
    Tally t;
    std::string claimed, observed, details;
    for (Natural n = 2; n <= hi; ++n) {
        auto g = GcdGraph::build(n);
        const Natural chi = graph::chromatic_number(g, std::max(opt.bounds.chromatic, n)).coloring.color_count;
        const auto primes = numtheory::primes_below(n);
        t.check(chi >= primes.size() + 1, "chi < m + 1 at n = " + std::to_string(n));
        auto c = graph::clique_construction(n);
        t.check(chi >= c.witness.vertices.size(), "chi below a valid clique at n = " + std::to_string(n));
        if (c.family == graph::CliqueConstruction::Family::SemiPrime && chi < c.claimed_order) {
            claimed += (claimed.empty() ? "" : ", ") + std::string("n=") + std::to_string(n) + ": chi >= " +
                       std::to_string(c.claimed_order);
            observed += (observed.empty() ? "" : ", ") + std::string("n=") + std::to_string(n) + ": chi = " +
                        std::to_string(chi);
        }
    }
    Entry e = tally_entry(std::move(t));
    if (e.status == Status::Pass && !claimed.empty()) {
        e.status = Status::Discrepancy;
        e.details = "the semiprime bound inherits the invalid clique order; prime-power and prime bounds hold";
        e.claimed = claimed;
        e.observed = observed;
    }
    return e;
}

// ---- errata ------------------------------------------------------------------

Entry noted(std::string details, std::optional<std::string> claimed = std::nullopt,
            std::optional<std::string> observed = std::nullopt) {
    Entry e;
    e.status = Status::Noted;
    e.details = std::move(details);
    e.claimed = std::move(claimed);
    e.observed = std::move(observed);
    return e;
}

Entry erratum_units9(Natural) {
    auto units = pairs::classify_elements(9).units;
    return noted("0 is listed as a unit of Z_9; units are the residues in [1, n) coprime to n",
                 "U(Z_9) = {0,1,2,4,5,7,8}", "U(Z_9) = " + join(units));
}

Entry erratum_zero_divisors8(Natural) {
    auto zd = pairs::classify_elements(8).zero_divisors;
    return noted("3 is a unit mod 8; the accompanying pair list uses 4, consistent with the computed set",
                 "Z(Z_8) = {2,3,6}", "Z(Z_8) = " + join(zd));
}

Entry erratum_unit_proof(Natural) {
    return noted("the contrapositive argument writes gcd(a,b) | n where it needs gcd(a,b) does not divide n; "
                 "the statement itself is checked by pairs.unit-coprimality");
}

Entry erratum_listings(Natural) {
    return noted("the conditional lines of the three program listings are truncated; the find, count and check "
                 "semantics are rebuilt from the definition and cross-checked by pairs.enumerate-vs-naive");
}

Entry erratum_cycle_n3(Natural) {
    return noted("for odd n the longest cycle has order n - 1, which at n = 3 would be a 2-cycle; G_3 has no "
                 "cycle, so the claim is checked for odd n >= 5 only");
}

struct Claim {
    std::string id;
    std::string statement;
    Natural lo;           // smallest value in range; 0 for fixed instances
    Natural default_hi;   // 0 for fixed instances
    Natural hard_cap;     // 0 when uncapped
    std::function<Entry(Natural, const Options&)> run;
    std::string variable = "n";  // what the range bounds
};

template <class F>
std::function<Entry(Natural, const Options&)> plain(F f) {
    return [f](Natural hi, const Options&) { return f(hi); };
}

std::vector<Claim> registry() {
    std::vector<Claim> c;
    c.push_back({"example.nu6", "nu_6 consists of the 16 listed pairs", 0, 0, 0, plain(example_nu6)});
    c.push_back({"example.nu9", "nu_9 consists of the 26 listed pairs; {4,6} and {4,8} are not gcd-pairs", 0, 0, 0,
                 plain(example_nu9)});
    c.push_back({"example.partition6", "Z(Z_6) splits into S'_2 = {2,4} and S'_3 = {3}", 0, 0, 0,
                 plain(example_partition6)});
    c.push_back({"example.nu6-zero-divisors", "nu_{6,Z(Z_6)} has the 5 listed pairs", 0, 0, 0,
                 plain(example_nu6_zero_divisors)});
    c.push_back({"example.nu15-zero-divisors", "nu_{15,Z(Z_15)} has the 14 listed pairs and 14 >= 3 + 7 + 3 + 5 - 5",
                 0, 0, 0, plain(example_nu15_zero_divisors)});
    c.push_back({"example.nu8-zero-divisors", "nu_{8,Z(Z_8)} has 5 pairs = |nu_4| - 3 + 1", 0, 0, 0,
                 plain(example_nu8_zero_divisors)});
    c.push_back({"pairs.divisor-criterion", "if a | n then {a, b} is a gcd-pair for every b", 1, 500, 0,
                 plain(divisor_criterion)});
    c.push_back({"pairs.unit-coprimality", "if gcd(a, n) = 1 and {a, b} is a gcd-pair then gcd(a, b) = 1", 2, 500, 0,
                 plain(unit_coprimality)});
    c.push_back({"pairs.enumerate-vs-naive", "the divisor-shortcut enumeration equals the definition", 1, 500, 0,
                 plain(enumerate_vs_naive)});
    c.push_back({"count.prime-power", "|nu_{p^k}| = k + sum_{i=1..k} sum_{j=1..p^i-1} phi(j)", 2, 2048, 0,
                 plain(prime_power_count)});
    c.push_back({"count.composite-bound", "|nu_n| > 1 + sum_{k<n} phi(k) for composite n", 4, 1000, 0,
                 plain(composite_bound)});
    c.push_back({"partition.zero-divisors", "the cells S'_d partition Z(Z_n)", 2, 500, 0, plain(partition_property)});
    c.push_back({"partition.cell-bijection", "{rd, sd} in nu_{n,S'_d} iff {r, s} in nu_{n/d,U(Z_{n/d})}", 4, 200, 0,
                 plain(cell_bijection)});
    c.push_back({"count.divisor-cell-sum", "|nu_{n,Z(Z_n)}| >= sum_{d in D_n} |nu_{n/d,U(Z_{n/d})}|", 4, 500, 0,
                 plain(divisor_cell_sum)});
    c.push_back({"count.pq-bound", "|nu_{pq,Z}| >= |nu_p| + |nu_q| + p + q - 5", 6, 1000, 0, plain(pq_bound)});
    c.push_back({"count.2p", "|nu_{2p,Z}| = |nu_p| + p - 1 for odd primes p", 3, 97, 0, plain(two_p), "p"});
    c.push_back({"count.3p", "|nu_{3p,Z}| = |nu_p| + p + ceil((p-1)/2) for primes p != 3", 2, 97, 0, plain(three_p), "p"});
    c.push_back({"count.prime-power-zero-divisors", "|nu_{p^k,Z}| = |nu_{p^(k-1)}| - k + 1, and 0 for k = 1", 2, 2048,
                 0, plain(prime_power_zero_divisors)});
    c.push_back({"graph.embedding", "G_m is a subgraph of G_n whenever m | n", 1, 200, 0, plain(embedding)});
    c.push_back({"graph.star", "G_n contains the star centred at 1 on all n vertices", 2, 200, 0, plain(star)});
    c.push_back({"graph.domination", "the domination number of G_n is 1", 2, 200, 0, plain(domination)});
    c.push_back({"graph.connected", "G_n is connected", 1, 200, 0, plain(connected)});
    c.push_back({"graph.triangle", "G_n has a triangle iff n >= 4; (1, a, a+1) is one", 1, 200, 0, plain(triangle)});
    c.push_back({"graph.traceable", "(0, 1, ..., n-1) is a Hamiltonian path", 2, 200, 0, plain(traceable)});
    c.push_back({"graph.hamiltonian-even", "for even n > 2, (0, 2, 3, ..., n-1, 1) is a Hamiltonian cycle", 4, 200, 0,
                 plain(hamiltonian_even)});
    c.push_back({"graph.odd-cycles", "for odd n there is no Hamiltonian cycle and the longest cycle has order n - 1", 3,
                 200, 0, plain(odd_cycles)});
    c.push_back({"clique.semiprime", "G_pq has a maximal clique {1, primes < pq, p, ..., p^k, q} of order m + k + 2", 6,
                 33, 0, semiprime_clique});
    c.push_back({"clique.prime-power", "G_{p^k} has a maximal clique of order m + k (k + 1 when p^k = 2)", 2, 40, 0,
                 prime_power_clique});
    c.push_back({"clique.primes", "G_n contains a clique of order m + 1, m = #primes below n", 2, 40, 0, primes_clique});
    c.push_back({"clique.exact-vs-oracle", "branch-and-bound maximum clique equals exhaustive search", 1,
                 oracle::kMaxCliqueOrder, oracle::kMaxCliqueOrder, max_clique_vs_oracle});
    c.push_back({"clique.k5", "G_n contains K5 iff n >= 6 and n != 7", 1, 60, 0, plain(k5)});
    c.push_back({"planarity", "G_n is planar iff n <= 7 and n != 6", 1, 30, 0, plain(planarity)});
    c.push_back({"coloring.small", "chi(G_2..G_7) = 2, 2, 3, 3, 5, 4", 0, 0, 0, plain(coloring_small)});
    c.push_back({"coloring.exact-vs-oracle", "exact chromatic number equals exhaustive search", 1,
                 oracle::kMaxChromaticOrder, oracle::kMaxChromaticOrder, coloring_vs_oracle});
    c.push_back({"coloring.clique-bounds", "chi(G_n) is at least each clique construction's order", 2, 16, 0,
                 coloring_bounds});
    c.push_back({"erratum.units-z9", "units of Z_9 as printed", 0, 0, 0, plain(erratum_units9)});
    c.push_back({"erratum.zero-divisors-z8", "zero divisors of Z_8 as printed", 0, 0, 0, plain(erratum_zero_divisors8)});
    c.push_back({"erratum.unit-theorem-proof", "proof of the unit coprimality property", 0, 0, 0,
                 plain(erratum_unit_proof)});
    c.push_back({"erratum.listings", "program listings for find, count and check", 0, 0, 0, plain(erratum_listings)});
    c.push_back({"erratum.odd-cycle-n3", "longest cycle of order n - 1 at n = 3", 0, 0, 0, plain(erratum_cycle_n3)});
    return c;
}

Entry run_claim(const Claim& claim, const Options& options) {
    Natural hi = claim.default_hi;
    if (options.max_n != 0 && hi != 0) hi = options.max_n;
    if (claim.hard_cap != 0) hi = std::min(hi, claim.hard_cap);
    Entry e;
    try {
        e = claim.run(hi, options);
    } catch (const std::exception& ex) {
        e = Entry{};
        e.status = Status::Fail;
        e.details = std::string("exception: ") + ex.what();
    }
    e.id = claim.id;
    e.statement = claim.statement;
    e.range = claim.default_hi == 0 ? "fixed instance" : upto(claim.lo, hi, claim.variable);
    return e;
}

}  // namespace

std::vector<std::string> claim_ids() {
    std::vector<std::string> ids;
    for (const auto& c : registry()) ids.push_back(c.id);
    return ids;
}

Report run(const Options& options) {
    const auto claims = registry();
    std::vector<const Claim*> selected;
    for (const auto& c : claims)
        if (options.filter.empty() || c.id.find(options.filter) != std::string::npos) selected.push_back(&c);

    Report report;
    if (options.parallel) {
        std::vector<std::future<Entry>> pending;
        for (const Claim* c : selected)
            pending.push_back(std::async(std::launch::async, [c, &options] { return run_claim(*c, options); }));
        for (auto& f : pending) report.entries.push_back(f.get());
    } else {
        for (const Claim* c : selected) report.entries.push_back(run_claim(*c, options));
    }
    return report;
}

}  // namespace gcdpairs::verify
