#include "gcdpairs/oracle.hpp"

#include <algorithm>
#include <cstdint>

#include "gcdpairs/error.hpp"

namespace gcdpairs::oracle {

namespace {

void require_bound(const char* who, Natural n, Natural bound) {
    if (n > bound) throw BoundExceeded(who, n, bound);
    if (n == 0) throw DomainError(std::string(who) + ": n must be >= 1");
}

}  // namespace

Natural naive_gcd(Natural a, Natural b) {
    while (a != 0) {
        Natural d = a;
        a = b % a;
        b = d;
    }
    return b;
}

bool naive_is_pair(Natural n, Natural a, Natural b) {
    Natural g = naive_gcd(a, b);
    return g != 0 && n % g == 0;
}

pairs::PairSet naive_enumerate(Natural n) {
    if (n == 0) throw DomainError("naive_enumerate: n must be >= 1");
    std::vector<pairs::PairSet::Entry> found;
    for (Natural a = 0; a < n; ++a)
        for (Natural b = a; b < n; ++b)
            if (naive_is_pair(n, a, b))
                found.push_back({static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)});
    return pairs::PairSet::from_entries(n, std::string(pairs::PairSet::kFullLabel), std::nullopt, std::move(found));
}

Natural naive_zero_divisor_pair_count(Natural n) {
    return naive_count_within(n, [n](Natural a) { return a != 0 && naive_gcd(a, n) != 1; });
}

AdjacencyMatrix naive_adjacency(Natural n) {
    AdjacencyMatrix adj(n, std::vector<bool>(n, false));
    for (Natural a = 0; a < n; ++a)
        for (Natural b = 0; b < n; ++b)
            adj[a][b] = a != b && naive_is_pair(n, a, b);
    return adj;
}

namespace {

void grow_clique(const AdjacencyMatrix& adj, Natural next, std::vector<Natural>& current, std::vector<Natural>& best) {
    if (next == adj.size()) {
        // Later subsets only replace on strictly larger size, so the first
        // maximum found in include-first order is the lexicographic minimum.
        if (current.size() > best.size()) best = current;
        return;
    }
    bool fits = std::all_of(current.begin(), current.end(), [&](Natural u) { return adj[u][next]; });
    if (fits) {
        current.push_back(next);
        grow_clique(adj, next + 1, current, best);
        current.pop_back();
    }
    grow_clique(adj, next + 1, current, best);
}

}  // namespace

graph::CliqueWitness exhaustive_max_clique(Natural n) {
    require_bound("exhaustive_max_clique", n, kMaxCliqueOrder);
    const auto adj = naive_adjacency(n);
    std::vector<Natural> current, best;
    grow_clique(adj, 0, current, best);
    return {best, true, true};
}

graph::CliqueWitness exhaustive_max_clique(const graph::GcdGraph& g) { return exhaustive_max_clique(g.order()); }

namespace {

bool colour_from(const AdjacencyMatrix& adj, Natural v, Natural colours, Natural opened, std::vector<Natural>& assigned) {
    if (v == adj.size()) return true;
    for (Natural c = 0; c < std::min(colours, opened + 1); ++c) {
        bool clash = false;
        for (Natural u = 0; u < v && !clash; ++u) clash = adj[u][v] && assigned[u] == c;
        if (clash) continue;
        assigned[v] = c;
        if (colour_from(adj, v + 1, colours, std::max(opened, c + 1), assigned)) return true;
    }
    return false;
}

}  // namespace

Natural exhaustive_chromatic(Natural n) {
    require_bound("exhaustive_chromatic", n, kMaxChromaticOrder);
    const auto adj = naive_adjacency(n);
    std::vector<Natural> assigned(n, 0);
    for (Natural c = 1;; ++c)
        if (colour_from(adj, 0, c, 0, assigned)) return c;
}

Natural exhaustive_chromatic(const graph::GcdGraph& g) { return exhaustive_chromatic(g.order()); }

CycleSurvey exhaustive_hamiltonian(Natural n) {
    require_bound("exhaustive_hamiltonian", n, kMaxHamiltonianOrder);
    const auto adj = naive_adjacency(n);
    CycleSurvey survey;
    const std::size_t full = std::size_t{1} << n;
    // ends[mask]: bit v set when some path from s covers exactly `mask` and stops at v.
    std::vector<std::uint32_t> ends(full);
    for (Natural s = 0; s < n; ++s) {
        std::fill(ends.begin(), ends.end(), 0);
        ends[std::size_t{1} << s] = std::uint32_t{1} << s;
        const std::size_t below_s = (std::size_t{1} << s) - 1;
        for (std::size_t mask = 0; mask < full; ++mask) {
            if (!ends[mask] || (mask & below_s)) continue;
            for (Natural v = 0; v < n; ++v) {
                if (!(ends[mask] >> v & 1U)) continue;
                for (Natural w = s + 1; w < n; ++w)
                    if (!(mask >> w & 1U) && adj[v][w]) ends[mask | (std::size_t{1} << w)] |= std::uint32_t{1} << w;
            }
        }
        for (std::size_t mask = 0; mask < full; ++mask) {
            const auto order = static_cast<Natural>(std::popcount(mask));
            if (order < 3 || order <= survey.longest_cycle_order || !ends[mask]) continue;
            for (Natural v = 0; v < n; ++v) {
                if (!(ends[mask] >> v & 1U) || !adj[v][s]) continue;
                // Walk back to recover one path s -> ... -> v over `mask`.
                graph::PathWitness cycle{{}, true};
                std::size_t m = mask;
                Natural at = v;
                while (true) {
                    cycle.vertices.push_back(at);
                    if (at == s) break;
                    const std::size_t rest = m & ~(std::size_t{1} << at);
                    Natural prev = n;
                    for (Natural u = 0; u < n && prev == n; ++u)
                        if ((ends[rest] >> u & 1U) && adj[u][at]) prev = u;
                    m = rest;
                    at = prev;
                }
                std::reverse(cycle.vertices.begin(), cycle.vertices.end());
                survey.longest_cycle_order = order;
                survey.longest_cycle = cycle;
                if (order == n) survey.hamiltonian_cycle = cycle;
                break;
            }
        }
    }
    return survey;
}

CycleSurvey exhaustive_hamiltonian(const graph::GcdGraph& g) { return exhaustive_hamiltonian(g.order()); }

Natural exhaustive_domination(Natural n) {
    require_bound("exhaustive_domination", n, kMaxDominationOrder);
    const auto adj = naive_adjacency(n);
    std::vector<std::uint32_t> closed(n);
    for (Natural v = 0; v < n; ++v) {
        closed[v] = std::uint32_t{1} << v;
        for (Natural w = 0; w < n; ++w)
            if (adj[v][w]) closed[v] |= std::uint32_t{1} << w;
    }
    const std::uint32_t everything = n == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
    Natural best = n;
    for (std::uint32_t mask = 1; mask <= everything && mask != 0; ++mask) {
        const auto size = static_cast<Natural>(std::popcount(mask));
        if (size >= best) continue;
        std::uint32_t covered = 0;
        for (Natural v = 0; v < n; ++v)
            if (mask >> v & 1U) covered |= closed[v];
        if (covered == everything) best = size;
    }
    return best;
}

Natural exhaustive_domination(const graph::GcdGraph& g) { return exhaustive_domination(g.order()); }

}  // namespace gcdpairs::oracle
