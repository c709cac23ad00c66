#pragma once

#include <optional>
#include <vector>

#include "gcdpairs/graph.hpp"
#include "gcdpairs/pairs.hpp"

/// Brute-force reference implementations.
///
/// Nothing here calls the optimized code paths: the oracle has its own gcd
/// loop and builds its own adjacency matrix from the definition, so an
/// agreement between the two is evidence rather than tautology. Functions
/// taking a GcdGraph only read its order.
namespace gcdpairs::oracle {

inline constexpr Natural kMaxCliqueOrder = 26;
inline constexpr Natural kMaxChromaticOrder = 12;
inline constexpr Natural kMaxHamiltonianOrder = 15;
inline constexpr Natural kMaxDominationOrder = 20;

/// Euclid by repeated remainder, as in the textbook loop.
Natural naive_gcd(Natural a, Natural b);

/// gcd(a, b) | n with gcd(0, 0) = 0 never dividing.
bool naive_is_pair(Natural n, Natural a, Natural b);

/// Double loop over 0 <= a <= b < n keeping the gcd-pairs. No shortcuts.
pairs::PairSet naive_enumerate(Natural n);

/// |nu_{n,A}| where A is given as a membership predicate over [0, n).
template <class InSubset>
Natural naive_count_within(Natural n, InSubset&& in_subset) {
    Natural total = 0;
    for (Natural a = 0; a < n; ++a)
        for (Natural b = a; b < n; ++b)
            if (in_subset(a) && in_subset(b) && naive_is_pair(n, a, b)) ++total;
    return total;
}

/// |nu_{n,Z(Z_n)}| by definition: zero divisors are the nonzero a with gcd(a, n) > 1.
Natural naive_zero_divisor_pair_count(Natural n);

using AdjacencyMatrix = std::vector<std::vector<bool>>;

/// Simple-edge adjacency of G_n straight from the definition.
AdjacencyMatrix naive_adjacency(Natural n);

/// Maximum clique by plain include/exclude recursion; the lexicographically
/// smallest maximum clique. n <= kMaxCliqueOrder.
graph::CliqueWitness exhaustive_max_clique(Natural n);
graph::CliqueWitness exhaustive_max_clique(const graph::GcdGraph& g);

/// Smallest c admitting a proper c-colouring, by exhaustive assignment where a
/// vertex may only open the next unused colour. n <= kMaxChromaticOrder.
Natural exhaustive_chromatic(Natural n);
Natural exhaustive_chromatic(const graph::GcdGraph& g);

struct CycleSurvey {
    std::optional<graph::PathWitness> hamiltonian_cycle;
    /// Order of the longest cycle (>= 3 vertices), 0 when there is none.
    Natural longest_cycle_order = 0;
    std::optional<graph::PathWitness> longest_cycle;
};

/// Every cycle, through a subset dynamic programme: for each start vertex s,
/// the set of endpoints reachable by a path from s through exactly the
/// vertices of each subset above s. n <= kMaxHamiltonianOrder.
CycleSurvey exhaustive_hamiltonian(Natural n);
CycleSurvey exhaustive_hamiltonian(const graph::GcdGraph& g);

/// Minimum dominating set size over all vertex subsets. n <= kMaxDominationOrder.
Natural exhaustive_domination(Natural n);
Natural exhaustive_domination(const graph::GcdGraph& g);

}  // namespace gcdpairs::oracle
