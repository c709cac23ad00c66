#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gcdpairs/numtheory.hpp"
#include "gcdpairs/pairs.hpp"
#include "gcdpairs/vertex_set.hpp"

namespace gcdpairs::graph {

using Vertex = Natural;

struct Edge {
    Vertex a = 0;
    Vertex b = 0;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// G_n: vertices 0..n-1, a simple edge {a, b} (a < b) for every gcd-pair with
/// distinct endpoints, and a loop at a for every gcd-pair {a, a}.
///
/// Loops are kept apart from the simple edges; colouring, cliques, cycles
/// and planarity only look at the simple edges.
class GcdGraph {
public:
    static GcdGraph build(Natural n);
    static GcdGraph from_pairs(const pairs::PairSet& nu);

    Natural order() const noexcept { return n_; }
    const std::vector<Edge>& simple_edges() const noexcept { return edges_; }
    const std::vector<Vertex>& loops() const noexcept { return loops_; }

    bool adjacent(Vertex a, Vertex b) const noexcept { return a < n_ && b < n_ && rows_[a].contains(b); }
    bool has_loop(Vertex a) const noexcept;
    const VertexSet& neighbors(Vertex v) const noexcept { return rows_[v]; }
    std::size_t degree(Vertex v) const noexcept { return rows_[v].size(); }

private:
    Natural n_ = 0;
    std::vector<Edge> edges_;
    std::vector<Vertex> loops_;
    std::vector<VertexSet> rows_;
};

/// A path (v_1, ..., v_m) of distinct vertices; `closed` adds the edge v_m v_1.
struct PathWitness {
    std::vector<Vertex> vertices;
    bool closed = false;

    bool valid_in(const GcdGraph& g) const;
    friend bool operator==(const PathWitness&, const PathWitness&) = default;
};

struct Star {
    Vertex center = 1;
    std::vector<Vertex> leaves;
};

struct CliqueWitness {
    std::vector<Vertex> vertices;  // ascending
    bool maximal = false;          // no outside vertex extends it
    bool maximum = false;          // certified largest by exact search

    bool is_clique_in(const GcdGraph& g) const;
    friend bool operator==(const CliqueWitness&, const CliqueWitness&) = default;
};

struct ColoringWitness {
    std::vector<unsigned> colors;  // colors[v] for every vertex v
    unsigned color_count = 0;

    bool proper_in(const GcdGraph& g) const;
};

/// Size limits for the exact searches. Beyond them the searches throw
/// BoundExceeded instead of approximating.
struct ExactBounds {
    Natural clique = 64;
    Natural chromatic = 16;

    /// Defaults, overridden by GCDPAIRS_MAX_EXACT when set. The variable is
    /// either one integer for both bounds or "clique=N,chromatic=M".
    static ExactBounds from_environment();
    static ExactBounds parse(std::string_view text);
};

bool is_connected(const GcdGraph& g);

/// The star centred at 1 with every other vertex as a leaf. Requires n >= 2.
Star star_subgraph(const GcdGraph& g);

struct EmbeddingCheck {
    bool embedded = false;
    std::vector<Edge> missing;  // edges (a == b for loops) of G_m absent from G_n
};

/// Whether G_m sits inside G_n under the identity on labels 0..m-1.
/// Throws DomainError unless m >= 1 and m | n.
EmbeddingCheck embedding_check(Natural m, Natural n);

struct Domination {
    Natural gamma = 0;
    std::vector<Vertex> witness;  // lexicographically smallest minimum dominating set
};

/// Exact domination number by trying vertex sets in increasing size. n >= 2.
Domination domination_number(const GcdGraph& g);

bool dominates(const GcdGraph& g, std::span<const Vertex> set);

/// The lexicographically smallest triangle, if any.
std::optional<PathWitness> has_triangle(const GcdGraph& g);

/// (0, 1, ..., n-1), validated edge by edge. Requires n >= 2.
PathWitness hamiltonian_path(const GcdGraph& g);

struct HamiltonianCycle {
    std::optional<PathWitness> cycle;
    /// When no cycle is returned for odd n: the even residues, an independent
    /// set of size (n+1)/2 > n/2, which no Hamiltonian cycle can accommodate.
    std::vector<Vertex> independent_certificate;
};

/// Even n > 2: the cycle (0, 2, 3, ..., n-1, 1). Odd n: absent, with the
/// even-residue certificate. n == 2: absent. Requires n >= 2.
HamiltonianCycle hamiltonian_cycle(const GcdGraph& g);

bool is_independent(const GcdGraph& g, std::span<const Vertex> set);

/// Odd n >= 5: the cycle (1, 2, ..., n-1). No Hamiltonian cycle exists
/// (see hamiltonian_cycle), so its order n-1 is the maximum.
PathWitness longest_cycle_constructive(const GcdGraph& g);

/// Maximum clique by branch and bound with a greedy-colouring bound; the
/// lexicographically smallest among maximum cliques. Throws BoundExceeded
/// when n > bound.
CliqueWitness max_clique(const GcdGraph& g, Natural bound = ExactBounds{}.clique);

/// The lexicographically smallest clique with exactly `size` vertices.
std::optional<std::vector<Vertex>> find_clique(const GcdGraph& g, std::size_t size);

bool is_maximal_clique(const GcdGraph& g, std::span<const Vertex> vertices);

/// An explicit clique built from primes and prime powers below n.
struct CliqueConstruction {
    enum class Family { TwoVertex, PrimePower, SemiPrime, Primes };

    Family family = Family::Primes;
    /// Vertex set as the construction states it, and the order it states.
    std::vector<Vertex> claimed;
    Natural claimed_order = 0;
    /// Largest pairwise-adjacent part of `claimed`.
    std::vector<Vertex> valid_subset;
    bool claimed_is_clique = false;
    /// valid_subset grown greedily (ascending vertices) until maximal.
    CliqueWitness witness;
    std::vector<Vertex> extension;
};

std::string_view to_string(CliqueConstruction::Family family) noexcept;

/// Builds the applicable construction for n >= 2:
///  - n = 2: {0, 1};
///  - n = p^k: {1} + primes below p^k other than p + {p, ..., p^(k-1)};
///  - n = pq, p < q: {1} + primes below pq + {p^2, ..., p^j} for p^j < pq,
///    of which at most one power above p can stay (gcd(p^i, p^j) = p^min);
///  - otherwise {1} + primes below n.
CliqueConstruction clique_construction(Natural n);

struct ChromaticResult {
    ColoringWitness coloring;
    bool exact = false;  // false: greedy upper bound only
};

/// Exact chromatic number over simple edges (DSATUR branch and bound with the
/// maximum clique as lower bound). Throws BoundExceeded when n > bound.
ChromaticResult chromatic_number(const GcdGraph& g, Natural bound = ExactBounds{}.chromatic);

/// DSATUR greedy colouring, tagged as an upper bound.
ChromaticResult greedy_coloring(const GcdGraph& g);

/// Planarity of the simple-edge graph by the left-right criterion.
bool is_planar(const GcdGraph& g);

/// Planarity of an arbitrary simple undirected graph on vertices [0, n).
bool is_planar(std::size_t vertex_count, std::span<const Edge> edges);

/// Undirected DOT: loops first, then simple edges, each ascending.
std::string export_dot(const GcdGraph& g);

/// Every invariant reported by `gcdpairs graph --analyze`. Fields that are
/// not defined for n, or whose exact search is over its bound, stay empty
/// and get an entry in `notes`.
struct Analysis {
    bool connected = true;
    std::optional<Natural> gamma;
    std::optional<std::vector<Vertex>> triangle;
    bool traceable = true;
    bool hamiltonian = false;
    std::optional<Natural> clique_number;
    std::optional<Natural> chromatic_number;
    bool planar = true;
    std::vector<std::string> notes;

    friend bool operator==(const Analysis&, const Analysis&) = default;
};

Analysis analyze(const GcdGraph& g, const ExactBounds& bounds = {});

}  // namespace gcdpairs::graph
