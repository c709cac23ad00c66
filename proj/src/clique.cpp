#include <algorithm>

#include "gcdpairs/error.hpp"
#include "gcdpairs/graph.hpp"

namespace gcdpairs::graph {

namespace {

// Greedy sequential colouring of `candidates` in ascending vertex order.
// order[i] is a vertex, bound[i] the number of colour classes opened so far,
// which bounds any clique inside order[0..i].
void colour_sort(const GcdGraph& g, const VertexSet& candidates, std::vector<Vertex>& order,
                 std::vector<std::size_t>& bound) {
    order.clear();
    bound.clear();
    VertexSet uncoloured = candidates;
    std::size_t colour = 0;
    while (!uncoloured.empty()) {
        ++colour;
        VertexSet available = uncoloured;
        for (std::size_t v = available.first(); v < available.capacity(); v = available.next(v + 1)) {
            available.subtract(g.neighbors(v));
            uncoloured.erase(v);
            order.push_back(v);
            bound.push_back(colour);
        }
    }
}

std::size_t colour_bound(const GcdGraph& g, const VertexSet& candidates) {
    std::vector<Vertex> order;
    std::vector<std::size_t> bound;
    colour_sort(g, candidates, order, bound);
    return bound.empty() ? 0 : bound.back();
}

class MaxCliqueSearch {
public:
    explicit MaxCliqueSearch(const GcdGraph& g) : g_(g) {}

    std::size_t run() {
        VertexSet all(g_.order());
        for (Vertex v = 0; v < g_.order(); ++v) all.insert(v);
        expand(all);
        return best_;
    }

private:
    void expand(VertexSet candidates) {
        std::vector<Vertex> order;
        std::vector<std::size_t> bound;
        colour_sort(g_, candidates, order, bound);
        for (std::size_t i = order.size(); i-- > 0;) {
            if (depth_ + bound[i] <= best_) return;
            const Vertex v = order[i];
            ++depth_;
            VertexSet next = candidates & g_.neighbors(v);
            if (next.empty())
                best_ = std::max(best_, depth_);
            else
                expand(std::move(next));
            --depth_;
            candidates.erase(v);
        }
    }

    const GcdGraph& g_;
    std::size_t depth_ = 0;
    std::size_t best_ = 0;
};

// Depth-first in ascending vertex order, so the first clique reaching
// `target` is the lexicographically smallest one of that size.
bool lexicographic_clique(const GcdGraph& g, VertexSet candidates, std::size_t target, std::vector<Vertex>& chosen) {
    if (chosen.size() == target) return true;
    const std::size_t need = target - chosen.size();
    if (candidates.size() < need || colour_bound(g, candidates) < need) return false;
    for (std::size_t v = candidates.first(); v < candidates.capacity(); v = candidates.next(v)) {
        chosen.push_back(v);
        if (lexicographic_clique(g, candidates & g.neighbors(v), target, chosen)) return true;
        chosen.pop_back();
        candidates.erase(v);
        if (candidates.size() < need) return false;
    }
    return false;
}

}  // namespace

std::optional<std::vector<Vertex>> find_clique(const GcdGraph& g, std::size_t size) {
    std::vector<Vertex> chosen;
    if (size == 0) return chosen;
    VertexSet all(g.order());
    for (Vertex v = 0; v < g.order(); ++v) all.insert(v);
    if (lexicographic_clique(g, std::move(all), size, chosen)) return chosen;
    return std::nullopt;
}

CliqueWitness max_clique(const GcdGraph& g, Natural bound) {
    if (g.order() > bound) throw BoundExceeded("max_clique", g.order(), bound);
    const std::size_t omega = MaxCliqueSearch(g).run();
    auto vertices = find_clique(g, omega);
    if (!vertices) throw std::logic_error("max_clique: no clique of the computed size");
    return {std::move(*vertices), true, true};
}

bool is_maximal_clique(const GcdGraph& g, std::span<const Vertex> vertices) {
    CliqueWitness probe{{vertices.begin(), vertices.end()}, false, false};
    if (!probe.is_clique_in(g)) return false;
    VertexSet common(g.order());
    for (Vertex v = 0; v < g.order(); ++v) common.insert(v);
    for (Vertex v : vertices) common &= g.neighbors(v);
    return common.empty();
}

std::string_view to_string(CliqueConstruction::Family family) noexcept {
    switch (family) {
        case CliqueConstruction::Family::TwoVertex: return "two-vertex";
        case CliqueConstruction::Family::PrimePower: return "prime-power";
        case CliqueConstruction::Family::SemiPrime: return "semiprime";
        case CliqueConstruction::Family::Primes: return "primes";
    }
    return "?";
}

CliqueConstruction clique_construction(Natural n) {
    if (n < 2) throw DomainError("clique_construction: n must be >= 2");
    const auto g = GcdGraph::build(n);
    const auto primes = numtheory::primes_below(n);
    const auto factors = numtheory::factorize(n);

    CliqueConstruction out;
    auto& claimed = out.claimed;
    if (n == 2) {
        out.family = CliqueConstruction::Family::TwoVertex;
        claimed = {0, 1};
        out.claimed_order = 2;
    } else if (factors.size() == 1) {
        // {1} + primes other than p + p, p^2, ..., p^(k-1); p itself is below n iff k >= 2.
        const auto [p, k] = factors.front();
        out.family = CliqueConstruction::Family::PrimePower;
        claimed.push_back(1);
        claimed.insert(claimed.end(), primes.begin(), primes.end());
        for (Natural power = p * p; power < n; power *= p) claimed.push_back(power);
        const auto others = static_cast<Natural>(std::count_if(primes.begin(), primes.end(),
                                                               [p = p](Natural x) { return x != p; }));
        out.claimed_order = others + k;
    } else if (factors.size() == 2 && factors[0].k == 1 && factors[1].k == 1) {
        const Natural p = factors[0].p;
        out.family = CliqueConstruction::Family::SemiPrime;
        claimed.push_back(1);
        claimed.insert(claimed.end(), primes.begin(), primes.end());
        unsigned top = 1;  // largest j with p^j < pq
        for (Natural power = p * p; power < n; power *= p, ++top) claimed.push_back(power);
        out.claimed_order = (primes.size() - 2) + top + 2;
    } else {
        out.family = CliqueConstruction::Family::Primes;
        claimed.push_back(1);
        claimed.insert(claimed.end(), primes.begin(), primes.end());
        out.claimed_order = primes.size() + 1;
    }
    std::sort(claimed.begin(), claimed.end());

    // Ascending greedy. The claimed sets are cliques except for p^i, p^j with
    // 2 <= i < j in the semiprime family; greedy keeps exactly one of those
    // (p^2), which is the most any clique inside `claimed` can hold.
    for (Vertex v : claimed) {
        if (std::all_of(out.valid_subset.begin(), out.valid_subset.end(),
                        [&](Vertex u) { return g.adjacent(u, v); }))
            out.valid_subset.push_back(v);
    }
    out.claimed_is_clique = out.valid_subset.size() == claimed.size();

    auto& members = out.witness.vertices;
    members = out.valid_subset;
    for (Vertex v = 0; v < n; ++v) {
        if (std::binary_search(out.valid_subset.begin(), out.valid_subset.end(), v)) continue;
        if (std::all_of(members.begin(), members.end(), [&](Vertex u) { return g.adjacent(u, v); })) {
            members.push_back(v);
            out.extension.push_back(v);
        }
    }
    std::sort(members.begin(), members.end());
    out.witness.maximal = is_maximal_clique(g, members);
    out.witness.maximum = false;
    return out;
}

}  // namespace gcdpairs::graph
