#include "gcdpairs/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <deque>
#include <stdexcept>

#include "gcdpairs/error.hpp"

namespace gcdpairs::graph {

GcdGraph GcdGraph::build(Natural n) {
    if (n == 0) throw DomainError("GcdGraph::build: n must be >= 1");
    return from_pairs(pairs::enumerate(n));
}

GcdGraph GcdGraph::from_pairs(const pairs::PairSet& nu) {
    GcdGraph g;
    g.n_ = nu.modulus();
    g.rows_.assign(g.n_, VertexSet(g.n_));
    for (const auto& e : nu.entries()) {
        if (e.a == e.b) {
            g.loops_.push_back(e.a);
            continue;
        }
        g.edges_.push_back({e.a, e.b});
        g.rows_[e.a].insert(e.b);
        g.rows_[e.b].insert(e.a);
    }
    std::sort(g.loops_.begin(), g.loops_.end());
    return g;
}

bool GcdGraph::has_loop(Vertex a) const noexcept { return std::binary_search(loops_.begin(), loops_.end(), a); }

bool PathWitness::valid_in(const GcdGraph& g) const {
    if (vertices.empty()) return false;
    VertexSet seen(g.order());
    for (Vertex v : vertices) {
        if (v >= g.order() || seen.contains(v)) return false;
        seen.insert(v);
    }
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i)
        if (!g.adjacent(vertices[i], vertices[i + 1])) return false;
    if (closed) return vertices.size() >= 3 && g.adjacent(vertices.back(), vertices.front());
    return true;
}

bool CliqueWitness::is_clique_in(const GcdGraph& g) const {
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i] >= g.order()) return false;
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (!g.adjacent(vertices[i], vertices[j])) return false;
    }
    return true;
}

bool ColoringWitness::proper_in(const GcdGraph& g) const {
    if (colors.size() != g.order()) return false;
    for (const auto& e : g.simple_edges())
        if (colors[e.a] == colors[e.b]) return false;
    std::vector<unsigned> used(colors);
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    return used.size() == color_count;
}

namespace {

Natural parse_natural(std::string_view text) {
    Natural value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
        throw DomainError("GCDPAIRS_MAX_EXACT: cannot parse '" + std::string(text) + "'");
    return value;
}

}  // namespace

ExactBounds ExactBounds::parse(std::string_view text) {
    ExactBounds bounds;
    if (text.find('=') == std::string_view::npos) {
        bounds.clique = bounds.chromatic = parse_natural(text);
        return bounds;
    }
    while (!text.empty()) {
        auto comma = text.find(',');
        auto item = text.substr(0, comma);
        text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
        auto eq = item.find('=');
        if (eq == std::string_view::npos) throw DomainError("GCDPAIRS_MAX_EXACT: expected key=value");
        auto key = item.substr(0, eq);
        auto value = parse_natural(item.substr(eq + 1));
        if (key == "clique")
            bounds.clique = value;
        else if (key == "chromatic")
            bounds.chromatic = value;
        else
            throw DomainError("GCDPAIRS_MAX_EXACT: unknown key '" + std::string(key) + "'");
    }
    return bounds;
}

ExactBounds ExactBounds::from_environment() {
    const char* raw = std::getenv("GCDPAIRS_MAX_EXACT");
    if (raw == nullptr || *raw == '\0') return {};
    return parse(raw);
}

bool is_connected(const GcdGraph& g) {
    const Natural n = g.order();
    if (n <= 1) return true;
    VertexSet seen(n);
    std::deque<Vertex> queue{0};
    seen.insert(0);
    std::size_t reached = 1;
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        g.neighbors(v).for_each([&](std::size_t w) {
            if (!seen.contains(w)) {
                seen.insert(w);
                queue.push_back(w);
                ++reached;
            }
        });
    }
    return reached == n;
}

Star star_subgraph(const GcdGraph& g) {
    const Natural n = g.order();
    if (n < 2) throw DomainError("star_subgraph: n must be >= 2");
    Star star;
    for (Vertex v = 0; v < n; ++v) {
        if (v == star.center) continue;
        if (!g.adjacent(star.center, v))
            throw std::logic_error("star_subgraph: 1 is not adjacent to " + std::to_string(v));
        star.leaves.push_back(v);
    }
    return star;
}

EmbeddingCheck embedding_check(Natural m, Natural n) {
    if (m == 0 || n == 0 || n % m != 0)
        throw DomainError("embedding_check: " + std::to_string(m) + " does not divide " + std::to_string(n));
    const auto small = GcdGraph::build(m);
    const auto large = m == n ? small : GcdGraph::build(n);
    EmbeddingCheck out;
    for (Vertex v : small.loops())
        if (!large.has_loop(v)) out.missing.push_back({v, v});
    for (const auto& e : small.simple_edges())
        if (!large.adjacent(e.a, e.b)) out.missing.push_back(e);
    std::sort(out.missing.begin(), out.missing.end());
    out.embedded = out.missing.empty();
    return out;
}

bool dominates(const GcdGraph& g, std::span<const Vertex> set) {
    VertexSet covered(g.order());
    for (Vertex v : set) {
        if (v >= g.order()) return false;
        covered |= g.neighbors(v);
        covered.insert(v);
    }
    return covered.size() == g.order();
}

namespace {

bool choose_dominating(const GcdGraph& g, std::size_t size, Vertex from, std::vector<Vertex>& chosen) {
    if (chosen.size() == size) return dominates(g, chosen);
    for (Vertex v = from; v + (size - chosen.size()) <= g.order(); ++v) {
        chosen.push_back(v);
        if (choose_dominating(g, size, v + 1, chosen)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace

Domination domination_number(const GcdGraph& g) {
    if (g.order() < 2) throw DomainError("domination_number: n must be >= 2");
    for (std::size_t size = 1; size <= g.order(); ++size) {
        std::vector<Vertex> chosen;
        if (choose_dominating(g, size, 0, chosen)) return {size, chosen};
    }
    throw std::logic_error("domination_number: the full vertex set must dominate");
}

std::optional<PathWitness> has_triangle(const GcdGraph& g) {
    for (Vertex a = 0; a < g.order(); ++a) {
        VertexSet above = g.neighbors(a);
        above.erase_below(a + 1);
        for (std::size_t b = above.first(); b < g.order(); b = above.next(b + 1)) {
            VertexSet common = above & g.neighbors(b);
            common.erase_below(b + 1);
            if (auto c = common.first(); c < g.order()) return PathWitness{{a, b, c}, true};
        }
    }
    return std::nullopt;
}

PathWitness hamiltonian_path(const GcdGraph& g) {
    if (g.order() < 2) throw DomainError("hamiltonian_path: n must be >= 2");
    PathWitness path;
    for (Vertex v = 0; v < g.order(); ++v) path.vertices.push_back(v);
    if (!path.valid_in(g)) throw std::logic_error("hamiltonian_path: consecutive residues not adjacent");
    return path;
}

bool is_independent(const GcdGraph& g, std::span<const Vertex> set) {
    for (std::size_t i = 0; i < set.size(); ++i)
        for (std::size_t j = i + 1; j < set.size(); ++j)
            if (g.adjacent(set[i], set[j])) return false;
    return true;
}

HamiltonianCycle hamiltonian_cycle(const GcdGraph& g) {
    const Natural n = g.order();
    if (n < 2) throw DomainError("hamiltonian_cycle: n must be >= 2");
    HamiltonianCycle out;
    if (n == 2) return out;
    if (n % 2 == 0) {
        PathWitness cycle{{0}, true};
        for (Vertex v = 2; v < n; ++v) cycle.vertices.push_back(v);
        cycle.vertices.push_back(1);
        if (!cycle.valid_in(g)) throw std::logic_error("hamiltonian_cycle: constructive cycle invalid");
        out.cycle = std::move(cycle);
        return out;
    }
    for (Vertex v = 0; v < n; v += 2) out.independent_certificate.push_back(v);
    if (!is_independent(g, out.independent_certificate))
        throw std::logic_error("hamiltonian_cycle: even residues are not independent");
    return out;
}

PathWitness longest_cycle_constructive(const GcdGraph& g) {
    const Natural n = g.order();
    if (n < 5 || n % 2 == 0) throw DomainError("longest_cycle_constructive: n must be odd and >= 5");
    PathWitness cycle{{}, true};
    for (Vertex v = 1; v < n; ++v) cycle.vertices.push_back(v);
    if (!cycle.valid_in(g)) throw std::logic_error("longest_cycle_constructive: cycle invalid");
    return cycle;
}

bool is_planar(const GcdGraph& g) { return is_planar(g.order(), g.simple_edges()); }

std::string export_dot(const GcdGraph& g) {
    std::string out = "graph G" + std::to_string(g.order()) + " {\n";
    for (Vertex v : g.loops()) out += std::to_string(v) + " -- " + std::to_string(v) + ";\n";
    for (const auto& e : g.simple_edges()) out += std::to_string(e.a) + " -- " + std::to_string(e.b) + ";\n";
    out += "}\n";
    return out;
}

Analysis analyze(const GcdGraph& g, const ExactBounds& bounds) {
    const Natural n = g.order();
    Analysis a;
    a.connected = is_connected(g);
    if (n >= 2) {
        a.gamma = domination_number(g).gamma;
        a.traceable = hamiltonian_path(g).valid_in(g);
        a.hamiltonian = hamiltonian_cycle(g).cycle.has_value();
    } else {
        a.gamma = 1;
        a.traceable = true;
        a.hamiltonian = false;
    }
    if (auto t = has_triangle(g)) a.triangle = t->vertices;
    try {
        a.clique_number = max_clique(g, bounds.clique).vertices.size();
    } catch (const BoundExceeded& e) {
        a.notes.push_back(std::string("clique_number: ") + e.what());
    }
    try {
        a.chromatic_number = chromatic_number(g, bounds.chromatic).coloring.color_count;
    } catch (const BoundExceeded& e) {
        a.notes.push_back(std::string("chromatic_number: ") + e.what());
    }
    a.planar = is_planar(g);
    return a;
}

}  // namespace gcdpairs::graph
