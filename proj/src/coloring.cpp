#include <algorithm>
#include <limits>

#include "gcdpairs/error.hpp"
#include "gcdpairs/graph.hpp"

namespace gcdpairs::graph {

namespace {

constexpr unsigned kUncoloured = std::numeric_limits<unsigned>::max();

// Relabels colours by first appearance in vertex order.
ColoringWitness canonical(const std::vector<unsigned>& raw) {
    ColoringWitness out;
    std::vector<unsigned> relabel;
    out.colors.reserve(raw.size());
    for (unsigned c : raw) {
        if (c >= relabel.size()) relabel.resize(c + 1, kUncoloured);
        if (relabel[c] == kUncoloured) relabel[c] = out.color_count++;
        out.colors.push_back(relabel[c]);
    }
    return out;
}

class Dsatur {
public:
    explicit Dsatur(const GcdGraph& g) : g_(g), colors_(g.order(), kUncoloured) {}

    std::vector<unsigned>& colors() { return colors_; }

    bool forbidden(Vertex v, unsigned c) const {
        bool hit = false;
        g_.neighbors(v).for_each([&](std::size_t w) { hit = hit || colors_[w] == c; });
        return hit;
    }

    // Uncoloured vertex with the most distinct neighbour colours; ties go to
    // more uncoloured neighbours, then to the smaller vertex.
    Vertex pick() const {
        Vertex best = g_.order();
        std::size_t best_sat = 0, best_deg = 0;
        std::vector<char> seen;
        for (Vertex v = 0; v < g_.order(); ++v) {
            if (colors_[v] != kUncoloured) continue;
            seen.assign(g_.order(), 0);
            std::size_t sat = 0, deg = 0;
            g_.neighbors(v).for_each([&](std::size_t w) {
                if (colors_[w] == kUncoloured) {
                    ++deg;
                } else if (!seen[colors_[w]]) {
                    seen[colors_[w]] = 1;
                    ++sat;
                }
            });
            if (best == g_.order() || sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        return best;
    }

private:
    const GcdGraph& g_;
    std::vector<unsigned> colors_;
};

class ExactColouring {
public:
    ExactColouring(const GcdGraph& g, std::size_t lower, std::vector<unsigned> incumbent, unsigned incumbent_count)
        : g_(g), state_(g), lower_(lower), best_(std::move(incumbent)), best_count_(incumbent_count) {}

    void precolour(const std::vector<Vertex>& clique) {
        for (std::size_t i = 0; i < clique.size(); ++i) state_.colors()[clique[i]] = static_cast<unsigned>(i);
        coloured_ = clique.size();
        used_ = static_cast<unsigned>(clique.size());
    }

    void search() {
        if (best_count_ <= lower_) return;
        if (used_ >= best_count_) return;
        if (coloured_ == g_.order()) {
            best_ = state_.colors();
            best_count_ = used_;
            return;
        }
        const Vertex v = state_.pick();
        auto& colors = state_.colors();
        ++coloured_;
        for (unsigned c = 0; c < used_ && used_ < best_count_; ++c) {
            if (state_.forbidden(v, c)) continue;
            colors[v] = c;
            search();
            colors[v] = kUncoloured;
            if (best_count_ <= lower_) break;
        }
        if (used_ + 1 < best_count_ && best_count_ > lower_) {
            colors[v] = used_++;
            search();
            --used_;
            colors[v] = kUncoloured;
        }
        --coloured_;
    }

    const std::vector<unsigned>& best() const { return best_; }

private:
    const GcdGraph& g_;
    Dsatur state_;
    std::size_t lower_;
    std::vector<unsigned> best_;
    unsigned best_count_;
    std::size_t coloured_ = 0;
    unsigned used_ = 0;
};

}  // namespace

ChromaticResult greedy_coloring(const GcdGraph& g) {
    Dsatur state(g);
    for (std::size_t i = 0; i < g.order(); ++i) {
        const Vertex v = state.pick();
        unsigned c = 0;
        while (state.forbidden(v, c)) ++c;
        state.colors()[v] = c;
    }
    return {canonical(state.colors()), false};
}

ChromaticResult chromatic_number(const GcdGraph& g, Natural bound) {
    if (g.order() > bound) throw BoundExceeded("chromatic_number", g.order(), bound);
    auto greedy = greedy_coloring(g);
    const auto clique = max_clique(g, g.order());
    if (greedy.coloring.color_count > clique.vertices.size()) {
        ExactColouring search(g, clique.vertices.size(), greedy.coloring.colors, greedy.coloring.color_count);
        search.precolour(clique.vertices);
        search.search();
        greedy.coloring = canonical(search.best());
    }
    greedy.exact = true;
    return greedy;
}

}  // namespace gcdpairs::graph
