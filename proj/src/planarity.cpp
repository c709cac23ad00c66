// Left-right planarity test (de Fraysseix-Rosenstiehl criterion, in the
// formulation of Brandes, "The Left-Right Planarity Test"). Only the testing
// phase is implemented; no embedding is produced.

#include <algorithm>
#include <utility>

#include "gcdpairs/graph.hpp"

namespace gcdpairs::graph {

namespace {

constexpr int kNone = -1;

struct Interval {
    int low = kNone;
    int high = kNone;
    bool empty() const noexcept { return low == kNone && high == kNone; }
};

struct ConflictPair {
    Interval left;
    Interval right;
};

class LeftRightTest {
public:
    LeftRightTest(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges)
        : n_(n), adjacency_(n), oriented_(edges.size(), false), height_(n, kNone), parent_edge_(n, kNone),
          out_(n) {
        for (std::size_t i = 0; i < edges.size(); ++i) {
            adjacency_[edges[i].first].push_back({edges[i].second, i});
            adjacency_[edges[i].second].push_back({edges[i].first, i});
        }
        const std::size_t m = edges.size();
        from_.reserve(m);
        to_.reserve(m);
        lowpt_.reserve(m);
        lowpt2_.reserve(m);
        nesting_.reserve(m);
    }

    bool run() {
        std::vector<std::size_t> roots;
        for (std::size_t v = 0; v < n_; ++v) {
            if (height_[v] != kNone) continue;
            height_[v] = 0;
            roots.push_back(v);
            orient(v);
        }
        const std::size_t m = from_.size();
        ref_.assign(m, kNone);
        lowpt_edge_.assign(m, kNone);
        stack_bottom_.assign(m, 0);
        for (auto& list : out_)
            std::stable_sort(list.begin(), list.end(), [&](int a, int b) { return nesting_[a] < nesting_[b]; });
        for (std::size_t r : roots)
            if (!test(r)) return false;
        return true;
    }

private:
    int new_edge(std::size_t v, std::size_t w) {
        from_.push_back(v);
        to_.push_back(w);
        lowpt_.push_back(height_[v]);
        lowpt2_.push_back(height_[v]);
        nesting_.push_back(0);
        return static_cast<int>(from_.size() - 1);
    }

    void orient(std::size_t v) {
        const int e = parent_edge_[v];
        for (const auto& [w, id] : adjacency_[v]) {
            if (oriented_[id]) continue;
            oriented_[id] = true;
            const int vw = new_edge(v, w);
            out_[v].push_back(vw);
            if (height_[w] == kNone) {
                parent_edge_[w] = vw;
                height_[w] = height_[v] + 1;
                orient(w);
            } else {
                lowpt_[vw] = height_[w];
            }
            nesting_[vw] = 2 * lowpt_[vw] + (lowpt2_[vw] < height_[v] ? 1 : 0);
            if (e == kNone) continue;
            if (lowpt_[vw] < lowpt_[e]) {
                lowpt2_[e] = std::min(lowpt_[e], lowpt2_[vw]);
                lowpt_[e] = lowpt_[vw];
            } else if (lowpt_[vw] > lowpt_[e]) {
                lowpt2_[e] = std::min(lowpt2_[e], lowpt_[vw]);
            } else {
                lowpt2_[e] = std::min(lowpt2_[e], lowpt2_[vw]);
            }
        }
    }

    bool conflicting(const Interval& i, int b) const { return !i.empty() && lowpt_[i.high] > lowpt_[b]; }

    int lowest(const ConflictPair& p) const {
        if (p.left.empty()) return lowpt_[p.right.low];
        if (p.right.empty()) return lowpt_[p.left.low];
        return std::min(lowpt_[p.left.low], lowpt_[p.right.low]);
    }

    void set_ref(int edge, int target) {
        if (edge != kNone) ref_[edge] = target;
    }

    bool test(std::size_t v) {
        const int e = parent_edge_[v];
        const auto& outgoing = out_[v];
        for (std::size_t i = 0; i < outgoing.size(); ++i) {
            const int ei = outgoing[i];
            const std::size_t w = to_[ei];
            stack_bottom_[ei] = stack_.size();
            if (ei == parent_edge_[w]) {
                if (!test(w)) return false;
            } else {
                lowpt_edge_[ei] = ei;
                stack_.push_back({{}, {ei, ei}});
            }
            if (lowpt_[ei] < height_[v]) {
                if (i == 0)
                    lowpt_edge_[e] = lowpt_edge_[ei];
                else if (!add_constraints(ei, e))
                    return false;
            }
        }
        if (e != kNone) {
            const std::size_t u = from_[e];
            trim_back_edges(u);
            if (lowpt_[e] < height_[u] && !stack_.empty()) {
                const int hl = stack_.back().left.high;
                const int hr = stack_.back().right.high;
                ref_[e] = (hl != kNone && (hr == kNone || lowpt_[hl] > lowpt_[hr])) ? hl : hr;
            }
        }
        return true;
    }

    bool add_constraints(int ei, int e) {
        ConflictPair p;
        // Return edges of ei all go to one side.
        do {
            ConflictPair q = stack_.back();
            stack_.pop_back();
            if (!q.left.empty()) std::swap(q.left, q.right);
            if (!q.left.empty()) return false;
            if (lowpt_[q.right.low] > lowpt_[e]) {
                if (p.right.empty())
                    p.right = q.right;
                else
                    set_ref(p.right.low, q.right.high);
                p.right.low = q.right.low;
            } else {
                set_ref(q.right.low, lowpt_edge_[e]);
            }
        } while (stack_.size() != stack_bottom_[ei]);

        // Conflicting return edges of earlier siblings go to the other side.
        while (!stack_.empty() && (conflicting(stack_.back().left, ei) || conflicting(stack_.back().right, ei))) {
            ConflictPair q = stack_.back();
            stack_.pop_back();
            if (conflicting(q.right, ei)) std::swap(q.left, q.right);
            if (conflicting(q.right, ei)) return false;
            set_ref(p.right.low, q.right.high);
            if (q.right.low != kNone) p.right.low = q.right.low;
            if (p.left.empty())
                p.left = q.left;
            else
                set_ref(p.left.low, q.left.high);
            p.left.low = q.left.low;
        }
        if (!(p.left.empty() && p.right.empty())) stack_.push_back(p);
        return true;
    }

    void trim_back_edges(std::size_t u) {
        const int h = height_[u];
        while (!stack_.empty() && lowest(stack_.back()) == h) stack_.pop_back();
        if (stack_.empty()) return;
        ConflictPair p = stack_.back();
        stack_.pop_back();
        while (p.left.high != kNone && to_[p.left.high] == u) p.left.high = ref_[p.left.high];
        if (p.left.high == kNone && p.left.low != kNone) {
            ref_[p.left.low] = p.right.low;
            p.left.low = kNone;
        }
        while (p.right.high != kNone && to_[p.right.high] == u) p.right.high = ref_[p.right.high];
        if (p.right.high == kNone && p.right.low != kNone) {
            ref_[p.right.low] = p.left.low;
            p.right.low = kNone;
        }
        stack_.push_back(p);
    }

    struct Incidence {
        std::size_t other;
        std::size_t id;
    };

    std::size_t n_;
    std::vector<std::vector<Incidence>> adjacency_;
    std::vector<bool> oriented_;
    std::vector<int> height_;
    std::vector<int> parent_edge_;
    std::vector<std::vector<int>> out_;

    // Per oriented edge.
    std::vector<std::size_t> from_, to_;
    std::vector<int> lowpt_, lowpt2_, nesting_;
    std::vector<int> ref_, lowpt_edge_;
    std::vector<std::size_t> stack_bottom_;

    std::vector<ConflictPair> stack_;
};

}  // namespace

bool is_planar(std::size_t vertex_count, std::span<const Edge> edges) {
    std::vector<std::pair<std::size_t, std::size_t>> simple;
    simple.reserve(edges.size());
    for (const auto& e : edges) {
        if (e.a == e.b) continue;
        auto a = static_cast<std::size_t>(std::min(e.a, e.b));
        auto b = static_cast<std::size_t>(std::max(e.a, e.b));
        if (b >= vertex_count) throw std::out_of_range("is_planar: edge endpoint outside the vertex range");
        simple.emplace_back(a, b);
    }
    std::sort(simple.begin(), simple.end());
    simple.erase(std::unique(simple.begin(), simple.end()), simple.end());
    // Euler: a simple planar graph on n >= 3 vertices has at most 3n - 6 edges.
    if (vertex_count >= 3 && simple.size() > 3 * vertex_count - 6) return false;
    return LeftRightTest(vertex_count, simple).run();
}

}  // namespace gcdpairs::graph
