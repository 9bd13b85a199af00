#include <algorithm>
#include <bit>
#include <climits>
#include <queue>

#include "palette/coloring.hpp"
#include "palette/even_space.hpp"

namespace palette {

namespace {

// Assignment order that completes vertices early: BFS vertex order per
// component (started at the highest-degree vertex), then each vertex's not yet
// listed incident edges.
std::vector<int> solver_edge_order(const Graph& g) {
    std::vector<int> vertex_order;
    std::vector<bool> visited(static_cast<std::size_t>(g.n), false);
    for (int start_scan = 0; start_scan < g.n; ++start_scan) {
        if (visited[static_cast<std::size_t>(start_scan)]) continue;
        // Highest-degree vertex of this component, smallest id on ties.
        int best = start_scan;
        {
            std::vector<int> comp{start_scan};
            std::vector<bool> in_comp(static_cast<std::size_t>(g.n), false);
            in_comp[static_cast<std::size_t>(start_scan)] = true;
            for (std::size_t i = 0; i < comp.size(); ++i)
                for (const auto& a : g.adj[static_cast<std::size_t>(comp[i])])
                    if (!in_comp[static_cast<std::size_t>(a.to)]) {
                        in_comp[static_cast<std::size_t>(a.to)] = true;
                        comp.push_back(a.to);
                    }
            std::sort(comp.begin(), comp.end());
            for (int v : comp)
                if (degree(g, v) > degree(g, best)) best = v;
        }
        std::queue<int> q;
        q.push(best);
        visited[static_cast<std::size_t>(best)] = true;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            vertex_order.push_back(v);
            for (const auto& a : g.adj[static_cast<std::size_t>(v)])
                if (!visited[static_cast<std::size_t>(a.to)]) {
                    visited[static_cast<std::size_t>(a.to)] = true;
                    q.push(a.to);
                }
        }
    }
    std::vector<int> pos(static_cast<std::size_t>(g.n));
    for (std::size_t i = 0; i < vertex_order.size(); ++i)
        pos[static_cast<std::size_t>(vertex_order[i])] = static_cast<int>(i);
    std::vector<int> order;
    std::vector<bool> listed(static_cast<std::size_t>(g.m()), false);
    for (int v : vertex_order) {
        std::vector<std::pair<int, int>> incident;  // (neighbor position, edge)
        for (const auto& a : g.adj[static_cast<std::size_t>(v)])
            if (!listed[static_cast<std::size_t>(a.edge)])
                incident.push_back({pos[static_cast<std::size_t>(a.to)], a.edge});
        std::sort(incident.begin(), incident.end());
        for (auto [p, e] : incident) {
            listed[static_cast<std::size_t>(e)] = true;
            order.push_back(e);
        }
    }
    return order;
}

// Backtracking search for a proper coloring with colors in {1..c_max} and at
// most t_limit distinct palettes. Pruning: first-use color symmetry breaking;
// a completed vertex whose palette would exceed the palette budget; once the
// budget is full, every incomplete vertex's partial palette must extend to one
// of the palettes already present (matching its degree).
class PaletteSearch {
public:
    PaletteSearch(const Graph& g, int c_max, int t_limit)
        : g_(g),
          c_max_(c_max),
          t_limit_(t_limit),
          order_(solver_edge_order(g)),
          colors_(static_cast<std::size_t>(g.m()), 0),
          used_(static_cast<std::size_t>(g.n), 0),
          remaining_(static_cast<std::size_t>(g.n), 0) {
        for (int v = 0; v < g.n; ++v)
            remaining_[static_cast<std::size_t>(v)] = degree(g, v);
    }

    std::optional<std::vector<int>> run() {
        if (dfs(0)) return colors_;
        return std::nullopt;
    }

private:
    bool palette_budget_full() const {
        return static_cast<int>(completed_.size()) == t_limit_;
    }

    bool vertex_compatible(int w) const {
        std::uint64_t partial = used_[static_cast<std::size_t>(w)];
        int deg = static_cast<int>(g_.adj[static_cast<std::size_t>(w)].size());
        for (std::uint64_t p : completed_)
            if (std::popcount(p) == deg && (partial & ~p) == 0) return true;
        return false;
    }

    bool dfs(std::size_t idx) {
        if (idx == order_.size()) return true;
        int e = order_[idx];
        int u = g_.edges[static_cast<std::size_t>(e)].first;
        int v = g_.edges[static_cast<std::size_t>(e)].second;
        int limit = std::min(c_max_, used_color_max_ + 1);
        std::uint64_t blocked =
            used_[static_cast<std::size_t>(u)] | used_[static_cast<std::size_t>(v)];
        for (int c = 1; c <= limit; ++c) {
            std::uint64_t bit = std::uint64_t{1} << c;
            if (blocked & bit) continue;

            colors_[static_cast<std::size_t>(e)] = c;
            used_[static_cast<std::size_t>(u)] |= bit;
            used_[static_cast<std::size_t>(v)] |= bit;
            --remaining_[static_cast<std::size_t>(u)];
            --remaining_[static_cast<std::size_t>(v)];
            int prev_used_max = used_color_max_;
            used_color_max_ = std::max(used_color_max_, c);
            std::size_t prev_completed = completed_.size();

            bool ok = true;
            for (int w : {u, v}) {
                if (remaining_[static_cast<std::size_t>(w)] != 0) continue;
                std::uint64_t pal = used_[static_cast<std::size_t>(w)];
                if (std::find(completed_.begin(), completed_.end(), pal) != completed_.end())
                    continue;
                if (palette_budget_full()) {
                    ok = false;
                    break;
                }
                completed_.push_back(pal);
            }
            if (ok && t_limit_ != INT_MAX && palette_budget_full()) {
                if (prev_completed < completed_.size()) {
                    // Budget just filled: every incomplete vertex must fit.
                    for (int w = 0; w < g_.n && ok; ++w)
                        if (remaining_[static_cast<std::size_t>(w)] > 0 && !vertex_compatible(w))
                            ok = false;
                } else {
                    for (int w : {u, v})
                        if (remaining_[static_cast<std::size_t>(w)] > 0 && !vertex_compatible(w))
                            ok = false;
                }
            }

            if (ok && dfs(idx + 1)) return true;

            completed_.resize(prev_completed);
            used_color_max_ = prev_used_max;
            ++remaining_[static_cast<std::size_t>(u)];
            ++remaining_[static_cast<std::size_t>(v)];
            used_[static_cast<std::size_t>(u)] &= ~bit;
            used_[static_cast<std::size_t>(v)] &= ~bit;
            colors_[static_cast<std::size_t>(e)] = 0;
        }
        return false;
    }

    const Graph& g_;
    int c_max_;
    int t_limit_;
    std::vector<int> order_;
    std::vector<int> colors_;
    std::vector<std::uint64_t> used_;
    std::vector<int> remaining_;
    std::vector<std::uint64_t> completed_;
    int used_color_max_ = 0;
};

int distinct_degree_count(const Graph& g) {
    std::vector<int> degs;
    for (int v = 0; v < g.n; ++v) degs.push_back(degree(g, v));
    std::sort(degs.begin(), degs.end());
    degs.erase(std::unique(degs.begin(), degs.end()), degs.end());
    return static_cast<int>(degs.size());
}

bool is_connected_cubic(const Graph& g) {
    if (g.n == 0) return false;
    for (int v = 0; v < g.n; ++v)
        if (degree(g, v) != 3) return false;
    return connected_components(g).size() == 1;
}

}  // namespace

std::optional<EdgeColoring> k_edge_coloring(const Graph& g, int k) {
    if (k < 1) throw InputError("k_edge_coloring requires k >= 1");
    if (k > 62) throw InputError("color universe larger than 62 not supported");
    auto colors = PaletteSearch(g, k, INT_MAX).run();
    if (!colors) return std::nullopt;
    EdgeColoring c;
    c.owner = &g;
    c.c_max = k;
    c.colors = std::move(*colors);
    return c;
}

PaletteIndexResult palette_index_exact(const Graph& g, int c_max) {
    if (g.m() < 1) throw InputError("palette_index_exact requires at least one edge");
    auto [delta, big_delta] = min_max_degree(g);
    if (c_max < big_delta)
        throw InputError("c_max below the maximum degree admits no proper coloring");
    if (c_max > 62) throw InputError("color universe larger than 62 not supported");
    if (c_max == big_delta && !k_edge_coloring(g, c_max))
        throw InputError("no proper coloring exists with c_max colors");

    bool regular = is_regular(g);
    // Palette size equals vertex degree, so distinct degrees force distinct
    // palettes; start the budget there.
    int start = std::max(1, distinct_degree_count(g));
    for (int t = start; t <= std::max(1, g.n); ++t) {
        if (t == 2 && regular) continue;  // no regular graph has palette index 2
        auto colors = PaletteSearch(g, c_max, t).run();
        if (!colors) continue;
        PaletteIndexResult result;
        result.value = t;
        result.witness.owner = &g;
        result.witness.c_max = c_max;
        result.witness.colors = std::move(*colors);
        result.flag = Exactness::BoundedColors;
        if (t == 1) {
            result.flag = Exactness::Unconditional;
        } else if (is_connected_cubic(g) && c_max >= 4) {
            result.flag = Exactness::Unconditional;
        } else if (big_delta >= 2 && t == delta + 1) {
            auto verdict = spanning_even_no_isolated(g);
            if (verdict.kind == EvenVerdict::NoStructural ||
                verdict.kind == EvenVerdict::NoExhaustive)
                result.flag = Exactness::Unconditional;
        }
        return result;
    }
    throw ContractError("palette search exhausted all budgets without a coloring");
}

}  // namespace palette
