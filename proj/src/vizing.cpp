#include <algorithm>

#include "palette/coloring.hpp"

namespace palette {

namespace {

// Fan-rotation edge coloring with Delta+1 colors (Misra-Gries). Colors are
// 1..Delta+1 internally, 0 = uncolored.
class FanColorer {
public:
    explicit FanColorer(const Graph& g)
        : g_(g), k_(g.n == 0 ? 1 : min_max_degree(g).second + 1),
          color_(static_cast<std::size_t>(g.m()), 0) {}

    std::vector<int> run() {
        for (int e = 0; e < g_.m(); ++e) color_edge(e);
        return color_;
    }

    int color_count() const { return k_; }

private:
    std::uint64_t used_mask(int v) const {
        std::uint64_t mask = 0;
        for (const auto& arc : g_.adj[static_cast<std::size_t>(v)]) {
            int c = color_[static_cast<std::size_t>(arc.edge)];
            if (c) mask |= std::uint64_t{1} << c;
        }
        return mask;
    }

    int smallest_free(int v) const {
        std::uint64_t mask = used_mask(v);
        for (int c = 1; c <= k_; ++c)
            if (!(mask & (std::uint64_t{1} << c))) return c;
        return -1;  // cannot happen: deg(v) <= k_-1
    }

    bool is_free(int v, int c) const { return !(used_mask(v) & (std::uint64_t{1} << c)); }

    int edge_between(int u, int w) const {
        for (const auto& arc : g_.adj[static_cast<std::size_t>(u)])
            if (arc.to == w) return arc.edge;
        return -1;
    }

    // Swap colors c and d along the maximal cd-path starting at u. u must have
    // no c-colored edge, so the path leaves u on its d-edge if any.
    void invert_path(int u, int c, int d) {
        if (c == d) return;
        std::vector<int> path_edges;
        int x = u;
        int want = d;
        for (;;) {
            int next_edge = -1;
            for (const auto& arc : g_.adj[static_cast<std::size_t>(x)]) {
                if (color_[static_cast<std::size_t>(arc.edge)] == want &&
                    (path_edges.empty() || arc.edge != path_edges.back())) {
                    next_edge = arc.edge;
                    x = arc.to;
                    break;
                }
            }
            if (next_edge == -1) break;
            path_edges.push_back(next_edge);
            want = (want == d) ? c : d;
        }
        for (int e : path_edges)
            color_[static_cast<std::size_t>(e)] =
                (color_[static_cast<std::size_t>(e)] == c) ? d : c;
    }

    void color_edge(int e) {
        int u = g_.edges[static_cast<std::size_t>(e)].first;
        int v = g_.edges[static_cast<std::size_t>(e)].second;

        // Maximal fan of u starting at v.
        std::vector<int> fan{v};
        std::vector<bool> in_fan(static_cast<std::size_t>(g_.n), false);
        in_fan[static_cast<std::size_t>(v)] = true;
        for (;;) {
            bool extended = false;
            std::uint64_t last_mask = used_mask(fan.back());
            for (const auto& arc : g_.adj[static_cast<std::size_t>(u)]) {
                int col = color_[static_cast<std::size_t>(arc.edge)];
                if (col == 0 || in_fan[static_cast<std::size_t>(arc.to)]) continue;
                if (!(last_mask & (std::uint64_t{1} << col))) {
                    fan.push_back(arc.to);
                    in_fan[static_cast<std::size_t>(arc.to)] = true;
                    extended = true;
                    break;
                }
            }
            if (!extended) break;
        }

        int c = smallest_free(u);
        int d = smallest_free(fan.back());
        invert_path(u, c, d);

        // Longest prefix of the fan still valid after the inversion, then the
        // first vertex in it where d is free.
        std::size_t valid = fan.size();
        for (std::size_t i = 1; i < fan.size(); ++i) {
            int col = color_[static_cast<std::size_t>(edge_between(u, fan[i]))];
            if (col == 0 || !is_free(fan[i - 1], col)) {
                valid = i;
                break;
            }
        }
        std::size_t j = valid;  // sentinel
        for (std::size_t i = 0; i < valid; ++i) {
            if (is_free(fan[i], d)) {
                j = i;
                break;
            }
        }
        if (j == valid) throw ContractError("fan rotation invariant violated");

        // Rotate the prefix [0..j] and give d to the freed edge.
        for (std::size_t i = 0; i < j; ++i)
            color_[static_cast<std::size_t>(edge_between(u, fan[i]))] =
                color_[static_cast<std::size_t>(edge_between(u, fan[i + 1]))];
        color_[static_cast<std::size_t>(edge_between(u, fan[j]))] = d;
    }

    const Graph& g_;
    int k_;
    std::vector<int> color_;
};

}  // namespace

EdgeColoring vizing_coloring(const Graph& g) {
    if (g.m() < 1) throw InputError("vizing_coloring requires at least one edge");
    FanColorer colorer(g);
    EdgeColoring c;
    c.owner = &g;
    c.colors = colorer.run();
    c.c_max = colorer.color_count();
    if (!check_proper(c)) throw ContractError("fan coloring produced an improper coloring");
    return c;
}

}  // namespace palette
