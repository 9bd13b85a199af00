#include "palette/graph.hpp"

#include <algorithm>
#include <set>

namespace palette {

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> edge_list) {
    if (n < 0) throw InputError("negative vertex count");
    Graph g;
    g.n = n;
    g.adj.resize(static_cast<std::size_t>(n));
    std::set<std::pair<int, int>> seen;
    for (auto& [u, v] : edge_list) {
        if (u < 0 || u >= n || v < 0 || v >= n) throw InputError("edge endpoint out of range");
        if (u == v) throw InputError("self-loop not allowed");
        if (u > v) std::swap(u, v);
        if (!seen.insert({u, v}).second) throw InputError("duplicate edge not allowed");
    }
    g.edges = std::move(edge_list);
    for (int e = 0; e < g.m(); ++e) {
        auto [u, v] = g.edges[static_cast<std::size_t>(e)];
        g.adj[static_cast<std::size_t>(u)].push_back({v, e});
        g.adj[static_cast<std::size_t>(v)].push_back({u, e});
    }
    return g;
}

int degree(const Graph& g, int v) {
    if (v < 0 || v >= g.n) throw InputError("vertex id out of range");
    return static_cast<int>(g.adj[static_cast<std::size_t>(v)].size());
}

std::pair<int, int> min_max_degree(const Graph& g) {
    if (g.n == 0) throw InputError("min_max_degree on empty graph");
    int lo = degree(g, 0), hi = lo;
    for (int v = 1; v < g.n; ++v) {
        int d = degree(g, v);
        lo = std::min(lo, d);
        hi = std::max(hi, d);
    }
    return {lo, hi};
}

bool is_regular(const Graph& g) {
    if (g.n == 0) return true;
    auto [lo, hi] = min_max_degree(g);
    return lo == hi;
}

EdgeSubset bridges(const Graph& g) {
    EdgeSubset result(static_cast<std::size_t>(g.m()));
    std::vector<int> disc(static_cast<std::size_t>(g.n), -1);
    std::vector<int> low(static_cast<std::size_t>(g.n), 0);
    int timer = 0;

    // Iterative DFS; frame tracks the arc index being scanned.
    struct Frame {
        int v;
        int parent_edge;
        std::size_t next_arc;
    };
    std::vector<Frame> stack;
    for (int root = 0; root < g.n; ++root) {
        if (disc[static_cast<std::size_t>(root)] != -1) continue;
        disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
        stack.push_back({root, -1, 0});
        while (!stack.empty()) {
            Frame& f = stack.back();
            const auto& arcs = g.adj[static_cast<std::size_t>(f.v)];
            if (f.next_arc < arcs.size()) {
                Graph::Arc a = arcs[f.next_arc++];
                if (a.edge == f.parent_edge) continue;
                if (disc[static_cast<std::size_t>(a.to)] == -1) {
                    disc[static_cast<std::size_t>(a.to)] = low[static_cast<std::size_t>(a.to)] = timer++;
                    stack.push_back({a.to, a.edge, 0});
                } else {
                    low[static_cast<std::size_t>(f.v)] =
                        std::min(low[static_cast<std::size_t>(f.v)], disc[static_cast<std::size_t>(a.to)]);
                }
            } else {
                int v = f.v;
                int pe = f.parent_edge;
                stack.pop_back();
                if (!stack.empty()) {
                    int p = stack.back().v;
                    low[static_cast<std::size_t>(p)] =
                        std::min(low[static_cast<std::size_t>(p)], low[static_cast<std::size_t>(v)]);
                    if (low[static_cast<std::size_t>(v)] > disc[static_cast<std::size_t>(p)])
                        result.set(static_cast<std::size_t>(pe));
                }
            }
        }
    }
    return result;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<std::vector<int>> comps;
    std::vector<bool> seen(static_cast<std::size_t>(g.n), false);
    for (int v = 0; v < g.n; ++v) {
        if (seen[static_cast<std::size_t>(v)]) continue;
        std::vector<int> comp;
        std::vector<int> queue{v};
        seen[static_cast<std::size_t>(v)] = true;
        while (!queue.empty()) {
            int u = queue.back();
            queue.pop_back();
            comp.push_back(u);
            for (const auto& a : g.adj[static_cast<std::size_t>(u)]) {
                if (!seen[static_cast<std::size_t>(a.to)]) {
                    seen[static_cast<std::size_t>(a.to)] = true;
                    queue.push_back(a.to);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

}  // namespace palette
