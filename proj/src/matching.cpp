#include <algorithm>
#include <numeric>
#include <queue>

#include "palette/graph.hpp"

namespace palette {

namespace {

// Maximum matching in a general graph via blossom contraction, O(V^3).
class Blossom {
public:
    explicit Blossom(const Graph& g)
        : g_(g),
          n_(g.n),
          match_(static_cast<std::size_t>(n_), -1),
          parent_(static_cast<std::size_t>(n_), -1),
          base_(static_cast<std::size_t>(n_), 0),
          used_(static_cast<std::size_t>(n_), false),
          in_blossom_(static_cast<std::size_t>(n_), false) {}

    std::vector<int> solve() {
        for (int v = 0; v < n_; ++v) {
            if (match_[static_cast<std::size_t>(v)] != -1) continue;
            int u = find_augmenting_path(v);
            if (u != -1) augment(u);
        }
        return match_;
    }

private:
    int lowest_common_base(int a, int b) {
        std::vector<bool> mark(static_cast<std::size_t>(n_), false);
        for (;;) {
            a = base_[static_cast<std::size_t>(a)];
            mark[static_cast<std::size_t>(a)] = true;
            if (match_[static_cast<std::size_t>(a)] == -1) break;
            a = parent_[static_cast<std::size_t>(match_[static_cast<std::size_t>(a)])];
        }
        for (;;) {
            b = base_[static_cast<std::size_t>(b)];
            if (mark[static_cast<std::size_t>(b)]) return b;
            b = parent_[static_cast<std::size_t>(match_[static_cast<std::size_t>(b)])];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base_[static_cast<std::size_t>(v)] != b) {
            in_blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(v)])] = true;
            in_blossom_[static_cast<std::size_t>(
                base_[static_cast<std::size_t>(match_[static_cast<std::size_t>(v)])])] = true;
            parent_[static_cast<std::size_t>(v)] = child;
            child = match_[static_cast<std::size_t>(v)];
            v = parent_[static_cast<std::size_t>(match_[static_cast<std::size_t>(v)])];
        }
    }

    int find_augmenting_path(int root) {
        std::fill(used_.begin(), used_.end(), false);
        std::fill(parent_.begin(), parent_.end(), -1);
        std::iota(base_.begin(), base_.end(), 0);
        used_[static_cast<std::size_t>(root)] = true;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (const auto& arc : g_.adj[static_cast<std::size_t>(v)]) {
                int to = arc.to;
                if (base_[static_cast<std::size_t>(v)] == base_[static_cast<std::size_t>(to)] ||
                    match_[static_cast<std::size_t>(v)] == to)
                    continue;
                if (to == root ||
                    (match_[static_cast<std::size_t>(to)] != -1 &&
                     parent_[static_cast<std::size_t>(match_[static_cast<std::size_t>(to)])] != -1)) {
                    // Odd cycle found; contract the blossom.
                    int cur_base = lowest_common_base(v, to);
                    std::fill(in_blossom_.begin(), in_blossom_.end(), false);
                    mark_path(v, cur_base, to);
                    mark_path(to, cur_base, v);
                    for (int i = 0; i < n_; ++i) {
                        if (in_blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(i)])]) {
                            base_[static_cast<std::size_t>(i)] = cur_base;
                            if (!used_[static_cast<std::size_t>(i)]) {
                                used_[static_cast<std::size_t>(i)] = true;
                                q.push(i);
                            }
                        }
                    }
                } else if (parent_[static_cast<std::size_t>(to)] == -1) {
                    parent_[static_cast<std::size_t>(to)] = v;
                    if (match_[static_cast<std::size_t>(to)] == -1) return to;
                    used_[static_cast<std::size_t>(match_[static_cast<std::size_t>(to)])] = true;
                    q.push(match_[static_cast<std::size_t>(to)]);
                }
            }
        }
        return -1;
    }

    void augment(int v) {
        while (v != -1) {
            int pv = parent_[static_cast<std::size_t>(v)];
            int ppv = match_[static_cast<std::size_t>(pv)];
            match_[static_cast<std::size_t>(v)] = pv;
            match_[static_cast<std::size_t>(pv)] = v;
            v = ppv;
        }
    }

    const Graph& g_;
    int n_;
    std::vector<int> match_, parent_, base_;
    std::vector<bool> used_, in_blossom_;
};

}  // namespace

std::optional<EdgeSubset> perfect_matching(const Graph& g) {
    if (g.n % 2 != 0) return std::nullopt;
    if (g.n == 0) return EdgeSubset(0);
    std::vector<int> match = Blossom(g).solve();
    for (int v = 0; v < g.n; ++v)
        if (match[static_cast<std::size_t>(v)] == -1) return std::nullopt;
    EdgeSubset witness(static_cast<std::size_t>(g.m()));
    for (int v = 0; v < g.n; ++v) {
        int u = match[static_cast<std::size_t>(v)];
        if (u < v) continue;
        for (const auto& arc : g.adj[static_cast<std::size_t>(v)]) {
            if (arc.to == u) {
                witness.set(static_cast<std::size_t>(arc.edge));
                break;
            }
        }
    }
    return witness;
}

}  // namespace palette
