#include "palette/families.hpp"

#include <algorithm>

namespace palette {

std::string family_kind_name(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::BridgeStar: return "bridge-star";
        case FamilyKind::QuadraticUnion: return "quadratic-union";
        case FamilyKind::ConnectedQuadratic: return "connected-quadratic";
        case FamilyKind::Branch: return "branch";
    }
    return "unknown";
}

Graph branch_graph(int k) {
    if (k < 1) throw InputError("branch_graph requires k >= 1");
    int n = 2 * k + 3;
    // Removed edges: the path 1-0-2 and a matching on vertices 3..2k+2.
    std::vector<std::pair<int, int>> removed{{0, 1}, {0, 2}};
    for (int v = 3; v + 1 < n; v += 2) removed.push_back({v, v + 1});
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (std::find(removed.begin(), removed.end(), std::make_pair(u, v)) == removed.end())
                edges.push_back({u, v});
    return Graph::from_edges(n, std::move(edges));
}

Graph bridge_star(int k) {
    if (k < 1) throw InputError("bridge_star requires k >= 1");
    Graph branch = branch_graph(k);
    int copies = 2 * k + 1;
    int center = copies * branch.n;
    std::vector<std::pair<int, int>> edges;
    for (int copy = 0; copy < copies; ++copy) {
        int offset = copy * branch.n;
        for (auto [u, v] : branch.edges) edges.push_back({offset + u, offset + v});
    }
    // Center edges last; each copy's vertex 0 is its degree-2k vertex.
    for (int copy = 0; copy < copies; ++copy) edges.push_back({copy * branch.n, center});
    return Graph::from_edges(center + 1, std::move(edges));
}

QuadraticUnion quadratic_union(int k) {
    if (k < 1) throw InputError("quadratic_union requires k >= 1");
    std::vector<std::pair<int, int>> edges;
    int offset = 0;
    for (int i = 1; i <= k; ++i) {
        Graph part = bridge_star(i);
        for (auto [u, v] : part.edges) edges.push_back({offset + u, offset + v});
        offset += part.n;
    }
    QuadraticUnion out;
    out.graph = Graph::from_edges(offset, std::move(edges));
    out.predicted_palette_index = k * k + 3 * k;
    int max_deg = 2 * k + 1;
    if (4 * out.predicted_palette_index != max_deg * max_deg + 4 * max_deg - 5)
        throw ContractError("quadratic prediction identity failed");
    return out;
}

Graph connected_quadratic(int k) {
    QuadraticUnion base = quadratic_union(k);
    const Graph& h = base.graph;
    int apex = h.n;
    std::vector<std::pair<int, int>> edges = h.edges;
    for (const auto& comp : connected_components(h)) edges.push_back({comp.front(), apex});
    return Graph::from_edges(apex + 1, std::move(edges));
}

Graph petersen() {
    // Outer 5-cycle, inner pentagram, spokes.
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) edges.push_back({i, (i + 1) % 5});
    for (int i = 0; i < 5; ++i) edges.push_back({5 + i, 5 + (i + 2) % 5});
    for (int i = 0; i < 5; ++i) edges.push_back({i, 5 + i});
    return Graph::from_edges(10, std::move(edges));
}

}  // namespace palette
