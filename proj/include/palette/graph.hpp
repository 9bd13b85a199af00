#ifndef PALETTE_GRAPH_HPP
#define PALETTE_GRAPH_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "palette/common.hpp"
#include "palette/edge_subset.hpp"

namespace palette {

// Simple undirected graph with dense 0-based vertex ids and stable edge ids
// (edge id = position in the input edge list). Immutable after construction.
struct Graph {
    struct Arc {
        int to;
        int edge;
    };

    int n = 0;
    std::vector<std::pair<int, int>> edges;  // each pair stored with first < second
    std::vector<std::vector<Arc>> adj;

    int m() const { return static_cast<int>(edges.size()); }

    // Validates simplicity (no loops, no parallel edges) and builds adjacency.
    static Graph from_edges(int n, std::vector<std::pair<int, int>> edge_list);
};

int degree(const Graph& g, int v);
std::pair<int, int> min_max_degree(const Graph& g);  // (delta, Delta)

bool is_regular(const Graph& g);

// Tarjan lowlink; an edge is a bridge iff its removal disconnects its component.
EdgeSubset bridges(const Graph& g);

// Maximal connected vertex sets, ordered by smallest member; members ascending.
std::vector<std::vector<int>> connected_components(const Graph& g);

// Exact maximum matching (blossom contraction); returns the matched edge set
// when it covers every vertex, nothing otherwise.
std::optional<EdgeSubset> perfect_matching(const Graph& g);

// graph6 text format, bit-exact with the published encoding.
Graph parse_graph6(const std::string& text);
std::string to_graph6(const Graph& g);

// Plain "u v" lines, optional "n m" header.
Graph parse_edge_list(const std::string& text);

}  // namespace palette

#endif
