#ifndef PALETTE_FAMILIES_HPP
#define PALETTE_FAMILIES_HPP

#include <string>

#include "palette/graph.hpp"

namespace palette {

enum class FamilyKind { BridgeStar, QuadraticUnion, ConnectedQuadratic, Branch };

std::string family_kind_name(FamilyKind kind);

// Building block for bridge_star: 2k+3 vertices, one distinguished vertex of
// degree 2k (vertex 0), all others of degree 2k+1. K_{2k+3} minus a 2-edge
// path centered at vertex 0 and a perfect matching on the remaining 2k
// vertices.
Graph branch_graph(int k);

// Connected (2k+1)-regular graph whose 2k+1 center-incident edges are all
// bridges; its palette index is exactly 2k+2. Center vertex has the highest
// id; edge order is branches first, then the center edges.
Graph bridge_star(int k);

struct QuadraticUnion {
    Graph graph;  // disjoint union of bridge_star(1..k)
    int predicted_palette_index = 0;  // k^2 + 3k
};

QuadraticUnion quadratic_union(int k);

// quadratic_union(k) plus an apex vertex adjacent to the smallest-id vertex
// of each component; connected, maximum degree 2k+2.
Graph connected_quadratic(int k);

// Standard test instance: 3-regular, girth 5, not 3-edge-colorable.
Graph petersen();

}  // namespace palette

#endif
