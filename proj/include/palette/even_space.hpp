#ifndef PALETTE_EVEN_SPACE_HPP
#define PALETTE_EVEN_SPACE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "palette/graph.hpp"

namespace palette {

// Basis of the GF(2) space of edge sets with all vertex degrees even
// (fundamental cycles of a spanning forest).
struct CycleSpaceBasis {
    std::vector<EdgeSubset> basis;
    int dimension = 0;  // m - n + #components
};

CycleSpaceBasis cycle_space_basis(const Graph& g);

bool is_even_subgraph(const Graph& g, const EdgeSubset& s);

// Verdict for "does g have a spanning even subgraph without isolated
// vertices", i.e. an edge set with every vertex degree even and >= 2.
struct EvenVerdict {
    enum Kind {
        Yes,           // witness attached
        NoStructural,  // a vertex whose every incident edge is a bridge
        NoExhaustive,  // completed branch-and-bound search, no solution
        Undecided,     // node budget exhausted
    };
    Kind kind = Undecided;
    std::optional<EdgeSubset> witness;
    int structural_vertex = -1;
    std::uint64_t nodes_explored = 0;
};

// Exact decision at desk scale. Bridges are deleted up front (no even
// subgraph contains a bridge); the rest is branch-and-bound over edge
// inclusion with GF(2) parity-feasibility propagation and coverage pruning.
// node_limit 0 means: use PALETTE_LAB_NODE_LIMIT from the environment, or a
// built-in default.
EvenVerdict spanning_even_no_isolated(const Graph& g, std::uint64_t node_limit = 0);

}  // namespace palette

#endif
