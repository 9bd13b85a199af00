#ifndef PALETTE_COLORING_HPP
#define PALETTE_COLORING_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "palette/graph.hpp"

namespace palette {

// Colors are 1-based; c_max declares the universe {1,...,c_max}, which may be
// larger than the set of colors actually used.
struct EdgeColoring {
    const Graph* owner = nullptr;
    int c_max = 0;
    std::vector<int> colors;  // colors[e] for edge id e
};

// The distinct palettes of a proper coloring, lexicographically sorted, plus
// each vertex's palette index.
struct PaletteTable {
    std::vector<std::vector<int>> palettes;  // each sorted ascending
    std::vector<int> vertex_palette;

    int t() const { return static_cast<int>(palettes.size()); }
};

bool check_proper(const EdgeColoring& c);

PaletteTable palettes(const EdgeColoring& c);

// Proper coloring with at most Delta+1 colors (fan rotation / Kempe chains).
// Deterministic for a fixed edge order.
EdgeColoring vizing_coloring(const Graph& g);

// Exact decision by complete backtracking search; witness on success.
std::optional<EdgeColoring> k_edge_coloring(const Graph& g, int k);

enum class Exactness {
    Unconditional,       // value is the palette index, full stop
    BoundedColors,       // minimum over colorings restricted to c_max colors
};

std::string exactness_label(Exactness e, int c_max);

struct PaletteIndexResult {
    int value = 0;
    EdgeColoring witness;
    Exactness flag = Exactness::BoundedColors;
};

// Minimum number of distinct palettes over proper colorings with colors in
// {1,...,c_max}. Deterministic branch-and-bound; see the solver for the
// pruning rules.
PaletteIndexResult palette_index_exact(const Graph& g, int c_max);

}  // namespace palette

#endif
