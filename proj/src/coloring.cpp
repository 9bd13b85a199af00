#include "palette/coloring.hpp"

#include <algorithm>
#include <map>

namespace palette {

bool check_proper(const EdgeColoring& c) {
    const Graph& g = *c.owner;
    if (static_cast<int>(c.colors.size()) != g.m())
        throw ContractError("coloring length does not match edge count");
    for (int v = 0; v < g.n; ++v) {
        std::uint64_t seen = 0;
        for (const auto& arc : g.adj[static_cast<std::size_t>(v)]) {
            int col = c.colors[static_cast<std::size_t>(arc.edge)];
            if (col < 1 || col > c.c_max) return false;
            std::uint64_t bit = std::uint64_t{1} << col;
            if (seen & bit) return false;
            seen |= bit;
        }
    }
    return true;
}

PaletteTable palettes(const EdgeColoring& c) {
    if (!check_proper(c)) throw ContractError("palettes() requires a proper coloring");
    const Graph& g = *c.owner;
    std::vector<std::vector<int>> per_vertex(static_cast<std::size_t>(g.n));
    for (int v = 0; v < g.n; ++v) {
        auto& p = per_vertex[static_cast<std::size_t>(v)];
        for (const auto& arc : g.adj[static_cast<std::size_t>(v)])
            p.push_back(c.colors[static_cast<std::size_t>(arc.edge)]);
        std::sort(p.begin(), p.end());
    }
    std::map<std::vector<int>, int> index_of;
    for (int v = 0; v < g.n; ++v) index_of.emplace(per_vertex[static_cast<std::size_t>(v)], 0);
    PaletteTable table;
    for (auto& [pal, idx] : index_of) {
        idx = table.t();
        table.palettes.push_back(pal);
    }
    table.vertex_palette.resize(static_cast<std::size_t>(g.n));
    for (int v = 0; v < g.n; ++v)
        table.vertex_palette[static_cast<std::size_t>(v)] = index_of[per_vertex[static_cast<std::size_t>(v)]];
    return table;
}

std::string exactness_label(Exactness e, int c_max) {
    if (e == Exactness::Unconditional) return "exact-unconditional";
    return "exact-for-bounded-colors(" + std::to_string(c_max) + ")";
}

}  // namespace palette
