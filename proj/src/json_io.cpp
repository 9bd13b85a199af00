#include "palette/json_io.hpp"

#include <cstdio>

namespace palette {

json to_json(const EdgeColoring& c) {
    return json{{"c_max", c.c_max}, {"colors", c.colors}};
}

EdgeColoring coloring_from_json(const Graph& g, const json& j) {
    EdgeColoring c;
    c.owner = &g;
    c.c_max = j.at("c_max").get<int>();
    c.colors = j.at("colors").get<std::vector<int>>();
    if (static_cast<int>(c.colors.size()) != g.m())
        throw InputError("coloring length does not match edge count");
    return c;
}

json to_json(const EdgeSubset& s) { return json{{"edges", s.to_indices()}}; }

json to_json(const PaletteTable& pt) {
    return json{{"palettes", pt.palettes}, {"vertex_palette", pt.vertex_palette}};
}

json to_json(const EvenVerdict& v) {
    json j;
    switch (v.kind) {
        case EvenVerdict::Yes:
            j["kind"] = "yes";
            j["witness"] = to_json(*v.witness);
            break;
        case EvenVerdict::NoStructural:
            j["kind"] = "no-structural";
            j["isolated_after_bridge_deletion"] = v.structural_vertex;
            break;
        case EvenVerdict::NoExhaustive:
            j["kind"] = "no-exhaustive";
            j["search_nodes"] = v.nodes_explored;
            break;
        case EvenVerdict::Undecided:
            j["kind"] = "undecided";
            j["search_nodes"] = v.nodes_explored;
            break;
    }
    return j;
}

json to_json(const LowerBoundCert& cert) {
    return json{{"kind", "LOWER_BOUND_GT_DELTA"},
                {"delta", cert.delta},
                {"bound", "palette_index > delta"},
                {"no_spanning_even_verdict", to_json(cert.no_verdict)},
                {"rule", "no-spanning-even-subgraph-implies-gt-min-degree"}};
}

json to_json(const OddRegularMaxCert& cert) {
    return json{{"kind", "EXACT_ODD_REGULAR_MAX"},
                {"r", cert.r},
                {"value", cert.value},
                {"lower", to_json(cert.lower)},
                {"upper_witness", to_json(cert.upper_witness)},
                {"upper_palettes", cert.upper_palettes},
                {"rule", "odd-regular-no-spanning-even-subgraph"}};
}

json to_json(const CubicClassCert& cert) {
    json j{{"kind", "CUBIC_CLASS"},
           {"value", cert.value},
           {"three_edge_colorable", cert.three_edge_colorable},
           {"has_one_factor", cert.has_one_factor},
           {"rule", "cubic-classification"}};
    if (cert.coloring) j["coloring"] = to_json(*cert.coloring);
    if (cert.matching) j["matching"] = to_json(*cert.matching);
    return j;
}

json to_json(const Extraction& ex) {
    return json{{"edges", ex.edges.to_indices()},
                {"color_set", ex.color_set.to_colors()},
                {"iterations", ex.iterations}};
}

json family_manifest(FamilyKind kind, int k, const Graph& g) {
    json j{{"kind", family_kind_name(kind)},
           {"k", k},
           {"n", g.n},
           {"m", g.m()}};
    switch (kind) {
        case FamilyKind::BridgeStar:
            j["regular_degree"] = 2 * k + 1;
            j["predicted_palette_index"] = 2 * k + 2;
            j["rule"] = "odd-regular-no-spanning-even-subgraph";
            break;
        case FamilyKind::QuadraticUnion:
            j["max_degree"] = 2 * k + 1;
            j["predicted_palette_index"] = k * k + 3 * k;
            j["rule"] = "component-additivity-distinct-degrees";
            break;
        case FamilyKind::ConnectedQuadratic:
            j["max_degree"] = 2 * k + 2;
            j["palette_index_lower_bound_exclusive"] = k * k + 3 * k;
            j["rule"] = "apex-over-quadratic-union";
            break;
        case FamilyKind::Branch:
            j["distinguished_vertex"] = 0;
            j["distinguished_degree"] = 2 * k;
            j["other_degree"] = 2 * k + 1;
            break;
    }
    return j;
}

std::string input_digest(const std::string& text) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

}  // namespace palette
