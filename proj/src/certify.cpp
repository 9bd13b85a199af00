#include "palette/certify.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

namespace palette {

int ColorSet::count() const { return std::popcount(bits); }

std::vector<int> ColorSet::to_colors() const {
    std::vector<int> out;
    for (int c = 1; c <= c_max; ++c)
        if (contains(c)) out.push_back(c);
    return out;
}

ColorSet ColorSet::from_colors(int c_max, const std::vector<int>& colors) {
    ColorSet s;
    s.c_max = c_max;
    for (int c : colors) {
        if (c < 1 || c > c_max) throw InputError("color outside the declared universe");
        s.add(c);
    }
    return s;
}

namespace {

std::vector<std::uint64_t> palette_masks(const PaletteTable& pt) {
    std::vector<std::uint64_t> masks;
    masks.reserve(pt.palettes.size());
    for (const auto& pal : pt.palettes) {
        std::uint64_t m = 0;
        for (int c : pal) m |= std::uint64_t{1} << c;
        masks.push_back(m);
    }
    return masks;
}

void check_universe(const EdgeColoring& c, const ColorSet& a) {
    if (a.c_max != c.c_max) throw ContractError("color set universe does not match coloring");
    if (c.c_max > 62) throw InputError("color universe larger than 62 not supported");
}

}  // namespace

ParityVector phi(const EdgeColoring& c, const PaletteTable& pt, const ColorSet& a) {
    check_universe(c, a);
    ParityVector out(pt.palettes.size(), 0);
    auto masks = palette_masks(pt);
    for (std::size_t i = 0; i < masks.size(); ++i)
        out[i] = static_cast<std::uint8_t>(std::popcount(masks[i] & a.bits) & 1);
    return out;
}

bool phi_is_even_test(const Graph& g, const EdgeColoring& c, const PaletteTable& pt,
                      const ColorSet& a) {
    (void)g;
    ParityVector p = phi(c, pt, a);
    return std::all_of(p.begin(), p.end(), [](std::uint8_t b) { return b == 0; });
}

EdgeSubset edges_with_colors(const Graph& g, const EdgeColoring& c, const ColorSet& a) {
    check_universe(c, a);
    EdgeSubset s(static_cast<std::size_t>(g.m()));
    for (int e = 0; e < g.m(); ++e)
        if (a.contains(c.colors[static_cast<std::size_t>(e)])) s.set(static_cast<std::size_t>(e));
    return s;
}

namespace {

bool all_even_at_least_two(const Graph& g, const EdgeSubset& s) {
    std::vector<int> deg(static_cast<std::size_t>(g.n), 0);
    for (int e = 0; e < g.m(); ++e) {
        if (!s.test(static_cast<std::size_t>(e))) continue;
        ++deg[static_cast<std::size_t>(g.edges[static_cast<std::size_t>(e)].first)];
        ++deg[static_cast<std::size_t>(g.edges[static_cast<std::size_t>(e)].second)];
    }
    for (int v = 0; v < g.n; ++v)
        if (deg[static_cast<std::size_t>(v)] < 2 || deg[static_cast<std::size_t>(v)] % 2 != 0)
            return false;
    return true;
}

// Nonempty subsets of the given colors, ordered by increasing size then
// lexicographically on the sorted color lists.
std::vector<std::vector<int>> ordered_subsets(const std::vector<int>& colors) {
    std::vector<std::vector<int>> subsets;
    int k = static_cast<int>(colors.size());
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
        std::vector<int> s;
        for (int i = 0; i < k; ++i)
            if (mask & (1u << i)) s.push_back(colors[static_cast<std::size_t>(i)]);
        subsets.push_back(std::move(s));
    }
    std::sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return subsets;
}

}  // namespace

Extraction extract_spanning_even(const Graph& g, const EdgeColoring& c) {
    if (!check_proper(c)) throw ContractError("extract_spanning_even requires a proper coloring");
    if (c.c_max > 62) throw InputError("color universe larger than 62 not supported");
    PaletteTable pt = palettes(c);
    auto [delta, big_delta] = min_max_degree(g);
    if (big_delta < 2) throw ContractError("extract_spanning_even requires Delta >= 2");
    if (pt.t() > delta)
        throw ContractError("extract_spanning_even requires t <= delta, got t=" +
                            std::to_string(pt.t()) + " delta=" + std::to_string(delta));

    Extraction out;
    out.color_set.c_max = c.c_max;

    // The working universe is the set of colors that actually occur on an
    // edge; declared-but-unused colors never help (their indicator sets map
    // to zero and would stall the growth step below).
    std::uint64_t universe = 0;
    for (int e = 0; e < g.m(); ++e)
        universe |= std::uint64_t{1} << c.colors[static_cast<std::size_t>(e)];
    int used_count = std::popcount(universe);

    if (used_count == delta) {
        // Only possible for a delta-regular class-1 coloring: every palette is
        // the full used set. For even delta the whole graph is the witness;
        // for odd delta, drop the top color class (a perfect matching).
        int top = 0;
        for (int col = 1; col <= c.c_max; ++col)
            if ((universe >> col) & 1) top = col;
        for (int col = 1; col <= c.c_max; ++col)
            if (((universe >> col) & 1) && (delta % 2 == 0 || col != top))
                out.color_set.add(col);
        out.edges = edges_with_colors(g, c, out.color_set);
        if (!all_even_at_least_two(g, out.edges))
            throw ContractError("class-1 special case produced an invalid witness");
        return out;
    }

    auto masks = palette_masks(pt);

    std::uint64_t a_bits = 0;
    for (;;) {
        // Degrees within G_A.
        std::vector<int> deg_a(static_cast<std::size_t>(g.n), 0);
        for (int e = 0; e < g.m(); ++e) {
            if (!((a_bits >> c.colors[static_cast<std::size_t>(e)]) & 1)) continue;
            ++deg_a[static_cast<std::size_t>(g.edges[static_cast<std::size_t>(e)].first)];
            ++deg_a[static_cast<std::size_t>(g.edges[static_cast<std::size_t>(e)].second)];
        }
        int isolated = -1;
        for (int v = 0; v < g.n; ++v)
            if (deg_a[static_cast<std::size_t>(v)] == 0) {
                isolated = v;
                break;
            }
        if (isolated == -1) break;

        if (out.iterations >= c.c_max)
            throw ContractError("extraction exceeded the |C| iteration bound");
        ++out.iterations;

        std::uint64_t pj = masks[static_cast<std::size_t>(
            pt.vertex_palette[static_cast<std::size_t>(isolated)])];
        if (pj & a_bits)
            throw ContractError("isolated vertex palette unexpectedly meets A");

        // R_j: the delta smallest palette colors plus alpha (a used color).
        std::vector<int> r_colors;
        int pj_size = std::popcount(pj);
        if (pj_size > delta) {
            for (int col = 1; col <= c.c_max && static_cast<int>(r_colors.size()) < delta + 1;
                 ++col)
                if ((pj >> col) & 1) r_colors.push_back(col);
        } else {
            for (int col = 1; col <= c.c_max; ++col)
                if ((pj >> col) & 1) r_colors.push_back(col);
            int alpha = -1;
            for (int col = 1; col <= c.c_max; ++col)
                if (((universe >> col) & 1) && !((pj >> col) & 1)) {
                    alpha = col;
                    break;
                }
            if (alpha == -1) throw ContractError("no alpha available outside the palette");
            r_colors.push_back(alpha);
            std::sort(r_colors.begin(), r_colors.end());
        }

        // First phi-collision pair among the nonempty subsets of R_j.
        std::map<ParityVector, std::uint64_t> first_with_image;
        std::uint64_t i1 = 0, i2 = 0;
        for (const auto& subset : ordered_subsets(r_colors)) {
            ColorSet cs = ColorSet::from_colors(c.c_max, subset);
            ParityVector image = phi(c, pt, cs);
            auto [it, inserted] = first_with_image.emplace(image, cs.bits);
            if (!inserted) {
                i1 = it->second;
                i2 = cs.bits;
                break;
            }
        }
        if (i2 == 0)
            throw ContractError("pigeonhole collision missing; t <= delta violated internally");

        std::uint64_t toggle = i1 ^ i2;
        std::uint64_t next = a_bits ^ toggle;
        if (std::popcount(next) <= std::popcount(a_bits))
            throw ContractError("extraction failed to grow the color set");
        a_bits = next;
        if (a_bits & ~universe) throw ContractError("color set escaped the universe");
    }

    out.color_set.bits = a_bits;
    out.edges = edges_with_colors(g, c, out.color_set);
    if (!all_even_at_least_two(g, out.edges))
        throw ContractError("extraction produced an invalid witness");
    return out;
}

namespace {

void reject_isolated_vertices(const Graph& g) {
    for (int v = 0; v < g.n; ++v)
        if (degree(g, v) == 0)
            throw InputError("graphs with isolated vertices are not accepted by the certifier");
}

}  // namespace

LowerBoundResult certify_lower_bound(const Graph& g) {
    if (g.n < 1) throw InputError("certify_lower_bound requires n >= 1");
    reject_isolated_vertices(g);
    LowerBoundResult result;
    auto [delta, big_delta] = min_max_degree(g);
    if (big_delta < 2) return result;  // rule does not apply
    EvenVerdict verdict = spanning_even_no_isolated(g);
    switch (verdict.kind) {
        case EvenVerdict::Yes:
            return result;  // rule does not apply
        case EvenVerdict::Undecided:
            result.status = CertStatus::Undecided;
            return result;
        case EvenVerdict::NoStructural:
        case EvenVerdict::NoExhaustive:
            result.status = CertStatus::Certified;
            result.cert = LowerBoundCert{delta, std::move(verdict)};
            return result;
    }
    return result;
}

OddRegularMaxResult palette_index_odd_regular_max(const Graph& g) {
    reject_isolated_vertices(g);
    if (!is_regular(g) || g.n == 0)
        throw InputError("palette_index_odd_regular_max requires a regular graph");
    int r = degree(g, 0);
    if (r % 2 == 0 || r < 3)
        throw InputError("palette_index_odd_regular_max requires odd regularity r >= 3");

    OddRegularMaxResult result;
    EvenVerdict verdict = spanning_even_no_isolated(g);
    if (verdict.kind == EvenVerdict::Yes) return result;
    if (verdict.kind == EvenVerdict::Undecided) {
        result.status = CertStatus::Undecided;
        return result;
    }

    OddRegularMaxCert cert;
    cert.r = r;
    cert.value = r + 1;
    cert.lower = LowerBoundCert{r, std::move(verdict)};
    cert.upper_witness = vizing_coloring(g);
    cert.upper_palettes = palettes(cert.upper_witness).t();
    if (cert.upper_witness.c_max > r + 1 || cert.upper_palettes > r + 1)
        throw ContractError("Vizing upper-bound witness exceeds r+1");
    result.status = CertStatus::Certified;
    result.cert = std::move(cert);
    return result;
}

CubicClassCert classify_cubic(const Graph& g) {
    if (g.n == 0 || !is_regular(g) || degree(g, 0) != 3)
        throw InputError("classify_cubic requires a cubic graph");
    if (connected_components(g).size() != 1)
        throw InputError("classify_cubic requires a connected graph");

    CubicClassCert cert;
    auto coloring = k_edge_coloring(g, 3);
    auto matching = perfect_matching(g);
    cert.three_edge_colorable = coloring.has_value();
    cert.has_one_factor = matching.has_value();
    cert.coloring = std::move(coloring);
    cert.matching = std::move(matching);
    cert.value = cert.three_edge_colorable ? 1 : (cert.has_one_factor ? 3 : 4);
    return cert;
}

int union_palette_index_distinct_degrees(
    const std::vector<std::pair<const Graph*, int>>& components) {
    if (components.empty()) throw InputError("no components given");
    std::vector<std::set<int>> degree_sets;
    for (const auto& [g, value] : components) {
        (void)value;
        std::set<int> degs;
        for (int v = 0; v < g->n; ++v) degs.insert(degree(*g, v));
        degree_sets.push_back(std::move(degs));
    }
    for (std::size_t i = 0; i < degree_sets.size(); ++i)
        for (std::size_t j = i + 1; j < degree_sets.size(); ++j)
            for (int d : degree_sets[i])
                if (degree_sets[j].count(d))
                    throw InputError("component degree sets overlap; additivity not certified");
    int sum = 0;
    for (const auto& [g, value] : components) {
        (void)g;
        sum += value;
    }
    return sum;
}

}  // namespace palette
