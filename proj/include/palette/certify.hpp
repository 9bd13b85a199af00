#ifndef PALETTE_CERTIFY_HPP
#define PALETTE_CERTIFY_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "palette/coloring.hpp"
#include "palette/even_space.hpp"
#include "palette/graph.hpp"

namespace palette {

// Subset of the color universe {1..c_max}; color i occupies bit i.
struct ColorSet {
    std::uint64_t bits = 0;
    int c_max = 0;

    bool contains(int color) const { return (bits >> color) & 1u; }
    void add(int color) { bits |= std::uint64_t{1} << color; }
    int count() const;
    std::vector<int> to_colors() const;
    static ColorSet from_colors(int c_max, const std::vector<int>& colors);
};

// One parity bit per palette of the associated PaletteTable.
using ParityVector = std::vector<std::uint8_t>;

// Parity of |P_i intersect a| for every palette P_i.
ParityVector phi(const EdgeColoring& c, const PaletteTable& pt, const ColorSet& a);

// True iff phi(...) is all-zero; equivalent to the edges colored within a
// inducing an all-even-degree subgraph.
bool phi_is_even_test(const Graph& g, const EdgeColoring& c, const PaletteTable& pt,
                      const ColorSet& a);

// Edge set carrying all edges whose color lies in a.
EdgeSubset edges_with_colors(const Graph& g, const EdgeColoring& c, const ColorSet& a);

struct Extraction {
    EdgeSubset edges;       // spanning even subgraph, every vertex degree even >= 2
    ColorSet color_set;     // the inducing color subset A
    int iterations = 0;     // growth steps taken (<= |C|)
};

// Constructive extraction of a spanning even subgraph without isolated
// vertices from any proper coloring with t <= delta palettes (Delta >= 2).
// Grows an even-inducing color set from the empty set; each step picks an
// isolated vertex, builds R_j from delta palette elements plus the extra
// color alpha, and toggles by the symmetric difference of the first
// phi-collision pair among R_j's nonempty subsets.
Extraction extract_spanning_even(const Graph& g, const EdgeColoring& c);

enum class CertKind {
    LowerBoundGtDelta,
    ExactOddRegularMax,
    CubicClass,
    UpperBoundVizing,
};

enum class CertStatus { Certified, NotApplicable, Undecided };

struct LowerBoundCert {
    int delta = 0;  // certified: palette index > delta
    EvenVerdict no_verdict;
};

struct LowerBoundResult {
    CertStatus status = CertStatus::NotApplicable;
    std::optional<LowerBoundCert> cert;
};

// Palette index > delta whenever Delta >= 2 and no spanning even subgraph
// without isolated vertices exists.
LowerBoundResult certify_lower_bound(const Graph& g);

struct OddRegularMaxCert {
    int r = 0;      // degree of regularity, odd
    int value = 0;  // exact palette index r + 1
    LowerBoundCert lower;
    EdgeColoring upper_witness;  // (r+1)-coloring, at most r+1 palettes
    int upper_palettes = 0;
};

struct OddRegularMaxResult {
    CertStatus status = CertStatus::NotApplicable;
    std::optional<OddRegularMaxCert> cert;
};

// Exact value r+1 for odd r-regular graphs with a NO verdict, with dual
// lower/upper evidence.
OddRegularMaxResult palette_index_odd_regular_max(const Graph& g);

struct CubicClassCert {
    int value = 0;  // 1, 3 or 4
    bool three_edge_colorable = false;
    bool has_one_factor = false;
    std::optional<EdgeColoring> coloring;  // 3-edge-coloring when value == 1
    std::optional<EdgeSubset> matching;    // 1-factor when present
};

// Exact palette index of a connected cubic graph.
CubicClassCert classify_cubic(const Graph& g);

// Sum of exact component values; valid only when the per-component degree
// sets are pairwise disjoint.
int union_palette_index_distinct_degrees(
    const std::vector<std::pair<const Graph*, int>>& components);

}  // namespace palette

#endif
