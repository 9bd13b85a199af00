#include <doctest.h>

#include <optional>
#include <random>
#include <set>

#include "palette/even_space.hpp"
#include "palette/families.hpp"
#include "test_support.hpp"

using namespace palette;
using namespace testsupport;

namespace {

// Oracle: enumerate the full cycle space and look for an element with every
// vertex degree >= 2 (cycle-space elements are even by construction).
std::optional<EdgeSubset> brute_force_spanning_even(const Graph& g) {
    CycleSpaceBasis basis = cycle_space_basis(g);
    REQUIRE(basis.dimension <= 22);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << basis.dimension); ++mask) {
        EdgeSubset s(static_cast<std::size_t>(g.m()));
        for (int i = 0; i < basis.dimension; ++i)
            if ((mask >> i) & 1) s ^= basis.basis[static_cast<std::size_t>(i)];
        std::vector<int> deg(static_cast<std::size_t>(g.n), 0);
        for (int e = 0; e < g.m(); ++e) {
            if (!s.test(static_cast<std::size_t>(e))) continue;
            ++deg[static_cast<std::size_t>(g.edges[static_cast<std::size_t>(e)].first)];
            ++deg[static_cast<std::size_t>(g.edges[static_cast<std::size_t>(e)].second)];
        }
        bool good = true;
        for (int v = 0; v < g.n && good; ++v)
            if (deg[static_cast<std::size_t>(v)] < 2) good = false;
        if (good) return s;
    }
    return std::nullopt;
}

bool witness_valid(const Graph& g, const EdgeSubset& s) {
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

}  // namespace

TEST_CASE("cycle space basis dimensions") {
    CHECK(cycle_space_basis(path_graph(5)).dimension == 0);

    CycleSpaceBasis c5 = cycle_space_basis(cycle_graph(5));
    REQUIRE(c5.dimension == 1);
    CHECK(c5.basis[0].count() == 5);

    CycleSpaceBasis k4 = cycle_space_basis(complete_graph(4));
    CHECK(k4.dimension == 3);
    Graph g4 = complete_graph(4);
    for (const auto& b : k4.basis) CHECK(is_even_subgraph(g4, b));

    // dimension = m - n + components, also on disconnected graphs
    std::mt19937 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = random_graph(9, 0.25, rng);
        CycleSpaceBasis b = cycle_space_basis(g);
        CHECK(b.dimension ==
              g.m() - g.n + static_cast<int>(connected_components(g).size()));
    }
}

TEST_CASE("is_even_subgraph") {
    Graph c5 = cycle_graph(5);
    CHECK(is_even_subgraph(c5, EdgeSubset(5)));
    EdgeSubset all(5);
    for (int e = 0; e < 5; ++e) all.set(static_cast<std::size_t>(e));
    CHECK(is_even_subgraph(c5, all));

    Graph p3 = path_graph(3);
    EdgeSubset one(2);
    one.set(0);
    CHECK_FALSE(is_even_subgraph(p3, one));
}

TEST_CASE("cycle space spans exactly the even subgraphs") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        Graph g = random_graph(7, 0.4, rng);
        CycleSpaceBasis basis = cycle_space_basis(g);
        if (basis.dimension > 12 || g.m() > 16) continue;

        // Every span element is even.
        std::set<std::vector<int>> span_elements;
        for (std::uint32_t mask = 0; mask < (1u << basis.dimension); ++mask) {
            EdgeSubset s(static_cast<std::size_t>(g.m()));
            for (int i = 0; i < basis.dimension; ++i)
                if ((mask >> i) & 1) s ^= basis.basis[static_cast<std::size_t>(i)];
            CHECK(is_even_subgraph(g, s));
            span_elements.insert(s.to_indices());
        }
        CHECK(span_elements.size() == (std::size_t{1} << basis.dimension));

        // Every even edge set lies in the span.
        for (std::uint32_t mask = 0; mask < (1u << g.m()); ++mask) {
            EdgeSubset s(static_cast<std::size_t>(g.m()));
            for (int e = 0; e < g.m(); ++e)
                if ((mask >> e) & 1) s.set(static_cast<std::size_t>(e));
            if (is_even_subgraph(g, s)) CHECK(span_elements.count(s.to_indices()) == 1);
        }
    }
}

TEST_CASE("no even subgraph contains a bridge") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        Graph g = random_graph(8, 0.3, rng);
        CycleSpaceBasis basis = cycle_space_basis(g);
        if (basis.dimension > 12) continue;
        EdgeSubset b = bridges(g);
        for (std::uint32_t mask = 0; mask < (1u << basis.dimension); ++mask) {
            EdgeSubset s(static_cast<std::size_t>(g.m()));
            for (int i = 0; i < basis.dimension; ++i)
                if ((mask >> i) & 1) s ^= basis.basis[static_cast<std::size_t>(i)];
            CHECK_FALSE((s & b).any());
        }
    }
}

TEST_CASE("spanning_even_no_isolated on the named instances") {
    Graph k4 = complete_graph(4);
    EvenVerdict v = spanning_even_no_isolated(k4);
    REQUIRE(v.kind == EvenVerdict::Yes);
    CHECK(witness_valid(k4, *v.witness));

    EvenVerdict tree = spanning_even_no_isolated(path_graph(4));
    CHECK(tree.kind == EvenVerdict::NoStructural);

    EvenVerdict bs = spanning_even_no_isolated(bridge_star(1));
    CHECK(bs.kind == EvenVerdict::NoStructural);
    CHECK(bs.structural_vertex == bridge_star(1).n - 1);  // the center

    Graph pete = petersen();
    EvenVerdict pv = spanning_even_no_isolated(pete);
    REQUIRE(pv.kind == EvenVerdict::Yes);
    CHECK(witness_valid(pete, *pv.witness));

    EvenVerdict lone = spanning_even_no_isolated(Graph::from_edges(1, {}));
    CHECK(lone.kind == EvenVerdict::NoStructural);
}

TEST_CASE("spanning_even_no_isolated agrees with brute force") {
    std::vector<Graph> corpus;
    corpus.push_back(path_graph(2));
    corpus.push_back(path_graph(7));
    corpus.push_back(star_graph(4));
    corpus.push_back(cycle_graph(3));
    corpus.push_back(cycle_graph(8));
    corpus.push_back(complete_graph(4));
    corpus.push_back(complete_graph(5));
    corpus.push_back(petersen());
    corpus.push_back(bridge_star(1));
    corpus.push_back(complete_bipartite(2, 3));
    corpus.push_back(complete_bipartite(3, 3));
    std::mt19937 rng(23);
    while (corpus.size() < 30) {
        Graph g = random_graph(8, 0.35, rng);
        if (g.n == 0) continue;
        if (cycle_space_basis(g).dimension <= 18) corpus.push_back(std::move(g));
    }
    for (const Graph& g : corpus) {
        EvenVerdict v = spanning_even_no_isolated(g);
        auto oracle = brute_force_spanning_even(g);
        if (oracle) {
            REQUIRE(v.kind == EvenVerdict::Yes);
            CHECK(witness_valid(g, *v.witness));
        } else {
            CHECK((v.kind == EvenVerdict::NoStructural || v.kind == EvenVerdict::NoExhaustive));
        }
    }
}

TEST_CASE("node budget exhaustion reports undecided, never a wrong answer") {
    // An instance where neither warm start works: the answer is Yes, but the
    // search needs about a dozen nodes to find it.
    Graph g = Graph::from_edges(
        6, {{0, 2}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {4, 5}});
    EvenVerdict full = spanning_even_no_isolated(g);
    REQUIRE(full.kind == EvenVerdict::Yes);
    CHECK(full.nodes_explored > 2);

    EvenVerdict starved = spanning_even_no_isolated(g, 2);
    CHECK(starved.kind == EvenVerdict::Undecided);
    CHECK_FALSE(starved.witness.has_value());
}
