#include <doctest.h>

#include <algorithm>
#include <random>

#include "palette/families.hpp"
#include "palette/graph.hpp"
#include "test_support.hpp"

using namespace palette;
using namespace testsupport;

TEST_CASE("degree basics") {
    Graph k4 = complete_graph(4);
    CHECK(degree(k4, 0) == 3);
    Graph single = Graph::from_edges(2, {{0, 1}});
    CHECK(degree(single, 0) == 1);
    Graph c5 = cycle_graph(5);
    for (int v = 0; v < 5; ++v) CHECK(degree(c5, v) == 2);
    CHECK_THROWS_AS(degree(k4, 4), InputError);
    CHECK_THROWS_AS(degree(k4, -1), InputError);
}

TEST_CASE("min and max degree") {
    CHECK(min_max_degree(complete_graph(4)) == std::pair<int, int>{3, 3});
    CHECK(min_max_degree(star_graph(3)) == std::pair<int, int>{1, 3});
    CHECK(min_max_degree(path_graph(3)) == std::pair<int, int>{1, 2});
    CHECK_THROWS_AS(min_max_degree(Graph::from_edges(0, {})), InputError);
}

TEST_CASE("graph construction rejects non-simple input") {
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 0}}), InputError);
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 1}, {1, 0}}), InputError);
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 2}}), InputError);
}

TEST_CASE("degree sum equals twice the edge count") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = random_graph(10, 0.4, rng);
        int sum = 0;
        for (int v = 0; v < g.n; ++v) sum += degree(g, v);
        CHECK(sum == 2 * g.m());
    }
}

namespace {

// Oracle: e is a bridge iff removing it increases the component count.
bool bridge_by_recomputation(const Graph& g, int e) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < g.m(); ++i)
        if (i != e) edges.push_back(g.edges[static_cast<std::size_t>(i)]);
    Graph reduced = Graph::from_edges(g.n, std::move(edges));
    return connected_components(reduced).size() > connected_components(g).size();
}

}  // namespace

TEST_CASE("bridges in trees and cycles") {
    Graph tree = path_graph(6);
    EdgeSubset b = bridges(tree);
    CHECK(b.count() == static_cast<std::size_t>(tree.m()));

    CHECK(bridges(cycle_graph(5)).count() == 0);
}

TEST_CASE("bridges of bridge_star(1) are exactly the center edges") {
    Graph g = bridge_star(1);
    EdgeSubset b = bridges(g);
    for (int e = 0; e < g.m(); ++e) CHECK(b.test(static_cast<std::size_t>(e)) ==
                                          bridge_by_recomputation(g, e));
    CHECK(b.count() == 3);
    for (int e = g.m() - 3; e < g.m(); ++e) CHECK(b.test(static_cast<std::size_t>(e)));
}

TEST_CASE("bridges agree with recomputation on random graphs") {
    std::mt19937 rng(21);
    for (int trial = 0; trial < 15; ++trial) {
        Graph g = random_graph(9, 0.25, rng);
        EdgeSubset b = bridges(g);
        for (int e = 0; e < g.m(); ++e)
            CHECK(b.test(static_cast<std::size_t>(e)) == bridge_by_recomputation(g, e));
    }
}

TEST_CASE("connected components") {
    auto comps = connected_components(complete_graph(4));
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].size() == 4);

    // K4 plus a disjoint C5.
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) edges.push_back({u, v});
    for (int i = 0; i < 5; ++i) edges.push_back({4 + i, 4 + (i + 1) % 5});
    Graph both = Graph::from_edges(9, std::move(edges));
    comps = connected_components(both);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].size() == 4);
    CHECK(comps[1].size() == 5);

    comps = connected_components(Graph::from_edges(3, {}));
    CHECK(comps.size() == 3);
}

namespace {

bool matching_search(const Graph& g, std::vector<bool>& used, int v) {
    if (v == g.n) return true;
    if (used[static_cast<std::size_t>(v)]) return matching_search(g, used, v + 1);
    for (const auto& arc : g.adj[static_cast<std::size_t>(v)]) {
        if (used[static_cast<std::size_t>(arc.to)] || arc.to < v) continue;
        used[static_cast<std::size_t>(v)] = used[static_cast<std::size_t>(arc.to)] = true;
        if (matching_search(g, used, v + 1)) return true;
        used[static_cast<std::size_t>(v)] = used[static_cast<std::size_t>(arc.to)] = false;
    }
    return false;
}

// Oracle: exhaustive perfect-matching search.
bool has_perfect_matching_oracle(const Graph& g) {
    if (g.n % 2 != 0) return false;
    std::vector<bool> used(static_cast<std::size_t>(g.n), false);
    return matching_search(g, used, 0);
}

bool valid_perfect_matching(const Graph& g, const EdgeSubset& w) {
    std::vector<int> cover(static_cast<std::size_t>(g.n), 0);
    for (int e = 0; e < g.m(); ++e) {
        if (!w.test(static_cast<std::size_t>(e))) continue;
        ++cover[static_cast<std::size_t>(g.edges[static_cast<std::size_t>(e)].first)];
        ++cover[static_cast<std::size_t>(g.edges[static_cast<std::size_t>(e)].second)];
    }
    for (int v = 0; v < g.n; ++v)
        if (cover[static_cast<std::size_t>(v)] != 1) return false;
    return true;
}

}  // namespace

TEST_CASE("perfect matching") {
    auto k4 = perfect_matching(complete_graph(4));
    REQUIRE(k4.has_value());
    CHECK(valid_perfect_matching(complete_graph(4), *k4));

    CHECK_FALSE(perfect_matching(cycle_graph(5)).has_value());

    Graph pete = petersen();
    auto w = perfect_matching(pete);
    REQUIRE(w.has_value());
    CHECK(valid_perfect_matching(pete, *w));
    CHECK(has_perfect_matching_oracle(pete));
}

TEST_CASE("perfect matching agrees with exhaustive search on random graphs") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = random_graph(8, 0.3, rng);
        auto w = perfect_matching(g);
        CHECK(w.has_value() == has_perfect_matching_oracle(g));
        if (w) CHECK(valid_perfect_matching(g, *w));
    }
}

TEST_CASE("graph6 decoding against the reference decoder") {
    Graph k4 = parse_graph6("C~");
    CHECK(k4.n == 4);
    CHECK(k4.m() == 6);
    auto ref = reference_graph6_matrix("C~");
    for (auto [u, v] : k4.edges) CHECK(ref[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]);

    Graph c5 = parse_graph6("Dhc");
    CHECK(c5.n == 5);
    REQUIRE(c5.m() == 5);
    auto ref5 = reference_graph6_matrix("Dhc");
    int ref_edges = 0;
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v)
            if (ref5[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) ++ref_edges;
    CHECK(ref_edges == 5);
    for (auto [u, v] : c5.edges) CHECK(ref5[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]);
    for (int v = 0; v < 5; ++v) CHECK(degree(c5, v) == 2);
}

TEST_CASE("graph6 round trip") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = random_graph(1 + static_cast<int>(rng() % 14), 0.4, rng);
        std::string enc = to_graph6(g);
        Graph back = parse_graph6(enc);
        CHECK(back.n == g.n);
        auto lhs = back.edges, rhs = g.edges;
        std::sort(lhs.begin(), lhs.end());
        std::sort(rhs.begin(), rhs.end());
        CHECK(lhs == rhs);
        CHECK(to_graph6(back) == enc);
    }
    // A long-form count (n = 63 needs the 126 prefix).
    Graph big = cycle_graph(70);
    Graph back = parse_graph6(to_graph6(big));
    CHECK(back.n == 70);
    CHECK(back.m() == 70);
}

TEST_CASE("graph6 parse errors carry a byte offset") {
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
    CHECK_THROWS_AS(parse_graph6("C"), ParseError);     // truncated payload
    CHECK_THROWS_AS(parse_graph6("C~~"), ParseError);   // trailing characters
    CHECK_THROWS_AS(parse_graph6("C\x01"), ParseError); // invalid character
    try {
        parse_graph6("C");
    } catch (const ParseError& e) {
        CHECK(e.position == 1);
    }
}

TEST_CASE("edge list parsing") {
    Graph p3 = parse_edge_list("0 1\n1 2\n");
    CHECK(p3.n == 3);
    CHECK(p3.m() == 2);

    Graph with_header = parse_edge_list("5 2\n0 1\n1 2\n");
    CHECK(with_header.n == 5);
    CHECK(with_header.m() == 2);

    CHECK_THROWS_AS(parse_edge_list("0 0\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("0 1\n0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("0 x\n"), ParseError);
    try {
        parse_edge_list("0 1\n2 2\n");
    } catch (const ParseError& e) {
        CHECK(e.position == 2);  // line number
    }
}

TEST_CASE("graph6 encodings of the families round trip") {
    for (int k = 1; k <= 2; ++k) {
        Graph g = bridge_star(k);
        Graph back = parse_graph6(to_graph6(g));
        CHECK(back.n == g.n);
        CHECK(back.m() == g.m());
    }
}
