#include "doctest.h"

#include "scorient/errors.hpp"
#include "scorient/graph.hpp"
#include "scorient/orientation.hpp"
#include "scorient/rng.hpp"
#include "test_helpers.hpp"

using namespace scorient;

namespace {

const UndirectedGraph& triangle() {
    static const UndirectedGraph g(3, {{0, 1}, {1, 2}, {0, 2}});
    return g;
}

const UndirectedGraph& k4() {
    static const UndirectedGraph g(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {1, 3}});
    return g;
}

// {0->1, 1->2, 2->3, 3->0, 0->2, 1->3}
Orientation k4_cyclic() { return Orientation(k4(), {0, 0, 0, 0, 0, 0}); }

// Directed 3-cycle 0->1->2->0.
Orientation cycle3() { return Orientation(triangle(), {0, 0, 1}); }

} // namespace

TEST_CASE("parse_graph reads the edge-list format") {
    const UndirectedGraph g = parse_graph("n=3\n0 1\n1 2\n0 2");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 3);
    CHECK(g.edge(0) == Edge{0, 1});
    CHECK(g.edge(2) == Edge{0, 2});

    const UndirectedGraph k2 = parse_graph("n=2\n0 1");
    CHECK(k2.vertex_count() == 2);
    CHECK(k2.edge_count() == 1);
}

TEST_CASE("parse_graph skips comments and blank lines") {
    const UndirectedGraph g = parse_graph("# a triangle\nn=3\n\n0 1\n# middle\n1 2\n0 2\n");
    CHECK(g.edge_count() == 3);
}

TEST_CASE("parse_graph rejects bad input") {
    CHECK_THROWS_AS(parse_graph("n=3\n0 0"), validation_error);
    CHECK_THROWS_AS(parse_graph("n=3\n0 1\n0 1"), validation_error);
    CHECK_THROWS_AS(parse_graph("n=3\n1 0\n0 1"), validation_error); // same unordered pair
    CHECK_THROWS_AS(parse_graph("n=2\n0 5"), range_error);
    CHECK_THROWS_AS(parse_graph("n=2\n0 -1"), range_error);
    CHECK_THROWS_AS(parse_graph("0 1\nn=2"), parse_error);
    CHECK_THROWS_AS(parse_graph(""), parse_error);
    CHECK_THROWS_AS(parse_graph("n=3\n0 1 junk"), parse_error);
    CHECK_THROWS_AS(parse_graph("n=-1"), range_error);

    try {
        parse_graph("n=3\n0 1\nbogus");
    } catch (const parse_error& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
    try {
        parse_graph("n=3\n0 0");
    } catch (const validation_error& e) {
        CHECK(std::string(e.what()).find("{0, 0}") != std::string::npos);
    }
}

TEST_CASE("edge list round-trips through text") {
    const UndirectedGraph g = k4();
    CHECK(parse_graph(to_edge_list_text(g)) == g);
}

TEST_CASE("indegree counts arcs directed to the vertex") {
    const Orientation o = cycle3();
    CHECK(indegree(o, 0) == 1);
    CHECK(indegree(o, 1) == 1);
    CHECK(indegree(o, 2) == 1);

    // Star with all arcs toward the center 0.
    const UndirectedGraph star(4, {{0, 1}, {0, 2}, {0, 3}});
    const Orientation inward(star, {1, 1, 1});
    CHECK(indegree(inward, 0) == 3);
    CHECK(indegree(inward, 1) == 0);

    const Orientation k4o = k4_cyclic();
    CHECK(indegree(k4o, 2) == 2);
    CHECK_THROWS_AS(indegree(k4o, 7), range_error);
}

TEST_CASE("indegree_sequence sorts non-increasing") {
    CHECK(indegree_sequence(cycle3()).values() == std::vector<int>{1, 1, 1});

    const UndirectedGraph star(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(indegree_sequence(Orientation(star, {1, 1, 1})).values() ==
          std::vector<int>{3, 0, 0, 0});

    CHECK(indegree_sequence(k4_cyclic()).values() == std::vector<int>{2, 2, 1, 1});
    CHECK(indegree_sequence(k4_cyclic()).to_csv() == "2,2,1,1");
}

TEST_CASE("indegree sum equals edge count for random orientations") {
    Rng rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(rand_below(rng, 6));
        std::vector<Edge> edges;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (rand_bit(rng)) edges.push_back(Edge{a, b});
        const UndirectedGraph g(n, std::move(edges));
        const Orientation o = testing::random_orientation(g, rng);
        int sum = 0;
        for (int v = 0; v < n; ++v) sum += o.indegree(v);
        CHECK(sum == g.edge_count());
    }
}

TEST_CASE("indegree_sequence is invariant under vertex relabeling") {
    Rng rng(101);
    const UndirectedGraph& g = k4();
    for (int trial = 0; trial < 20; ++trial) {
        const Orientation o = testing::random_orientation(g, rng);
        // Relabel through a random permutation, keeping arc directions.
        std::vector<int> perm{0, 1, 2, 3};
        for (int i = 3; i > 0; --i)
            std::swap(perm[static_cast<std::size_t>(i)],
                      perm[rand_below(rng, static_cast<std::uint64_t>(i) + 1)]);
        std::vector<Edge> edges;
        for (const Edge& e : g.edges())
            edges.push_back(Edge{perm[static_cast<std::size_t>(e.a)],
                                 perm[static_cast<std::size_t>(e.b)]});
        const UndirectedGraph h(4, std::move(edges));
        const Orientation p(h, o.bits());
        CHECK(indegree_sequence(p) == indegree_sequence(o));
    }
}

TEST_CASE("lex_compare follows first-difference order") {
    CHECK(lex_compare(IndegreeSequence({2, 1, 1}), IndegreeSequence({2, 2, 0})) == -1);
    CHECK(lex_compare(IndegreeSequence({1, 1, 1}), IndegreeSequence({1, 1, 1})) == 0);
    CHECK(lex_compare(IndegreeSequence({2, 2, 1, 1}), IndegreeSequence({2, 1, 1, 1})) == 1);
    CHECK_THROWS_AS(lex_compare(IndegreeSequence({1}), IndegreeSequence({1, 2})),
                    contract_error);
}

TEST_CASE("lex_compare is a total order on small sequences") {
    // Every sequence of length 3 over {0..3}, compared pairwise.
    std::vector<IndegreeSequence> all;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 4; ++c) all.push_back(IndegreeSequence({a, b, c}));
    for (const auto& s : all) {
        for (const auto& t : all) {
            const int st = lex_compare(s, t);
            CHECK(st == -lex_compare(t, s));
            if (st == 0) CHECK(s == t);
            for (const auto& r : all) {
                if (st <= 0 && lex_compare(t, r) <= 0) CHECK(lex_compare(s, r) <= 0);
            }
        }
    }
}

TEST_CASE("reverse_path flips exactly the path arcs") {
    const UndirectedGraph g = triangle();
    const Orientation o = Orientation(g, {0, 0, 1}); // 0->1->2->0
    const DirectedPath p = path_from_vertices(o, {0, 1, 2});
    const Orientation r = reverse_path(o, p);
    CHECK(r.tail(0) == 1);
    CHECK(r.head(0) == 0);
    CHECK(r.tail(1) == 2);
    CHECK(r.head(1) == 1);
    CHECK(r.tail(2) == 2); // untouched arc 2->0
    CHECK(r.head(2) == 0);
    CHECK(r.indegree(0) == 2);
    CHECK(r.indegree(1) == 1);
    CHECK(r.indegree(2) == 0);
}

TEST_CASE("reverse_path on a single arc flips only it") {
    const Orientation o = k4_cyclic();
    const DirectedPath p = path_from_vertices(o, {0, 1});
    const Orientation r = reverse_path(o, p);
    for (int e = 0; e < o.graph().edge_count(); ++e)
        CHECK(r.is_reversed(e) == (e == 0 ? !o.is_reversed(e) : o.is_reversed(e)));
}

TEST_CASE("reverse_path rejects paths that do not match the orientation") {
    const Orientation o = cycle3(); // 0->1->2->0
    CHECK_THROWS_AS(path_from_vertices(o, {1, 0}), contract_error);
    const DirectedPath p = path_from_vertices(o, {0, 1});
    const Orientation r = reverse_path(o, p);
    CHECK_THROWS_AS(reverse_path(r, p), contract_error); // stale direction
}

TEST_CASE("reverse_path moves one indegree from target to source") {
    Rng rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 3 + static_cast<int>(rand_below(rng, 5));
        std::vector<Edge> edges;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (rand_below(rng, 3) != 0) edges.push_back(Edge{a, b});
        const UndirectedGraph g(n, std::move(edges));
        if (g.edge_count() == 0) continue;
        const Orientation o = testing::random_orientation(g, rng);
        const DirectedPath p = testing::random_simple_path(o, rng);
        const Orientation r = reverse_path(o, p);
        for (int v = 0; v < n; ++v) {
            int expected = o.indegree(v);
            if (!p.is_empty() && v == p.source()) ++expected;
            if (!p.is_empty() && v == p.target()) --expected;
            CHECK(r.indegree(v) == expected);
        }
        // Involution: reversing the reversed path restores the original.
        std::vector<int> back(p.vertices().rbegin(), p.vertices().rend());
        const Orientation again = reverse_path(r, path_from_vertices(r, back));
        CHECK(again == o);
    }
}

TEST_CASE("orientation text format is bit-exact") {
    CHECK(orientation_to_text(cycle3()) == "0 0 1\n1 1 2\n2 2 0\nindegree_sequence=1,1,1\n");
    const Orientation o = k4_cyclic();
    const Orientation back = parse_orientation_text(o.graph(), orientation_to_text(o));
    CHECK(back == o);
    CHECK_THROWS_AS(parse_orientation_text(o.graph(), "0 0 1\n"), validation_error);
    CHECK_THROWS_AS(parse_orientation_text(o.graph(), orientation_to_text(o) + "0 0 1\n"),
                    validation_error);
}

TEST_CASE("empty and degenerate graphs are valid") {
    const UndirectedGraph empty(0, {});
    const Orientation o(empty, {});
    CHECK(indegree_sequence(o).values().empty());
    CHECK(indegree_sequence(o).to_csv() == "");
    const UndirectedGraph lone(1, {});
    CHECK(indegree_sequence(Orientation(lone, {})).values() == std::vector<int>{0});
}
