#include <doctest.h>

#include <random>

#include "hserre/error.hpp"
#include "hserre/graph.hpp"
#include "hserre/serre.hpp"
#include "support/enumerate.hpp"
#include "support/oracles.hpp"

using namespace hserre;

namespace {

SimplicialComplex delta5() {
    return SimplicialComplex::from_facets(
        7, {{3, 4, 5, 6, 7}, {2, 4, 5, 6, 7}, {2, 3, 5, 6, 7}, {2, 3, 4, 6, 7}, {1, 2, 3, 4, 5}});
}

Graph star_plus_edge() { return Graph(7, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {6, 7}}); }

bool is_induced_c4(const Graph& g, const FourCycle& q) {
    for (int i = 0; i < 4; ++i)
        if (!g.has_edge(q[i], q[(i + 1) % 4]))
            return false;
    return !g.has_edge(q[0], q[2]) && !g.has_edge(q[1], q[3]);
}

bool brute_has_induced_c4(const Graph& g) {
    const int n = g.n();
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            for (int c = 1; c <= n; ++c)
                for (int d = 1; d <= n; ++d)
                    if (a != b && a != c && a != d && b != c && b != d && c != d && is_induced_c4(g, {a, b, c, d}))
                        return true;
    return false;
}

} // namespace

TEST_CASE("graph construction") {
    const Graph g(4, {{2, 1}, {1, 2}, {3, 4}});
    CHECK(g.edge_count() == 2);
    CHECK(g.edges() == std::vector<Edge>{{1, 2}, {3, 4}});
    CHECK(g.has_edge(2, 1));
    CHECK(g.neighbors(1) == Face{2});
    CHECK(g.components() == std::vector<Face>{Face{1, 2}, Face{3, 4}});
    CHECK(Graph(3, {}).components().size() == 3);

    try {
        Graph(3, {{1, 4}});
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::VertexOutOfRange);
    }
    try {
        Graph(3, {{2, 2}});
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvalidEdge);
    }
}

TEST_CASE("complement") {
    const Graph g = star_plus_edge();
    CHECK(complement(complement(g)) == g);
    CHECK(complement(Graph(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}})).edge_count() == 0);
    const Graph gc = complement(g);
    CHECK(is_induced_c4(gc, {1, 6, 2, 7}));
    CHECK(gc.edge_count() == 21 - 5);
}

TEST_CASE("minimal vertex covers") {
    CHECK(minimal_vertex_covers(Graph(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}})) == std::vector<Face>{Face{2, 4}, Face{1, 3}});
    CHECK(minimal_vertex_covers(Graph(2, {{1, 2}})) == std::vector<Face>{Face{2}, Face{1}});
    const auto covers = minimal_vertex_covers(star_plus_edge());
    CHECK(std::find(covers.begin(), covers.end(), Face{1, 6}) != covers.end());
    CHECK(std::find(covers.begin(), covers.end(), Face{1, 7}) != covers.end());
    CHECK(oracle::masks_of(covers) == oracle::minimal_vertex_covers(star_plus_edge()));
    CHECK(covers.size() == 4);
    CHECK(minimal_vertex_covers(Graph(3, {})) == std::vector<Face>{Face{}});
}

TEST_CASE("minimal vertex covers match brute force on every graph with <= 6 vertices") {
    for (int n = 1; n <= 6; ++n)
        testing::for_each_graph(n, [](const Graph& g) {
            REQUIRE(oracle::masks_of(minimal_vertex_covers(g)) == oracle::minimal_vertex_covers(g));
        });
}

TEST_CASE("minimal vertex covers match brute force on 7 vertices (sampled)") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 3000; ++trial) {
        std::vector<Edge> edges;
        for (int u = 1; u <= 7; ++u)
            for (int v = u + 1; v <= 7; ++v)
                if (rng() % 2)
                    edges.emplace_back(u, v);
        const Graph g(7, edges);
        REQUIRE(oracle::masks_of(minimal_vertex_covers(g)) == oracle::minimal_vertex_covers(g));
    }
}

TEST_CASE("cofacet graph") {
    CHECK(cofacet_graph(delta5()).edges() == std::vector<Edge>{{1, 2}, {1, 3}, {1, 4}, {1, 5}, {6, 7}});
    const auto cycle = SimplicialComplex::from_facets(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}});
    CHECK(cofacet_graph(cycle).edges() == std::vector<Edge>{{1, 2}, {1, 4}, {2, 3}, {3, 4}});
    try {
        cofacet_graph(SimplicialComplex::from_facets(3, {{1, 2}, {1, 3}, {2, 3}}));
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotCodimensionTwo);
    }
    CHECK_THROWS_AS(cofacet_graph(SimplicialComplex::from_facets(4, {{1, 2}, {2, 3, 4}})), Error);
}

TEST_CASE("induced 4-cycles") {
    const auto found = has_induced_c4(Graph(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}));
    REQUIRE(found.has_value());
    CHECK(is_induced_c4(Graph(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}), *found));
    CHECK_FALSE(has_induced_c4(complement(Graph(5, {}))).has_value());
    const auto gc = complement(star_plus_edge());
    const auto q = has_induced_c4(gc);
    REQUIRE(q.has_value());
    CHECK(is_induced_c4(gc, *q));
    CHECK_FALSE(has_induced_c4(Graph(3, {{1, 2}, {2, 3}, {1, 3}})).has_value());
}

TEST_CASE("has_induced_c4 matches brute force on every graph with <= 6 vertices") {
    for (int n = 1; n <= 6; ++n)
        testing::for_each_graph(n, [](const Graph& g) {
            const auto q = has_induced_c4(g);
            REQUIRE(q.has_value() == brute_has_induced_c4(g));
            if (q)
                REQUIRE(is_induced_c4(g, *q));
        });
}

TEST_CASE("graph obstruction") {
    const auto v = s2_graph_obstruction(delta5());
    CHECK(v.status == ObstructionVerdict::Status::NotS2);
    REQUIRE(v.witness.has_value());
    CHECK(*v.witness == FourCycle{1, 6, 2, 7});

    const auto cycle = SimplicialComplex::from_facets(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}});
    const auto w = s2_graph_obstruction(cycle);
    CHECK(w.status == ObstructionVerdict::Status::Inconclusive);
    CHECK_FALSE(w.witness.has_value());

    CHECK_THROWS_AS(s2_graph_obstruction(SimplicialComplex::from_facets(3, {{1, 2}, {1, 3}, {2, 3}})), Error);
}

TEST_CASE("codimension-two complexes on <= 7 vertices: covers, cones, soundness") {
    // Every graph on n vertices without isolated vertices is the cofacet
    // graph of exactly one codimension-two complex.
    auto check = [](const Graph& g) {
        const int n = g.n();
        if (g.edge_count() == 0)
            return;
        std::vector<Face> facets;
        Face covered;
        for (auto [u, v] : g.edges()) {
            facets.push_back(Face::full(n).without(Face{u, v}));
            covered = covered | facets.back();
        }
        if (covered != Face::full(n))
            return;
        const auto c = SimplicialComplex::from_facets(n, facets);
        const Graph cg = cofacet_graph(c);
        REQUIRE(cg == g);
        REQUIRE(cg.edge_count() == static_cast<int>(c.facets().size()));
        bool isolated = false;
        for (int v = 1; v <= n; ++v)
            isolated = isolated || cg.neighbors(v).empty();
        REQUIRE(isolated == is_cone(c));
        REQUIRE(oracle::masks_of(minimal_nonfaces(c)) == oracle::masks_of(minimal_vertex_covers(cg)));
        const auto ob = s2_graph_obstruction(c);
        if (ob.status == ObstructionVerdict::Status::NotS2) {
            REQUIRE(is_induced_c4(complement(cg), *ob.witness));
            REQUIRE_FALSE(is_serre(c, 2, FieldSpec::prime(2)).satisfied);
            REQUIRE_FALSE(is_serre(c, 2, FieldSpec::rationals()).satisfied);
        }
    };
    for (int n = 3; n <= 6; ++n)
        testing::for_each_graph(n, check);
    std::mt19937_64 rng(47);
    for (int n = 7; n <= 8; ++n)
        for (int trial = 0; trial < 1500; ++trial) {
            std::vector<Edge> edges;
            for (int u = 1; u <= n; ++u)
                for (int v = u + 1; v <= n; ++v)
                    if (rng() % 3 == 0)
                        edges.emplace_back(u, v);
            check(Graph(n, edges));
        }
}
