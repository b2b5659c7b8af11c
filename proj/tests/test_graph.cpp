#include <doctest.h>

#include "oracle_helpers.hpp"
#include "tvb/graph.hpp"

using namespace tvb;

TEST_SUITE("graph") {

TEST_CASE("edges are symmetric, simple, and validated") {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(2, 1);
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(1, 0));
    CHECK(g.adjacent(1, 2));
    CHECK_FALSE(g.adjacent(0, 2));
    CHECK(g.edge_count() == 2);
    CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 4), std::out_of_range);
    CHECK_THROWS_AS(g.add_edge(-1, 0), std::out_of_range);
}

TEST_CASE("edge list is sorted pairs in lexicographic order") {
    Graph g = Graph::from_edges(4, {{3, 2}, {1, 0}, {0, 3}});
    auto edges = g.edge_list();
    REQUIRE(edges.size() == 3);
    CHECK(edges[0] == std::pair<int, int>{0, 1});
    CHECK(edges[1] == std::pair<int, int>{0, 3});
    CHECK(edges[2] == std::pair<int, int>{2, 3});
}

TEST_CASE("degrees and max degree") {
    Graph g = oracle::path_graph(4);
    CHECK(g.degree(0) == 1);
    CHECK(g.degree(1) == 2);
    CHECK(g.max_degree() == 2);
    CHECK(oracle::complete_graph(5).max_degree() == 4);
    CHECK(Graph(3).max_degree() == 0);
}

TEST_CASE("neighborhood excludes the vertex itself") {
    Graph g = oracle::cycle_graph(5);
    for (int v = 0; v < 5; ++v) {
        VertexSet nbr = neighborhood(g, v);
        CHECK_FALSE(nbr.test(v));
        CHECK(nbr.count() == 2);
    }
}

TEST_CASE("second neighborhood is exactly distance two: exhaustive through 5 vertices") {
    for (int n = 1; n <= 5; ++n) {
        oracle::for_all_graphs(n, [&](const Graph& g) {
            for (int v = 0; v < n; ++v) {
                CHECK(set_to_vector(neighborhood(g, v)) == oracle::bfs_sphere(g, v, 1));
                CHECK(set_to_vector(second_neighborhood(g, v)) == oracle::bfs_sphere(g, v, 2));
            }
        });
    }
}

TEST_CASE("second neighborhood matches BFS on random graphs through 9 vertices") {
    std::mt19937_64 rng(2026);
    std::uniform_int_distribution<int> size(1, 9);
    std::uniform_real_distribution<double> prob(0.0, 1.0);
    for (int trial = 0; trial < 1000; ++trial) {
        Graph g = oracle::random_graph(size(rng), prob(rng), rng);
        for (int v = 0; v < g.vertex_count(); ++v) {
            CHECK(set_to_vector(neighborhood(g, v)) == oracle::bfs_sphere(g, v, 1));
            CHECK(set_to_vector(second_neighborhood(g, v)) == oracle::bfs_sphere(g, v, 2));
        }
    }
}

TEST_CASE("product vertex indexing round-trips") {
    const int q = 4;
    for (int idx = 0; idx < 6 * q; ++idx) {
        ProductVertex pv = product_vertex_at(idx, q);
        CHECK(product_index(pv, q) == idx);
        CHECK(pv.level >= 1);
        CHECK(pv.level <= q);
    }
}

TEST_CASE("product with a complete graph: adjacency and degrees") {
    Graph g = oracle::path_graph(3);
    const int q = 4;
    Graph prod = cartesian_product_complete(g, q);
    REQUIRE(prod.vertex_count() == 12);
    CHECK(prod.edge_count() == g.edge_count() * q + 3 * (q * (q - 1) / 2));
    for (int a = 0; a < prod.vertex_count(); ++a) {
        ProductVertex pa = product_vertex_at(a, q);
        CHECK(prod.degree(a) == g.degree(pa.base) + q - 1);
        for (int b = a + 1; b < prod.vertex_count(); ++b) {
            ProductVertex pb = product_vertex_at(b, q);
            bool same_column = pa.base == pb.base;
            bool same_level = pa.level == pb.level;
            bool expect = (same_column && !same_level) ||
                          (same_level && g.adjacent(pa.base, pb.base));
            CHECK(prod.adjacent(a, b) == expect);
        }
    }
}

TEST_CASE("product rejects q < 1") {
    CHECK_THROWS_AS(cartesian_product_complete(Graph(2), 0), std::invalid_argument);
}

TEST_CASE("product with q = 1 is the graph itself") {
    Graph g = oracle::cycle_graph(5);
    Graph prod = cartesian_product_complete(g, 1);
    CHECK(prod.vertex_count() == 5);
    CHECK(prod.edge_count() == 5);
}

TEST_CASE("bundled cubic graph: 46 vertices, 3-regular, 69 edges, layered labels") {
    Graph g = grinberg_graph();
    REQUIRE(g.vertex_count() == 46);
    CHECK(g.edge_count() == 69);
    for (int v = 0; v < 46; ++v) CHECK(g.degree(v) == 3);
    CHECK(g.label(0)[0] == 'O');
    CHECK(g.label(45) == "C");
    // connected: one BFS ball of radius 46 sees everyone else
    CHECK(oracle::bfs_ball(g, 0, 46).size() == 45);
}

TEST_CASE("set and vector conversions invert each other") {
    std::vector<int> verts = {0, 3, 5};
    VertexSet s = vector_to_set(7, verts);
    CHECK(s.count() == 3);
    CHECK(set_to_vector(s) == verts);
}

}
