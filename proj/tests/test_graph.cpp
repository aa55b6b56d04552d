#include <doctest.h>

#include <random>

#include "curvnet/graph_io.hpp"
#include "curvnet/shortest_path.hpp"
#include "test_support.hpp"

using namespace curvnet;
using namespace curvnet::testing;

TEST_SUITE_BEGIN("graph");

TEST_CASE("parse headerless triangle") {
    Graph g = parse_edge_list("a,b\nb,c\nc,a");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 3);
    for (const Edge& e : g.edges()) CHECK(e.weight == 1.0);
    CHECK_FALSE(g.directed());
}

TEST_CASE("parse single weighted edge") {
    Graph g = parse_edge_list("a,b,2.5");
    CHECK(g.edge_count() == 1);
    CHECK(g.edges()[0].weight == 2.5);
}

TEST_CASE("parse with header row") {
    Graph g = parse_edge_list("source,target,weight,directed\na,b,2,1\nb,c,1,0\n");
    CHECK(g.directed());
    auto e = g.edge_between(g.require_vertex("a"), g.require_vertex("b"));
    REQUIRE(e);
    CHECK(g.edge(*e).oriented());
    CHECK(g.edge(*e).weight == 2.0);
    auto f = g.edge_between(g.require_vertex("b"), g.require_vertex("c"));
    REQUIRE(f);
    CHECK_FALSE(g.edge(*f).oriented());
}

TEST_CASE("parse errors carry line numbers") {
    CHECK_THROWS_WITH_AS(parse_edge_list("a,b,-1"),
                         doctest::Contains("line 1"), InputError);
    CHECK_THROWS_WITH_AS(parse_edge_list("a,b\nc,c"),
                         doctest::Contains("self-loop"), InputError);
    CHECK_THROWS_WITH_AS(parse_edge_list("a,b\nb,a"),
                         doctest::Contains("duplicate"), InputError);
    CHECK_THROWS_WITH_AS(parse_edge_list("a,b\nx,y,zz"),
                         doctest::Contains("line 2"), InputError);
    CHECK_THROWS_AS(parse_edge_list("source,target\na,b,1"), InputError);
}

TEST_CASE("vertex weight table") {
    Graph g = parse_edge_list("a,b\nb,c", "vertex,weight\na,2\nb,0.5\n");
    CHECK(g.vertex_weight(g.require_vertex("a")) == 2.0);
    CHECK(g.vertex_weight(g.require_vertex("b")) == 0.5);
    CHECK(g.vertex_weight(g.require_vertex("c")) == 1.0);
    CHECK_THROWS_AS(parse_edge_list("a,b", "vertex,weight\nzz,2\n"), InputError);
    CHECK_THROWS_AS(parse_edge_list("a,b", "vertex,weight\na,-2\n"), InputError);
}

TEST_CASE("json parse errors") {
    CHECK_THROWS_AS(parse_json_graph("not json"), InputError);
    CHECK_THROWS_AS(parse_json_graph(R"({"vertices":[]})"), InputError);
    CHECK_THROWS_AS(parse_json_graph(R"({"edges":[{"u":"a"}]})"), InputError);
    CHECK_THROWS_AS(
        parse_json_graph(R"({"edges":[{"u":"a","v":"b","w":-1}]})"),
        InputError);
}

TEST_CASE("json round trip is canonical") {
    Graph g = parse_edge_list("b,a,2\na,c\nc,d,1,1", "vertex,weight\nd,3\n");
    std::string json = to_json(g);
    Graph g2 = parse_json_graph(json);
    CHECK(to_json(g2) == json);
    CHECK(g2.vertex_count() == g.vertex_count());
    CHECK(g2.edge_count() == g.edge_count());
    CHECK(g2.directed() == g.directed());
    CHECK(g2.vertex_weight(g2.require_vertex("d")) == 3.0);
}

TEST_CASE("csv round trip") {
    Graph g = parse_edge_list("b,a,2\na,c,0.25");
    Graph g2 = parse_edge_list(to_csv(g));
    CHECK(to_csv(g2) == to_csv(g));
    CHECK(to_json(g2) == to_json(g));
}

TEST_CASE("serialization is insertion-order independent") {
    Graph g1 = parse_edge_list("a,b\nb,c\nc,a");
    Graph g2 = parse_edge_list("c,a\na,b\nc,b");
    CHECK(to_json(g1) == to_json(g2));
}

TEST_CASE("shortest path on a path graph") {
    Graph g = build_graph({{"a", "b"}, {"b", "c"}});
    auto r = shortest_path(g, g.require_vertex("a"), g.require_vertex("c"));
    REQUIRE(r);
    CHECK(r->length == 2.0);
    REQUIRE(r->path.size() == 3);
    CHECK(g.label(r->path[0]) == "a");
    CHECK(g.label(r->path[1]) == "b");
    CHECK(g.label(r->path[2]) == "c");
}

TEST_CASE("shortest path prefers light detour over heavy edge") {
    // Exhaustive check on 3 vertices: paths a-c (3.0) vs a-b-c (2.0).
    Graph g = build_graph({{"a", "b", 1}, {"b", "c", 1}, {"a", "c", 3}});
    auto u = g.require_vertex("a"), v = g.require_vertex("c");
    double brute = std::numeric_limits<double>::infinity();
    for (const auto& p : brute_simple_paths(g, u, v, 3))
        brute = std::min(brute, path_weight_of(g, p));
    CHECK(brute == 2.0);
    auto r = shortest_path(g, u, v);
    REQUIRE(r);
    CHECK(r->length == brute);
    CHECK(r->path.size() == 3);
}

TEST_CASE("disconnected pair reports unreachable") {
    Graph g = build_graph({{"a", "b"}, {"c", "d"}});
    CHECK_FALSE(shortest_path(g, g.require_vertex("a"), g.require_vertex("c")));
}

TEST_CASE("lexicographic tie-break") {
    // Two equal-weight routes a->z: via b and via c; "b" sorts first.
    Graph g = build_graph({{"a", "b"}, {"b", "z"}, {"a", "c"}, {"c", "z"}});
    auto r = shortest_path(g, g.require_vertex("a"), g.require_vertex("z"));
    REQUIRE(r);
    CHECK(g.label(r->path[1]) == "b");
}

TEST_CASE("tie-break matches the exhaustive minimum") {
    // Unit weights force plenty of ties; the returned path must be the
    // lexicographically smallest among all minimum-weight simple paths.
    std::mt19937_64 rng(2027);
    for (int trial = 0; trial < 25; ++trial) {
        Graph g = random_graph(rng, 7, 0.5);
        const std::size_t n = g.vertex_count();
        for (VertexId u = 0; u < n; ++u)
            for (VertexId v = 0; v < n; ++v) {
                if (u == v) continue;
                auto r = shortest_path(g, u, v);
                auto all = brute_simple_paths(g, u, v, n);
                if (!r) {
                    CHECK(all.empty());
                    continue;
                }
                std::vector<VertexId> best;
                double best_w = std::numeric_limits<double>::infinity();
                for (const auto& p : all) {
                    double w = path_weight_of(g, p);
                    if (w < best_w - 1e-12 ||
                        (std::abs(w - best_w) <= 1e-12 &&
                         (best.empty() || p < best))) {
                        best_w = w;
                        best = p;
                    }
                }
                CHECK(r->path == best);
            }
    }
}

TEST_CASE("direction-respecting search") {
    Graph g = build_graph({{"a", "b", 1, true}, {"b", "c", 1, true}});
    auto a = g.require_vertex("a"), c = g.require_vertex("c");
    ShortestPathOptions respect{true};
    auto fwd = shortest_path(g, a, c, respect);
    REQUIRE(fwd);
    CHECK(fwd->length == 2.0);
    CHECK_FALSE(shortest_path(g, c, a, respect));
    CHECK(shortest_path(g, c, a)); // underlying undirected graph
}

TEST_CASE("symmetry and triangle inequality on random graphs") {
    std::mt19937_64 rng(2026);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = random_graph(rng, 4 + trial % 9, 0.4, trial % 2 == 1);
        auto fw = floyd_warshall(g);
        const std::size_t n = g.vertex_count();
        for (VertexId u = 0; u < n; ++u)
            for (VertexId v = u + 1; v < n; ++v) {
                auto ruv = shortest_path(g, u, v);
                auto rvu = shortest_path(g, v, u);
                CHECK(ruv.has_value() == rvu.has_value());
                if (!ruv) {
                    CHECK(std::isinf(fw[u][v]));
                    continue;
                }
                CHECK(ruv->length == doctest::Approx(fw[u][v]).epsilon(1e-12));
                CHECK(ruv->length == doctest::Approx(rvu->length).epsilon(1e-12));
                CHECK(path_weight_of(g, ruv->path) ==
                      doctest::Approx(ruv->length).epsilon(1e-12));
            }
        // triangle inequality of the induced metric
        for (VertexId a = 0; a < n; ++a)
            for (VertexId b = 0; b < n; ++b)
                for (VertexId c = 0; c < n; ++c)
                    if (std::isfinite(fw[a][b]) && std::isfinite(fw[b][c]))
                        CHECK(fw[a][c] <= fw[a][b] + fw[b][c] + 1e-9);
    }
}

TEST_SUITE_END();
