#include <doctest.h>

#include <cmath>
#include <random>

#include "curvnet/generators.hpp"
#include "curvnet/menger.hpp"
#include "test_support.hpp"

using namespace curvnet;
using namespace curvnet::testing;

namespace {

EdgeId edge_of(const Graph& g, const std::string& u, const std::string& v) {
    return g.require_edge(g.require_vertex(u), g.require_vertex(v));
}

} // namespace

TEST_SUITE_BEGIN("menger");

TEST_CASE("euclidean value equals the coordinate circumradius") {
    // Expected values frozen from the coordinate oracle:
    //   (3,4,5): right triangle, circumradius = hypotenuse/2 = 2.5
    //   (1,1,1): equilateral, circumradius = 1/sqrt(3)
    CHECK(euclidean_circumradius(3, 4, 5) == doctest::Approx(2.5).epsilon(1e-12));
    CHECK(euclidean_circumradius(1, 1, 1) ==
          doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-12));

    CHECK(menger_curvature({3, 4, 5}) == doctest::Approx(2.5).epsilon(1e-12));
    CHECK(menger_curvature({1, 1, 1}) ==
          doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-12));

    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> side(0.2, 3.0);
    for (int trial = 0; trial < 200; ++trial) {
        double a = side(rng), b = side(rng), c = side(rng);
        TriangleGeom t{a, b, c};
        if (!t.strict_triangle_inequality()) continue;
        CHECK(menger_curvature(t) ==
              doctest::Approx(euclidean_circumradius(a, b, c)).epsilon(1e-9));
    }
}

TEST_CASE("hyperbolic and spherical values match embedded circumradii") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> side(0.2, 1.2);
    GeometryModel hyp{GeometryKind::hyperbolic};
    GeometryModel sph{GeometryKind::spherical};
    for (int trial = 0; trial < 200; ++trial) {
        double a = side(rng), b = side(rng), c = side(rng);
        TriangleGeom t{a, b, c};
        if (!t.strict_triangle_inequality()) continue;
        double kh = menger_curvature(t, hyp);
        if (auto r = hyperbolic_circumradius(a, b, c)) {
            CHECK(kh == doctest::Approx(std::tanh(*r)).epsilon(1e-9));
        } else {
            // no circumcircle: the closed form lands at or above the
            // horocycle value 1
            CHECK(kh >= 1.0 - 1e-9);
        }
        CHECK(menger_curvature(t, sph) ==
              doctest::Approx(std::tan(spherical_circumradius(a, b, c)))
                  .epsilon(1e-9));
    }
}

TEST_CASE("triangle inequality violations are domain errors") {
    CHECK_THROWS_AS(menger_curvature({1, 1, 2.5}), DomainError);
    CHECK_THROWS_AS(menger_curvature({1, 1, 2}), DomainError); // degenerate
    CHECK_THROWS_AS(menger_curvature({0, 1, 1}), DomainError);
}

TEST_CASE("spherical validity domain") {
    GeometryModel sph{GeometryKind::spherical};
    CHECK_THROWS_AS(menger_curvature({2.5, 2.5, 2.5}, sph), DomainError);
    CHECK_NOTHROW(menger_curvature({1.5, 1.5, 1.5}, sph)); // p = 2.25 < pi
}

TEST_CASE("small-scale limit: all models agree within 0.1%") {
    double s = 1e-3;
    double e = menger_curvature({s, s, s});
    double h = menger_curvature({s, s, s}, {GeometryKind::hyperbolic});
    double sp = menger_curvature({s, s, s}, {GeometryKind::spherical});
    CHECK(std::abs(h - e) / e < 1e-3);
    CHECK(std::abs(sp - e) / e < 1e-3);
}

TEST_CASE("geometry ordering hyperbolic < euclidean < spherical") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> side(0.5, 1.5);
    for (double scale : {1.0, 1e-1, 1e-2, 1e-3}) {
        for (int trial = 0; trial < 50; ++trial) {
            TriangleGeom t{side(rng) * scale, side(rng) * scale, side(rng) * scale};
            if (!t.strict_triangle_inequality()) continue;
            double e = menger_curvature(t);
            double h = menger_curvature(t, {GeometryKind::hyperbolic});
            double sp = menger_curvature(t, {GeometryKind::spherical});
            CHECK(h < e);
            CHECK(e < sp);
        }
    }
}

TEST_CASE("euclidean curvature scales linearly with the side lengths") {
    std::mt19937_64 rng(19);
    std::uniform_real_distribution<double> side(0.3, 2.0);
    std::uniform_real_distribution<double> lambda(0.1, 5.0);
    for (int trial = 0; trial < 100; ++trial) {
        TriangleGeom t{side(rng), side(rng), side(rng)};
        if (!t.strict_triangle_inequality()) continue;
        double l = lambda(rng);
        TriangleGeom scaled{l * t.a, l * t.b, l * t.c};
        CHECK(menger_curvature(scaled) ==
              doctest::Approx(l * menger_curvature(t)).epsilon(1e-9));
    }
}

TEST_CASE("discarding the classical constants") {
    GeometryModel plain{GeometryKind::euclidean, false};
    CHECK(menger_curvature({3, 4, 5}, plain) ==
          doctest::Approx(4.0 * 2.5).epsilon(1e-12));
    GeometryModel hyp{GeometryKind::hyperbolic, false};
    CHECK(menger_curvature({1, 1, 1}, hyp) ==
          doctest::Approx(menger_curvature({1, 1, 1},
                                           {GeometryKind::hyperbolic}) /
                          2.0)
              .epsilon(1e-12));
}

TEST_CASE("directed triangle signs") {
    // coherent 3-cycle
    Graph coherent = build_graph(
        {{"u", "v", 1, true}, {"v", "w", 1, true}, {"w", "u", 1, true}});
    auto tri = triangles_at_edge(coherent, edge_of(coherent, "u", "v"));
    REQUIRE(tri.size() == 1);
    VertexId u = coherent.require_vertex("u"), v = coherent.require_vertex("v");
    CHECK(directed_sign_triangle(coherent, tri[0], u, v) == 1);

    // feed-forward: mixed alignment
    Graph ff = build_graph(
        {{"u", "v", 1, true}, {"u", "w", 1, true}, {"w", "v", 1, true}});
    auto tri_ff = triangles_at_edge(ff, edge_of(ff, "u", "v"));
    REQUIRE(tri_ff.size() == 1);
    CHECK(directed_sign_triangle(ff, tri_ff[0], ff.require_vertex("u"),
                                 ff.require_vertex("v")) == 0);

    // reversing every edge flips the sign
    Graph reversed = build_graph(
        {{"v", "u", 1, true}, {"w", "v", 1, true}, {"u", "w", 1, true}});
    auto tri_rev = triangles_at_edge(reversed, edge_of(reversed, "u", "v"));
    REQUIRE(tri_rev.size() == 1);
    CHECK(directed_sign_triangle(reversed, tri_rev[0],
                                 reversed.require_vertex("u"),
                                 reversed.require_vertex("v")) == -1);
}

TEST_CASE("sign antisymmetry on random directed triangles") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 64; ++trial) {
        bool f1 = rng() & 1, f2 = rng() & 1, f3 = rng() & 1;
        auto make = [&](bool reverse_all) {
            GraphBuilder b;
            auto add = [&](std::string_view x, std::string_view y, bool flip) {
                bool r = flip ^ reverse_all;
                if (r) b.add_edge(y, x, 1.0, true);
                else b.add_edge(x, y, 1.0, true);
            };
            add("u", "v", f1);
            add("v", "w", f2);
            add("w", "u", f3);
            return b.build();
        };
        Graph g = make(false), gr = make(true);
        auto t = triangles_at_edge(g, edge_of(g, "u", "v"));
        auto tr = triangles_at_edge(gr, edge_of(gr, "u", "v"));
        VertexId u = g.require_vertex("u"), v = g.require_vertex("v");
        int s = directed_sign_triangle(g, t[0], u, v);
        int sr = directed_sign_triangle(gr, tr[0], gr.require_vertex("u"),
                                        gr.require_vertex("v"));
        CHECK(sr == -s);
    }
}

TEST_CASE("ricci of an edge") {
    Graph torus = generate_lattice({LatticeKind::triangular, {6, 6}});
    const double unit = 1.0 / std::sqrt(3.0);
    for (EdgeId e = 0; e < torus.edge_count(); ++e)
        CHECK(menger_ricci_edge(torus, e) ==
              doctest::Approx(2 * unit).epsilon(1e-12));

    Graph g4 = build_graph({{"a", "b"},
                            {"a", "c"},
                            {"a", "d"},
                            {"b", "c"},
                            {"b", "d"},
                            {"c", "d"}});
    CHECK(menger_ricci_edge(g4, edge_of(g4, "a", "b")) ==
          doctest::Approx(2 * unit).epsilon(1e-12));

    Graph path = build_graph({{"a", "b"}, {"b", "c"}});
    CHECK(menger_ricci_edge(path, edge_of(path, "a", "b")) == 0.0);
}

TEST_CASE("ricci names the offending triangle") {
    Graph bad = build_graph({{"a", "b", 1}, {"b", "c", 1}, {"c", "a", 3}});
    CHECK_THROWS_WITH_AS(menger_ricci_edge(bad, edge_of(bad, "a", "b")),
                         doctest::Contains("in triangle a-"), DomainError);
}

TEST_CASE("undirected ricci equals the unsigned triangle sum") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = random_graph(rng, 8, 0.6);
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            double unsigned_sum = 0.0;
            for (const Cycle& t : triangles_at_edge(g, e))
                unsigned_sum += menger_curvature(
                    {g.edge_weight(*g.edge_between(t.vertices[0], t.vertices[1])),
                     g.edge_weight(*g.edge_between(t.vertices[1], t.vertices[2])),
                     g.edge_weight(*g.edge_between(t.vertices[2], t.vertices[0]))});
            CHECK(menger_ricci_edge(g, e) ==
                  doctest::Approx(unsigned_sum).epsilon(1e-12));
        }
    }
}

TEST_CASE("scalar curvature of a vertex") {
    Graph isolated = build_graph({{"a", "b"}}, {"z"});
    CHECK(menger_scalar_vertex(isolated, isolated.require_vertex("z")) == 0.0);

    const double unit = 1.0 / std::sqrt(3.0);
    Graph g4 = build_graph({{"a", "b"},
                            {"a", "c"},
                            {"a", "d"},
                            {"b", "c"},
                            {"b", "d"},
                            {"c", "d"}});
    CHECK(menger_scalar_vertex(g4, g4.require_vertex("a")) ==
          doctest::Approx(3 * unit).epsilon(1e-12)); // = sqrt(3)

    Graph torus = generate_lattice({LatticeKind::triangular, {6, 6}});
    CHECK(menger_scalar_vertex(torus, 0) ==
          doctest::Approx(6 * unit).epsilon(1e-12)); // = 2 sqrt(3)

    // edge-sum variant counts each triangle at both of its edges at v
    CHECK(menger_scalar_vertex(torus, 0, {}, ScalarAggregation::edge_sum) ==
          doctest::Approx(12 * unit).epsilon(1e-12));
}

TEST_CASE("scalar curvature of directed triangles") {
    const double unit = 1.0 / std::sqrt(3.0);
    // coherent cycle: canonical anchor at each vertex sees a rotation
    Graph coherent = build_graph(
        {{"u", "v", 1, true}, {"v", "w", 1, true}, {"w", "u", 1, true}});
    CHECK(menger_scalar_vertex(coherent, coherent.require_vertex("u")) ==
          doctest::Approx(unit).epsilon(1e-12));
    // feed-forward: mixed alignment zeroes the contribution
    Graph ff = build_graph(
        {{"u", "v", 1, true}, {"u", "w", 1, true}, {"w", "v", 1, true}});
    CHECK(menger_scalar_vertex(ff, ff.require_vertex("u")) == 0.0);
}

TEST_SUITE_END();
