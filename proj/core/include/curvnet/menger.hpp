#pragma once

#include "curvnet/cycles.hpp"
#include "curvnet/graph.hpp"

namespace curvnet {

enum class GeometryKind { euclidean, hyperbolic, spherical };

const char* to_string(GeometryKind kind);
GeometryKind geometry_kind_from_string(std::string_view name);

struct GeometryModel {
    GeometryKind kind = GeometryKind::euclidean;
    // With the classical constants kept, the unit triangle evaluates to
    // 1/sqrt(3) in the Euclidean model, which is what makes the
    // Menger/Haantjes ratio on unit triangles exactly sqrt(3)/3. Dropping
    // them removes the constant factor (4 Euclidean, 2 otherwise), which is
    // harmless for rankings on networks but breaks that ratio.
    bool keep_classical_constants = true;
};

// A metric triple of side lengths. Valid for curvature evaluation when the
// strict triangle inequality holds; the spherical model additionally needs
// the half-perimeter below pi.
struct TriangleGeom {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;

    double half_perimeter() const { return (a + b + c) / 2.0; }
    bool strict_triangle_inequality() const {
        return a < b + c && b < a + c && c < a + b && a > 0 && b > 0 && c > 0;
    }
};

// Menger curvature of a metric triangle under the chosen background
// geometry, evaluated by the Heron-type closed forms:
//
//   euclidean:   a b c / (4 sqrt(p (p-a) (p-b) (p-c)))
//   hyperbolic:  2 sinh(a/2) sinh(b/2) sinh(c/2)
//                  / sqrt(sinh p sinh(p-a) sinh(p-b) sinh(p-c))
//   spherical:   2 sin(a/2) sin(b/2) sin(c/2)
//                  / sqrt(sin p sin(p-a) sin(p-b) sin(p-c))
//
// with p the half-perimeter. In terms of the circumradius R of the triangle
// realized in the model space these are R, tanh R and tan R respectively,
// so for a fixed shape the three models converge as the scale shrinks and
// satisfy hyperbolic < euclidean < spherical pointwise. Throws DomainError
// outside the validity region.
double menger_curvature(const TriangleGeom& t, const GeometryModel& m = {});

// Orientation sign of a directed triangle anchored at the edge (from, to);
// see cycle_direction_sign for the convention. +1 on undirected graphs.
int directed_sign_triangle(const Graph& g, const Cycle& t, VertexId from,
                           VertexId to, SignConvention sc = SignConvention::standard);
int directed_sign_triangle(const Graph& g, const Cycle& t,
                           SignConvention sc = SignConvention::standard);

// Sum of sign-weighted Menger curvatures over the triangles at an edge,
// side lengths taken from edge weights. Empty sum is 0.
double menger_ricci_edge(const Graph& g, EdgeId e, const GeometryModel& m = {},
                         SignConvention sc = SignConvention::standard);

enum class ScalarAggregation {
    triangle_sum, // each triangle at v counted once
    edge_sum,     // sum of Ric over edges at v; counts each triangle twice
};

// Scalar curvature at a vertex. The triangle-sum form is the default; the
// edge-sum form is exposed because the two differ by exactly the triangle
// double-count and some comparisons want that aggregate instead.
double menger_scalar_vertex(const Graph& g, VertexId v,
                            const GeometryModel& m = {},
                            ScalarAggregation agg = ScalarAggregation::triangle_sum,
                            SignConvention sc = SignConvention::standard);

} // namespace curvnet
