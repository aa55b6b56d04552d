#include "curvnet/menger.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace curvnet {

const char* to_string(GeometryKind kind) {
    switch (kind) {
        case GeometryKind::euclidean: return "euclidean";
        case GeometryKind::hyperbolic: return "hyperbolic";
        case GeometryKind::spherical: return "spherical";
    }
    return "?";
}

GeometryKind geometry_kind_from_string(std::string_view name) {
    if (name == "euclidean") return GeometryKind::euclidean;
    if (name == "hyperbolic") return GeometryKind::hyperbolic;
    if (name == "spherical") return GeometryKind::spherical;
    throw InputError("unknown geometry model '" + std::string(name) + "'");
}

namespace {

std::string side_string(const TriangleGeom& t) {
    std::ostringstream out;
    out << "(" << t.a << ", " << t.b << ", " << t.c << ")";
    return out.str();
}

} // namespace

double menger_curvature(const TriangleGeom& t, const GeometryModel& m) {
    if (!t.strict_triangle_inequality())
        throw DomainError("triangle inequality violated for sides " +
                          side_string(t));
    const double p = t.half_perimeter();
    switch (m.kind) {
        case GeometryKind::euclidean: {
            double area2 = p * (p - t.a) * (p - t.b) * (p - t.c);
            double k = t.a * t.b * t.c / std::sqrt(area2);
            return m.keep_classical_constants ? k / 4.0 : k;
        }
        case GeometryKind::hyperbolic: {
            double denom = std::sinh(p) * std::sinh(p - t.a) *
                           std::sinh(p - t.b) * std::sinh(p - t.c);
            double k = std::sinh(t.a / 2) * std::sinh(t.b / 2) *
                       std::sinh(t.c / 2) / std::sqrt(denom);
            return m.keep_classical_constants ? 2.0 * k : k;
        }
        case GeometryKind::spherical: {
            if (!(p < std::numbers::pi))
                throw DomainError(
                    "spherical triangle outside validity domain (half-perimeter " +
                    std::to_string(p) + " >= pi) for sides " + side_string(t));
            double denom = std::sin(p) * std::sin(p - t.a) * std::sin(p - t.b) *
                           std::sin(p - t.c);
            double k = std::sin(t.a / 2) * std::sin(t.b / 2) * std::sin(t.c / 2) /
                       std::sqrt(denom);
            return m.keep_classical_constants ? 2.0 * k : k;
        }
    }
    throw InvariantError("unhandled geometry kind");
}

int directed_sign_triangle(const Graph& g, const Cycle& t, VertexId from,
                           VertexId to, SignConvention sc) {
    if (t.length() != 3) throw InputError("directed_sign_triangle needs a triangle");
    return cycle_direction_sign(g, t, from, to, sc);
}

int directed_sign_triangle(const Graph& g, const Cycle& t, SignConvention sc) {
    if (t.length() != 3) throw InputError("directed_sign_triangle needs a triangle");
    return cycle_direction_sign(g, t, sc);
}

namespace {

TriangleGeom sides_of(const Graph& g, const Cycle& tri) {
    const auto& vs = tri.vertices;
    TriangleGeom t;
    t.a = g.edge_weight(g.require_edge(vs[0], vs[1]));
    t.b = g.edge_weight(g.require_edge(vs[1], vs[2]));
    t.c = g.edge_weight(g.require_edge(vs[2], vs[0]));
    return t;
}

double signed_triangle_curvature(const Graph& g, const Cycle& tri,
                                 const GeometryModel& m, SignConvention sc) {
    TriangleGeom t = sides_of(g, tri);
    double k;
    try {
        k = menger_curvature(t, m);
    } catch (const DomainError& err) {
        throw DomainError(std::string(err.what()) + " in triangle " +
                          cycle_label_key(g, tri));
    }
    return cycle_direction_sign(g, tri, sc) * k;
}

} // namespace

double menger_ricci_edge(const Graph& g, EdgeId e, const GeometryModel& m,
                         SignConvention sc) {
    double total = 0.0;
    for (const Cycle& tri : triangles_at_edge(g, e))
        total += signed_triangle_curvature(g, tri, m, sc);
    return total;
}

double menger_scalar_vertex(const Graph& g, VertexId v, const GeometryModel& m,
                            ScalarAggregation agg, SignConvention sc) {
    if (agg == ScalarAggregation::edge_sum) {
        double total = 0.0;
        for (EdgeId e : g.incident_edges(v)) total += menger_ricci_edge(g, e, m, sc);
        return total;
    }
    double total = 0.0;
    for (const Cycle& tri : triangles_at_vertex(g, v)) {
        // Anchor at the canonical edge at v for the directed sign.
        const auto& vs = tri.vertices;
        std::size_t pos =
            static_cast<std::size_t>(std::find(vs.begin(), vs.end(), v) - vs.begin());
        VertexId w = std::min(vs[(pos + 1) % 3], vs[(pos + 2) % 3]);
        Cycle anchored;
        anchored.anchor = g.require_edge(v, w);
        VertexId lo = std::min(v, w), hi = std::max(v, w);
        VertexId mid = vs[0] ^ vs[1] ^ vs[2] ^ v ^ w;
        anchored.vertices = {lo, mid, hi};
        anchored.chord_weight = g.edge_weight(*anchored.anchor);
        anchored.perimeter = tri.perimeter;
        total += signed_triangle_curvature(g, anchored, m, sc);
    }
    return total;
}

} // namespace curvnet
