#pragma once

#include <array>
#include <optional>

#include "curvnet/graph.hpp"

namespace curvnet {

// Haantjes curvature of a triangle with the third argument as the chord:
// sqrt((duv + dvw - duw) / duw^3). Degenerate triples (two sides summing to
// the chord) give exactly 0; a negative numerator is a DomainError.
double triangle_haantjes(double duv, double dvw, double duw);

// Largest two-sides-minus-third over the three labelings; symmetric in its
// arguments.
double excess(double duv, double dvw, double duw);

// Excess divided by the triangle diameter (its longest side).
double aspect_ratio(double duv, double dvw, double duw);

// Per-triangle summary. kappa_h uses the diameter as chord, which is the
// labeling under which kappa_h^2 * diameter^3 equals the labeled excess and
// kappa_h = sqrt(labeled aspect ratio) / diameter.
struct TriangleStats {
    double kappa_h = 0.0;
    double excess = 0.0;
    double aspect_ratio = 0.0;
    double diameter = 0.0;

    static TriangleStats from_sides(double a, double b, double c);
};

struct TriangleWitness {
    std::array<VertexId, 3> vertices{}; // sorted
    double value = 0.0;
};

struct GlobalTriangleStats {
    std::size_t triangle_count = 0;
    std::optional<TriangleWitness> max_excess;
    std::optional<TriangleWitness> min_aspect_ratio;
};

// Extrema of excess and aspect ratio over every triangle of the graph,
// side lengths taken from edge weights, with witness triangles. Ties go to
// the smallest vertex triple. Triangle-free graphs give an empty result.
GlobalTriangleStats global_triangle_stats(const Graph& g);

} // namespace curvnet
