#pragma once

#include <map>
#include <string>

#include "curvnet/cycles.hpp"
#include "curvnet/graph.hpp"

namespace curvnet {

struct HaantjesPathInput {
    double path_weight = 0.0;  // l(pi), total weight of the path
    double chord_weight = 0.0; // l(v0 vn), weight of the subtending chord
};

// Haantjes curvature of a path over its chord:
//
//   kappa^2 = (path - chord) / chord^3        when path >= chord,
//
// exactly 0 at equality (the splitting case), and for general weights where
// the path is *shorter* than its chord the roles reverse and the value is
// negated:
//
//   kappa   = -sqrt((chord - path) / path^3)  when path < chord.
//
// On a combinatorial path of n unit edges with unit chord this is
// sqrt(n - 1). Throws DomainError on nonpositive inputs.
double haantjes_path(const HaantjesPathInput& in);
double haantjes_path(double path_weight, double chord_weight);

// Per-cell part of a curvature value.
struct CellContribution {
    std::vector<VertexId> cell; // boundary vertices, chord endpoints first/last
    double kappa_h = 0.0;       // Haantjes curvature of the boundary path
    int sign = 1;               // orientation epsilon
    double contribution = 0.0;  // K term added to the total
};

struct SignedCurvature {
    double value = 0.0;
    std::vector<CellContribution> components; // value == sum of contributions
};

enum class FaceWeightMode {
    unit,              // every 2-cell has weight 1
    perimeter_penalty, // |boundary edges| - 2: triangles stay at 1, larger faces damped
    custom,            // looked up by canonical cell key
};

const char* to_string(FaceWeightMode mode);

// Geometric 2-cell weights for the weighted local Gauss-Bonnet form.
struct FaceWeightScheme {
    FaceWeightMode mode = FaceWeightMode::unit;
    std::map<std::string, double> custom; // canonical label key -> weight

    double weight(const Graph& g, const Cycle& c) const;
};

struct HaantjesOptions {
    CellAdmission admission;
    FaceWeightScheme scheme;
    SignConvention sign_convention = SignConvention::standard;
    // The weighted sectional form is K = (1/w) (2pi - eps kappa), which
    // degenerates to the unweighted one at w = 1. Setting this flips the
    // overall sign to the literal weighted variant K = -(1/w)(2pi - eps kappa).
    bool weighted_literal_sign = false;
};

// Orientation sign of a cycle of any length; see cycle_direction_sign.
int directed_sign_cycle(const Graph& g, const Cycle& c,
                        SignConvention sc = SignConvention::standard);

// Sectional curvature of a 2-cell anchored at an edge:
//   K = (1/w_g(c)) * (2 pi - eps * kappa_H(boundary path over the chord)).
double sectional_cell(const Graph& g, const Cycle& c,
                      const HaantjesOptions& opts = {});

// Haantjes-Ricci curvature of an edge: sum of sectional curvatures over the
// admitted 2-cells through it, with the per-cell breakdown.
SignedCurvature haantjes_ricci_edge(const Graph& g, EdgeId e,
                                    const HaantjesOptions& opts = {});

// Scalar curvature of a vertex: sectional curvatures of the admitted cells
// containing it, each counted once, anchored at the cell's canonical edge
// at the vertex.
double haantjes_scalar_vertex(const Graph& g, VertexId v,
                              const HaantjesOptions& opts = {});

// Haantjes-Ricci curvature in the direction u -> v. Each alternative path
// pi_i (see alternative_paths) closes a cell against the shortest path pi_0
// and contributes 2 pi - eps * kappa_H where
// kappa_H = sqrt((l(pi_i) - l(pi_0)) / l(pi_0)^3). No alternatives: 0 with
// empty components.
SignedCurvature directional_ricci(const Graph& g, VertexId u, VertexId v,
                                  const PathBound& bound,
                                  SignConvention sc = SignConvention::standard);

// Diagnostic: do the edge weights form a strong local metric, i.e. does
// every admitted cell's boundary path outweigh its chord for every choice
// of chord edge?
bool is_strong_local_metric(const Graph& g, const CellAdmission& admission = {});

} // namespace curvnet
