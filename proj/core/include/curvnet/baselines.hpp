#pragma once

#include "curvnet/cycles.hpp"
#include "curvnet/graph.hpp"
#include "curvnet/transport.hpp"

namespace curvnet {

// Weighted Forman curvature of an edge without 2-cell contributions:
//
//   F(e) = w_e ( w_u/w_e + w_v/w_e
//                - sum_{e_u ~ u, e_u != e} w_u / sqrt(w_e w_{e_u})
//                - sum_{e_v ~ v, e_v != e} w_v / sqrt(w_e w_{e_v}) )
//
// which on combinatorial graphs reduces to 4 - deg(u) - deg(v).
double forman_reduced(const Graph& g, EdgeId e);

// Augmented (2-cell) Forman curvature, combinatorial form:
//
//   F(e) = #cells(e) + 2 - #parallel(e)
//
// where the admitted cells at e come from two_cells_at_edge and an edge is
// parallel to e when it shares exactly one vertex or exactly one of those
// cells, but not both. Weights are ignored.
double forman_augmented(const Graph& g, EdgeId e,
                        const CellAdmission& admission = {});

// Ollivier-Ricci curvature 1 - W1(mu_u, mu_v) / d(u, v), where mu_x keeps
// `idleness` mass at x and spreads the rest uniformly over its neighbors,
// and distances are shortest-path distances. Exact W1 via exact_w1.
double ollivier_ricci_edge(const Graph& g, EdgeId e, double idleness = 0.0);

// The measure the Ollivier construction uses at x (exposed for tests).
ProbabilityMeasure ollivier_measure(const Graph& g, VertexId x, double idleness);

} // namespace curvnet
