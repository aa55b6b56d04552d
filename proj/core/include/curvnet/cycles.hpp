#pragma once

#include <optional>
#include <vector>

#include "curvnet/graph.hpp"

namespace curvnet {

// A simple closed walk v0..vn; the closing edge vn-v0 is implicit. When
// anchored, the anchor edge *is* the closing edge (it joins v0 and vn) and
// the stored vertex sequence is the boundary path subtended by that chord.
// Anchored cycles start at the anchor's smaller endpoint; unanchored ones
// are rotated/reflected to start at their smallest vertex and proceed
// toward the smaller of its two cycle neighbors.
struct Cycle {
    std::vector<VertexId> vertices;
    std::optional<EdgeId> anchor;
    double perimeter = 0.0;    // all boundary edges, closing edge included
    double chord_weight = 0.0; // weight of the anchor / closing edge

    std::size_t length() const { return vertices.size(); }
    double path_weight() const { return perimeter - chord_weight; }
};

enum class CellAdmissionMode {
    chordless,      // induced cycles only: no edge joins non-consecutive vertices
    all_simple,     // every simple cycle through the anchor
    triangles_only, // clique-complex style: length-3 cells
};

// Which bounded cycles count as the 2-cells of a general network.
struct CellAdmission {
    CellAdmissionMode mode = CellAdmissionMode::chordless;
    std::uint32_t max_length = 5; // L >= 3

    void validate() const;
};

const char* to_string(CellAdmissionMode mode);

// One Cycle per common neighbor of the edge's endpoints, anchored at it.
std::vector<Cycle> triangles_at_edge(const Graph& g, EdgeId e);

// Every triangle containing v, once, in canonical unanchored form.
std::vector<Cycle> triangles_at_vertex(const Graph& g, VertexId v);

// All admitted cells through the edge: simple cycles of length <= L that
// use the edge, each reported once regardless of traversal direction,
// anchored at it and sorted by (length, vertex sequence). The search is a
// depth-bounded DFS from one anchor endpoint pruned by remaining hop
// budget; nothing outside the anchored cycle space is ever enumerated.
std::vector<Cycle> two_cells_at_edge(const Graph& g, EdgeId e,
                                     const CellAdmission& admission = {});

// All admitted cells containing v, each once, re-anchored at the cell's
// canonical edge at v (toward v's smallest cycle neighbor).
std::vector<Cycle> two_cells_at_vertex(const Graph& g, VertexId v,
                                       const CellAdmission& admission = {});

// Bound for alternative-path enumeration: hop count by default, total
// path weight when weight_bound is set.
struct PathBound {
    double limit = 0.0;
    bool weight_bound = false;
};

// Simple u->v paths that close an elementary cycle against the shortest
// path pi_0: internally disjoint from pi_0 and from every previously
// accepted path, within the bound, pi_0 itself excluded. Enumeration order
// (and therefore which paths win vertices) is total weight, then
// lexicographic vertex sequence. Throws InputError when u,v are disconnected.
std::vector<std::vector<VertexId>> alternative_paths(const Graph& g, VertexId u,
                                                     VertexId v,
                                                     const PathBound& bound);

enum class SignConvention { standard, swapped };

// Orientation sign of a cycle relative to a traversal that crosses the
// anchor from->to and returns along the boundary path: +1 when every edge
// (anchor included) is compatible with that traversal, -1 when every edge
// is compatible with the reverse, 0 for mixed orientations. Unoriented
// edges are compatible both ways, so undirected cycles give +1.
int cycle_direction_sign(const Graph& g, const Cycle& c, VertexId from,
                         VertexId to, SignConvention sc = SignConvention::standard);

// Same, traversing the anchor (or closing edge) along its own orientation.
int cycle_direction_sign(const Graph& g, const Cycle& c,
                         SignConvention sc = SignConvention::standard);

// Canonical unanchored vertex sequence (dedup key across anchors).
std::vector<VertexId> canonical_cycle_vertices(const Cycle& c);

// Human-readable cell key: canonical vertex labels joined with '-'.
std::string cycle_label_key(const Graph& g, const Cycle& c);

} // namespace curvnet
