#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "curvnet/graph.hpp"

namespace curvnet {

enum class LatticeKind { triangular, square, hexagonal, cubic };

const char* to_string(LatticeKind kind);
LatticeKind lattice_kind_from_string(std::string_view name);

// Regular degree and face cycle length of each tessellation.
unsigned lattice_degree(LatticeKind kind);
unsigned lattice_face_length(LatticeKind kind);

struct LatticeSpec {
    LatticeKind kind = LatticeKind::square;
    std::vector<std::uint32_t> dims; // 2 entries (3 for cubic)
    bool periodic = true;
    // Periodic patches must be big enough that no cycle up to this length
    // wraps around a torus direction: every dimension must be at least
    // safe_cycle_len + 1. Callers enumerating longer cells should raise it.
    std::uint32_t safe_cycle_len = 4;
};

// Unit-weight undirected tessellation patch with deterministic labels.
// Periodic (torus) patches are regular: every vertex reaches the full
// degree 6/4/3/6 for triangular/square/hexagonal/cubic. Open patches keep
// the same interior structure and leave boundary vertices short.
Graph generate_lattice(const LatticeSpec& spec);

// Edges incident to vertices whose degree is below the regular degree;
// nonempty only for open-boundary patches.
std::vector<EdgeId> lattice_boundary_edges(const Graph& g, const LatticeSpec& spec);

// The three directed worked examples: unit weights, one distinguished edge
// u -> v whose Haantjes-Ricci curvature takes a closed-form value.
//   'a': three coherently directed triangles sharing u -> v   (6pi - 3)
//   'b': a single coherently directed triangle                (2pi - 1)
//   'c': two coherent triangles plus one coherent quadrilateral
//        sharing u -> v                                       (6pi - 2 - sqrt 2)
Graph figure3_graph(char which);

} // namespace curvnet
