#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "curvnet/generators.hpp"

namespace curvnet {

// One entry of the standard-tessellation comparison: the value this
// library computes per edge, next to the previously published value for
// the same grid, with an explicit match/delta verdict.
struct Table1Cell {
    std::string measure;  // Ric_H, Ric_F-reduced, Ric_F-augmented, Ric_O
    LatticeKind lattice = LatticeKind::triangular;
    double computed = 0.0;
    std::optional<double> published;  // nullopt: no published value
    std::string published_expr;       // closed form, for display
    bool match = false;               // |computed - published| <= 1e-9
    std::string note;                 // set when a delta has a known shape
};

struct Table1Report {
    std::vector<Table1Cell> cells;
    const Table1Cell& cell(const std::string& measure, LatticeKind lattice) const;
};

// Computes all four curvature types on all four periodic tessellations.
// Every edge of a torus patch is equivalent, so the per-edge value is
// asserted constant across edges before being reported; 2-cells are
// admitted chordless up to each tessellation's face length, and the
// Ollivier row uses the given idleness.
Table1Report compute_table1(double idleness = 0.0);

void render_table1(const Table1Report& report, std::ostream& out);

} // namespace curvnet
