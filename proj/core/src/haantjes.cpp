#include "curvnet/haantjes.hpp"

#include <cmath>
#include <numbers>

#include "curvnet/shortest_path.hpp"

namespace curvnet {

double haantjes_path(const HaantjesPathInput& in) {
    return haantjes_path(in.path_weight, in.chord_weight);
}

double haantjes_path(double path_weight, double chord_weight) {
    if (!(path_weight > 0.0) || !(chord_weight > 0.0))
        throw DomainError("haantjes_path needs positive path and chord weights");
    if (path_weight == chord_weight) return 0.0;
    if (path_weight > chord_weight)
        return std::sqrt((path_weight - chord_weight) /
                         (chord_weight * chord_weight * chord_weight));
    return -std::sqrt((chord_weight - path_weight) /
                      (path_weight * path_weight * path_weight));
}

const char* to_string(FaceWeightMode mode) {
    switch (mode) {
        case FaceWeightMode::unit: return "unit";
        case FaceWeightMode::perimeter_penalty: return "perimeter-penalty";
        case FaceWeightMode::custom: return "custom";
    }
    return "?";
}

double FaceWeightScheme::weight(const Graph& g, const Cycle& c) const {
    switch (mode) {
        case FaceWeightMode::unit: return 1.0;
        case FaceWeightMode::perimeter_penalty:
            return static_cast<double>(c.length()) - 2.0;
        case FaceWeightMode::custom: {
            auto it = custom.find(cycle_label_key(g, c));
            if (it == custom.end())
                throw InputError("no custom face weight for cell " +
                                 cycle_label_key(g, c));
            if (!(it->second > 0.0))
                throw InputError("nonpositive custom face weight for cell " +
                                 cycle_label_key(g, c));
            return it->second;
        }
    }
    throw InvariantError("unhandled face weight mode");
}

int directed_sign_cycle(const Graph& g, const Cycle& c, SignConvention sc) {
    return cycle_direction_sign(g, c, sc);
}

double sectional_cell(const Graph& g, const Cycle& c, const HaantjesOptions& opts) {
    double kappa = haantjes_path(c.path_weight(), c.chord_weight);
    int eps = cycle_direction_sign(g, c, opts.sign_convention);
    double w = opts.scheme.weight(g, c);
    double k = (2.0 * std::numbers::pi - eps * kappa) / w;
    return opts.weighted_literal_sign ? -k : k;
}

namespace {

CellContribution contribution_of(const Graph& g, const Cycle& c,
                                 const HaantjesOptions& opts) {
    CellContribution out;
    out.cell = c.vertices;
    out.kappa_h = haantjes_path(c.path_weight(), c.chord_weight);
    out.sign = cycle_direction_sign(g, c, opts.sign_convention);
    out.contribution = sectional_cell(g, c, opts);
    return out;
}

} // namespace

SignedCurvature haantjes_ricci_edge(const Graph& g, EdgeId e,
                                    const HaantjesOptions& opts) {
    SignedCurvature out;
    for (const Cycle& c : two_cells_at_edge(g, e, opts.admission)) {
        out.components.push_back(contribution_of(g, c, opts));
        out.value += out.components.back().contribution;
    }
    return out;
}

double haantjes_scalar_vertex(const Graph& g, VertexId v,
                              const HaantjesOptions& opts) {
    double total = 0.0;
    for (const Cycle& c : two_cells_at_vertex(g, v, opts.admission))
        total += sectional_cell(g, c, opts);
    return total;
}

SignedCurvature directional_ricci(const Graph& g, VertexId u, VertexId v,
                                  const PathBound& bound, SignConvention sc) {
    auto sp = shortest_path(g, u, v);
    if (!sp) throw InputError("vertices '" + g.label(u) + "' and '" + g.label(v) +
                              "' are unreachable from each other");
    SignedCurvature out;
    for (const auto& alt : alternative_paths(g, u, v, bound)) {
        double alt_weight = 0.0;
        for (std::size_t i = 0; i + 1 < alt.size(); ++i)
            alt_weight += g.edge_weight(g.require_edge(alt[i], alt[i + 1]));

        double kappa = haantjes_path(alt_weight, sp->length);

        // Orientation of the cell pi_i pi_0^{-1}: traverse pi_0 with the
        // direction u -> v (the chord role), then pi_i back from v to u.
        int compat = 3;
        auto step = [&](VertexId x, VertexId y) {
            const Edge& e = g.edge(g.require_edge(x, y));
            if (!e.oriented()) return 3;
            return e.source() == x ? 1 : 2;
        };
        for (std::size_t i = 0; i + 1 < sp->path.size(); ++i)
            compat &= step(sp->path[i], sp->path[i + 1]);
        for (std::size_t i = alt.size(); i-- > 1;)
            compat &= step(alt[i], alt[i - 1]);
        int eps = (compat & 1) ? 1 : (compat & 2) ? -1 : 0;
        if (sc == SignConvention::swapped) eps = -eps;

        CellContribution part;
        part.cell = alt;
        part.kappa_h = kappa;
        part.sign = eps;
        part.contribution = 2.0 * std::numbers::pi - eps * kappa;
        out.value += part.contribution;
        out.components.push_back(std::move(part));
    }
    return out;
}

bool is_strong_local_metric(const Graph& g, const CellAdmission& admission) {
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        for (const Cycle& c : two_cells_at_edge(g, e, admission))
            if (!(c.path_weight() > c.chord_weight)) return false;
    return true;
}

} // namespace curvnet
