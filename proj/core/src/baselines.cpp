#include "curvnet/baselines.hpp"

#include <cmath>
#include <map>
#include <set>

#include "curvnet/shortest_path.hpp"

namespace curvnet {

double forman_reduced(const Graph& g, EdgeId eid) {
    const Edge& e = g.edge(eid);
    double we = e.weight;
    double wu = g.vertex_weight(e.u), wv = g.vertex_weight(e.v);
    double total = wu / we + wv / we;
    for (EdgeId other : g.incident_edges(e.u)) {
        if (other == eid) continue;
        total -= wu / std::sqrt(we * g.edge_weight(other));
    }
    for (EdgeId other : g.incident_edges(e.v)) {
        if (other == eid) continue;
        total -= wv / std::sqrt(we * g.edge_weight(other));
    }
    return we * total;
}

double forman_augmented(const Graph& g, EdgeId eid,
                        const CellAdmission& admission) {
    const Edge& e = g.edge(eid);
    auto cells = two_cells_at_edge(g, eid, admission);

    // Count, per other edge, how many admitted cells at e contain it.
    std::map<EdgeId, std::size_t> shared_cells;
    for (const Cycle& c : cells) {
        const auto& vs = c.vertices;
        for (std::size_t i = 0; i + 1 < vs.size(); ++i)
            shared_cells[g.require_edge(vs[i], vs[i + 1])]++;
    }
    shared_cells.erase(eid);

    std::size_t parallel = 0;
    std::set<EdgeId> vertex_sharing;
    for (EdgeId other : g.incident_edges(e.u))
        if (other != eid) vertex_sharing.insert(other);
    for (EdgeId other : g.incident_edges(e.v))
        if (other != eid) vertex_sharing.insert(other);
    for (EdgeId other : vertex_sharing) {
        auto it = shared_cells.find(other);
        std::size_t cells_with = it == shared_cells.end() ? 0 : it->second;
        if (cells_with != 1) ++parallel; // shares a vertex, not exactly one cell
    }
    for (const auto& [other, count] : shared_cells)
        if (count == 1 && !vertex_sharing.count(other)) ++parallel;

    return static_cast<double>(cells.size()) + 2.0 -
           static_cast<double>(parallel);
}

ProbabilityMeasure ollivier_measure(const Graph& g, VertexId x, double idleness) {
    if (!(idleness >= 0.0) || !(idleness <= 1.0))
        throw InputError("idleness must lie in [0, 1]");
    if (g.degree(x) == 0)
        throw InputError("Ollivier measure undefined at isolated vertex '" +
                         g.label(x) + "'");
    ProbabilityMeasure mu;
    if (idleness > 0.0) {
        mu.support.push_back(x);
        mu.mass.push_back(idleness);
    }
    if (idleness < 1.0) {
        double share = (1.0 - idleness) / static_cast<double>(g.degree(x));
        for (VertexId y : g.neighbors(x)) {
            mu.support.push_back(y);
            mu.mass.push_back(share);
        }
    }
    return mu;
}

double ollivier_ricci_edge(const Graph& g, EdgeId eid, double idleness) {
    const Edge& e = g.edge(eid);
    ProbabilityMeasure mu = ollivier_measure(g, e.u, idleness);
    ProbabilityMeasure nu = ollivier_measure(g, e.v, idleness);

    DistanceTable dist;
    dist.rows = mu.support.size();
    dist.cols = nu.support.size();
    dist.data.assign(dist.rows * dist.cols, 0.0);
    for (std::size_t i = 0; i < mu.support.size(); ++i) {
        auto field = shortest_path_distances(g, mu.support[i]);
        for (std::size_t j = 0; j < nu.support.size(); ++j) {
            double d = field[nu.support[j]];
            if (std::isinf(d))
                throw InputError("Ollivier supports span disconnected vertices");
            dist.at(i, j) = d;
        }
    }
    double d_uv = shortest_path_distances(g, e.u)[e.v];

    TransportPlan plan = exact_w1(mu, nu, dist);
    return 1.0 - plan.cost / d_uv;
}

} // namespace curvnet
