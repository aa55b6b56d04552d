#include "curvnet/cycles.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "curvnet/shortest_path.hpp"

namespace curvnet {

void CellAdmission::validate() const {
    if (max_length < 3)
        throw InputError("cell admission max_length must be >= 3");
}

const char* to_string(CellAdmissionMode mode) {
    switch (mode) {
        case CellAdmissionMode::chordless: return "chordless";
        case CellAdmissionMode::all_simple: return "all-simple";
        case CellAdmissionMode::triangles_only: return "triangles-only";
    }
    return "?";
}

namespace {

double closing_weight(const Graph& g, VertexId a, VertexId b) {
    auto e = g.edge_between(a, b);
    if (!e) throw InvariantError("cycle closing edge missing from graph");
    return g.edge_weight(*e);
}

double boundary_weight(const Graph& g, const std::vector<VertexId>& vs) {
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < vs.size(); ++i)
        total += closing_weight(g, vs[i], vs[i + 1]);
    total += closing_weight(g, vs.back(), vs.front());
    return total;
}

Cycle make_anchored(const Graph& g, EdgeId anchor,
                    std::vector<VertexId> path_from_min) {
    Cycle c;
    c.vertices = std::move(path_from_min);
    c.anchor = anchor;
    c.chord_weight = g.edge_weight(anchor);
    c.perimeter = boundary_weight(g, c.vertices);
    return c;
}

bool cycle_order_less(const Cycle& a, const Cycle& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.vertices < b.vertices;
}

struct CellSearch {
    const Graph& g;
    const Edge& e;
    EdgeId eid;
    CellAdmissionMode mode;
    std::uint32_t max_path_edges; // cycle length - 1
    std::vector<std::uint32_t> hops_to_u;
    std::vector<char> on_path;
    std::vector<VertexId> path; // starts at e.v, grows toward e.u
    std::vector<Cycle>* out;

    void emit(VertexId last) {
        std::vector<VertexId> vs;
        vs.reserve(path.size() + 1);
        vs.push_back(e.u);
        vs.push_back(last);
        for (std::size_t i = path.size(); i-- > 0;) vs.push_back(path[i]);
        // vs now runs e.u .. e.v; the anchor closes it.
        out->push_back(make_anchored(g, eid, std::move(vs)));
    }

    // True when y may be appended without creating a chord against the
    // current path (its predecessor excepted).
    bool chord_free(VertexId y) const {
        for (std::size_t i = 0; i + 1 < path.size(); ++i)
            if (g.adjacent(y, path[i])) return false;
        return true;
    }

    void extend() {
        VertexId cur = path.back();
        const std::uint32_t used = static_cast<std::uint32_t>(path.size()) - 1;
        for (VertexId y : g.neighbors(cur)) {
            if (y == e.u) continue; // closing is handled via adjacency below
            if (on_path[y]) continue;
            if (hops_to_u[y] == kNoHop ||
                used + 1 + hops_to_u[y] > max_path_edges)
                continue;
            if (mode == CellAdmissionMode::chordless && !chord_free(y)) continue;
            bool closes = g.adjacent(y, e.u);
            if (closes) emit(y);
            // A chordless cycle cannot pass through a neighbor of e.u
            // without closing there.
            if (closes && mode == CellAdmissionMode::chordless) continue;
            if (used + 1 < max_path_edges) {
                on_path[y] = 1;
                path.push_back(y);
                extend();
                path.pop_back();
                on_path[y] = 0;
            }
        }
    }
};

} // namespace

std::vector<Cycle> triangles_at_edge(const Graph& g, EdgeId eid) {
    if (eid >= g.edge_count()) throw InputError("edge id out of range");
    const Edge& e = g.edge(eid);
    std::vector<Cycle> out;
    auto nu = g.neighbors(e.u);
    auto nv = g.neighbors(e.v);
    std::vector<VertexId> common;
    std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(),
                          std::back_inserter(common));
    out.reserve(common.size());
    for (VertexId w : common)
        out.push_back(make_anchored(g, eid, {e.u, w, e.v}));
    std::sort(out.begin(), out.end(), cycle_order_less);
    return out;
}

std::vector<Cycle> triangles_at_vertex(const Graph& g, VertexId v) {
    if (v >= g.vertex_count()) throw InputError("vertex id out of range");
    std::vector<Cycle> out;
    auto nbrs = g.neighbors(v);
    for (std::size_t i = 0; i < nbrs.size(); ++i)
        for (std::size_t j = i + 1; j < nbrs.size(); ++j)
            if (g.adjacent(nbrs[i], nbrs[j])) {
                Cycle c;
                std::array<VertexId, 3> t{v, nbrs[i], nbrs[j]};
                std::sort(t.begin(), t.end());
                c.vertices.assign(t.begin(), t.end());
                c.chord_weight = closing_weight(g, c.vertices.back(), c.vertices.front());
                c.perimeter = boundary_weight(g, c.vertices);
                out.push_back(std::move(c));
            }
    std::sort(out.begin(), out.end(), cycle_order_less);
    return out;
}

std::vector<Cycle> two_cells_at_edge(const Graph& g, EdgeId eid,
                                     const CellAdmission& admission) {
    admission.validate();
    if (eid >= g.edge_count()) throw InputError("edge id out of range");
    if (admission.mode == CellAdmissionMode::triangles_only)
        return triangles_at_edge(g, eid);

    const Edge& e = g.edge(eid);
    std::vector<Cycle> out;
    CellSearch search{g,
                      e,
                      eid,
                      admission.mode,
                      admission.max_length - 1,
                      hop_distances(g, e.u, eid, admission.max_length - 1),
                      std::vector<char>(g.vertex_count(), 0),
                      {},
                      &out};
    if (search.hops_to_u[e.v] != kNoHop) {
        search.path.push_back(e.v);
        search.on_path[e.v] = 1;
        search.on_path[e.u] = 1;
        search.extend();
    }
    std::sort(out.begin(), out.end(), cycle_order_less);
    return out;
}

std::vector<Cycle> two_cells_at_vertex(const Graph& g, VertexId v,
                                       const CellAdmission& admission) {
    if (v >= g.vertex_count()) throw InputError("vertex id out of range");
    std::set<std::vector<VertexId>> seen;
    std::vector<Cycle> out;
    for (EdgeId eid : g.incident_edges(v)) {
        for (const Cycle& c : two_cells_at_edge(g, eid, admission)) {
            auto key = canonical_cycle_vertices(c);
            if (!seen.insert(key).second) continue;
            // Re-anchor at the cell's canonical edge at v: toward the
            // smaller of v's two neighbors along the boundary.
            const std::size_t n = key.size();
            std::size_t pos =
                static_cast<std::size_t>(std::find(key.begin(), key.end(), v) -
                                         key.begin());
            VertexId w = std::min(key[(pos + 1) % n], key[(pos + n - 1) % n]);
            EdgeId anchor = g.require_edge(v, w);
            // Walk the boundary starting at whichever anchor endpoint is
            // not immediately followed by the other, so the v-w edge is
            // left as the implicit closing edge.
            std::size_t start = key[(pos + 1) % n] == w ? (pos + 1) % n : pos;
            std::vector<VertexId> walk;
            walk.reserve(n);
            for (std::size_t i = 0; i < n; ++i) walk.push_back(key[(start + i) % n]);
            if (walk.front() > walk.back()) std::reverse(walk.begin(), walk.end());
            if (walk.front() != std::min(v, w) || walk.back() != std::max(v, w))
                throw InvariantError("cell re-anchoring failed");
            out.push_back(make_anchored(g, anchor, std::move(walk)));
        }
    }
    std::sort(out.begin(), out.end(), cycle_order_less);
    return out;
}

std::vector<std::vector<VertexId>> alternative_paths(const Graph& g, VertexId u,
                                                     VertexId v,
                                                     const PathBound& bound) {
    if (u == v) throw InputError("alternative_paths endpoints must differ");
    auto sp = shortest_path(g, u, v);
    if (!sp) throw InputError("vertices '" + g.label(u) + "' and '" + g.label(v) +
                              "' are unreachable from each other");
    std::vector<char> blocked(g.vertex_count(), 0);
    for (std::size_t i = 1; i + 1 < sp->path.size(); ++i) blocked[sp->path[i]] = 1;

    auto hop_to_v = hop_distances(g, v);
    auto wdist_to_v = bound.weight_bound
                          ? shortest_path_distances(g, v)
                          : std::vector<double>{};

    struct Candidate {
        double weight;
        std::vector<VertexId> path;
    };
    std::vector<Candidate> candidates;
    std::vector<VertexId> path{u};
    std::vector<char> on_path(g.vertex_count(), 0);
    on_path[u] = 1;
    double path_weight = 0.0;

    auto admissible = [&](VertexId y, double w2) {
        if (bound.weight_bound) return w2 + wdist_to_v[y] <= bound.limit + 1e-12;
        double used = static_cast<double>(path.size()); // edges used after the step
        return used + hop_to_v[y] <= bound.limit;
    };

    auto dfs = [&](auto&& self, VertexId cur) -> void {
        auto nbrs = g.neighbors(cur);
        auto eids = g.incident_edges(cur);
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            VertexId y = nbrs[i];
            if (on_path[y]) continue;
            double w2 = path_weight + g.edge_weight(eids[i]);
            if (y == v) {
                bool within = bound.weight_bound
                                  ? w2 <= bound.limit + 1e-12
                                  : static_cast<double>(path.size()) <= bound.limit;
                if (within) {
                    auto full = path;
                    full.push_back(v);
                    if (full != sp->path) candidates.push_back({w2, std::move(full)});
                }
                continue;
            }
            if (blocked[y]) continue;
            if (hop_to_v[y] == kNoHop) continue;
            if (!admissible(y, w2)) continue;
            on_path[y] = 1;
            path.push_back(y);
            double saved = path_weight;
            path_weight = w2;
            self(self, y);
            path_weight = saved;
            path.pop_back();
            on_path[y] = 0;
        }
    };
    dfs(dfs, u);

    std::sort(candidates.begin(), candidates.end(),
              [](const Candidate& a, const Candidate& b) {
                  if (a.weight != b.weight) return a.weight < b.weight;
                  return a.path < b.path;
              });

    // Keep paths whose interiors are pairwise disjoint, so every kept path
    // closes an elementary cycle against pi_0 and against the family.
    std::vector<char> claimed(g.vertex_count(), 0);
    std::vector<std::vector<VertexId>> out;
    for (auto& c : candidates) {
        bool ok = true;
        for (std::size_t i = 1; i + 1 < c.path.size(); ++i)
            if (claimed[c.path[i]]) {
                ok = false;
                break;
            }
        if (!ok) continue;
        for (std::size_t i = 1; i + 1 < c.path.size(); ++i) claimed[c.path[i]] = 1;
        out.push_back(std::move(c.path));
    }
    return out;
}

namespace {

// Edge compatibility with a directed step x->y: bit 1 = usable forward,
// bit 2 = usable backward.
int step_compat(const Graph& g, VertexId x, VertexId y) {
    auto eid = g.edge_between(x, y);
    if (!eid) throw InvariantError("cycle step is not a graph edge");
    const Edge& e = g.edge(*eid);
    if (!e.oriented()) return 3;
    return e.source() == x ? 1 : 2;
}

} // namespace

int cycle_direction_sign(const Graph& g, const Cycle& c, VertexId from,
                         VertexId to, SignConvention sc) {
    const auto& vs = c.vertices;
    if (vs.size() < 3) throw InputError("cycles have at least 3 vertices");
    VertexId v0 = vs.front(), vn = vs.back();
    if (!((from == v0 && to == vn) || (from == vn && to == v0)))
        throw InputError("direction sign endpoints must be the cycle's chord");

    int all = 3;
    all &= step_compat(g, from, to); // the anchor / closing edge itself
    if (from == v0) {
        for (std::size_t i = vs.size(); i-- > 1;)
            all &= step_compat(g, vs[i], vs[i - 1]);
    } else {
        for (std::size_t i = 0; i + 1 < vs.size(); ++i)
            all &= step_compat(g, vs[i], vs[i + 1]);
    }
    int sign = (all & 1) ? 1 : (all & 2) ? -1 : 0;
    return sc == SignConvention::swapped ? -sign : sign;
}

int cycle_direction_sign(const Graph& g, const Cycle& c, SignConvention sc) {
    VertexId a = c.vertices.front(), b = c.vertices.back();
    VertexId from = a, to = b;
    if (auto eid = c.anchor ? c.anchor : g.edge_between(a, b)) {
        const Edge& e = g.edge(*eid);
        from = e.source();
        to = e.target();
    }
    return cycle_direction_sign(g, c, from, to, sc);
}

std::vector<VertexId> canonical_cycle_vertices(const Cycle& c) {
    const auto& vs = c.vertices;
    const std::size_t n = vs.size();
    std::size_t mi = std::min_element(vs.begin(), vs.end()) - vs.begin();
    VertexId next = vs[(mi + 1) % n];
    VertexId prev = vs[(mi + n - 1) % n];
    std::vector<VertexId> out;
    out.reserve(n);
    if (next <= prev)
        for (std::size_t i = 0; i < n; ++i) out.push_back(vs[(mi + i) % n]);
    else
        for (std::size_t i = 0; i < n; ++i) out.push_back(vs[(mi + n - i) % n]);
    return out;
}

std::string cycle_label_key(const Graph& g, const Cycle& c) {
    std::string key;
    for (VertexId v : canonical_cycle_vertices(c)) {
        if (!key.empty()) key += '-';
        key += g.label(v);
    }
    return key;
}

} // namespace curvnet
