#include "curvnet/shortest_path.hpp"

#include <algorithm>
#include <queue>

namespace curvnet {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool traversable(const Edge& e, VertexId from, bool respect_direction,
                 bool reverse_arcs) {
    if (!respect_direction || !e.oriented()) return true;
    VertexId src = reverse_arcs ? e.target() : e.source();
    return src == from;
}

// Reconstructs the vertex sequence u..x by walking the parent chain.
std::vector<VertexId> chain(const std::vector<VertexId>& parent, VertexId x) {
    std::vector<VertexId> seq;
    for (VertexId c = x; c != kNoVertex; c = parent[c]) seq.push_back(c);
    std::reverse(seq.begin(), seq.end());
    return seq;
}

} // namespace

std::vector<double> shortest_path_distances(const Graph& g, VertexId source,
                                            bool respect_direction,
                                            bool reverse_arcs) {
    std::vector<double> dist(g.vertex_count(), kInf);
    using Item = std::pair<double, VertexId>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    dist[source] = 0.0;
    pq.emplace(0.0, source);
    while (!pq.empty()) {
        auto [d, x] = pq.top();
        pq.pop();
        if (d > dist[x]) continue;
        auto nbrs = g.neighbors(x);
        auto eids = g.incident_edges(x);
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            const Edge& e = g.edge(eids[i]);
            if (!traversable(e, x, respect_direction, reverse_arcs)) continue;
            double d2 = d + e.weight;
            if (d2 < dist[nbrs[i]]) {
                dist[nbrs[i]] = d2;
                pq.emplace(d2, nbrs[i]);
            }
        }
    }
    return dist;
}

std::optional<PathMetricResult> shortest_path(const Graph& g, VertexId u,
                                              VertexId v,
                                              const ShortestPathOptions& opts) {
    if (u == v) throw InputError("shortest_path endpoints must differ");
    const std::size_t n = g.vertex_count();
    std::vector<double> dist(n, kInf);
    std::vector<VertexId> parent(n, kNoVertex);
    std::vector<char> settled(n, 0);
    using Item = std::pair<double, VertexId>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    dist[u] = 0.0;
    pq.emplace(0.0, u);

    // Edge weights are strictly positive, so every predecessor on a shortest
    // path settles strictly before its successor pops; the lexicographic
    // tie-break below is therefore final once a vertex is settled.
    while (!pq.empty()) {
        auto [d, x] = pq.top();
        pq.pop();
        if (settled[x]) continue;
        settled[x] = 1;
        auto nbrs = g.neighbors(x);
        auto eids = g.incident_edges(x);
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            VertexId y = nbrs[i];
            if (settled[y]) continue;
            const Edge& e = g.edge(eids[i]);
            if (!traversable(e, x, opts.respect_direction, false)) continue;
            double d2 = d + e.weight;
            if (d2 < dist[y]) {
                dist[y] = d2;
                parent[y] = x;
                pq.emplace(d2, y);
            } else if (d2 == dist[y] && parent[y] != kNoVertex && parent[y] != x) {
                // Same weight: keep whichever full sequence is smaller.
                auto cand = chain(parent, x);
                cand.push_back(y);
                auto cur = chain(parent, parent[y]);
                cur.push_back(y);
                if (cand < cur) parent[y] = x;
            }
        }
    }
    if (dist[v] == kInf) return std::nullopt;
    PathMetricResult r;
    r.length = dist[v];
    r.path = chain(parent, v);
    return r;
}

std::vector<std::uint32_t> hop_distances(const Graph& g, VertexId source,
                                         std::optional<EdgeId> skip_edge,
                                         std::uint32_t max_depth) {
    std::vector<std::uint32_t> dist(g.vertex_count(), kNoHop);
    std::vector<VertexId> frontier{source};
    dist[source] = 0;
    std::vector<VertexId> next;
    std::uint32_t level = 0;
    while (!frontier.empty() && level < max_depth) {
        ++level;
        next.clear();
        for (VertexId x : frontier) {
            auto nbrs = g.neighbors(x);
            auto eids = g.incident_edges(x);
            for (std::size_t i = 0; i < nbrs.size(); ++i) {
                if (skip_edge && eids[i] == *skip_edge) continue;
                if (dist[nbrs[i]] != kNoHop) continue;
                dist[nbrs[i]] = level;
                next.push_back(nbrs[i]);
            }
        }
        frontier.swap(next);
    }
    return dist;
}

} // namespace curvnet
