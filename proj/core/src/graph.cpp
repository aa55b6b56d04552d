#include "curvnet/graph.hpp"

#include <algorithm>

namespace curvnet {

std::optional<VertexId> Graph::find_vertex(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

VertexId Graph::require_vertex(std::string_view label) const {
    auto v = find_vertex(label);
    if (!v) throw InputError("unknown vertex '" + std::string(label) + "'");
    return *v;
}

bool Graph::has_nonunit_vertex_weights() const {
    return std::any_of(vertex_weights_.begin(), vertex_weights_.end(),
                       [](double w) { return w != 1.0; });
}

bool Graph::has_nonunit_edge_weights() const {
    return std::any_of(edges_.begin(), edges_.end(),
                       [](const Edge& e) { return e.weight != 1.0; });
}

std::span<const VertexId> Graph::neighbors(VertexId v) const {
    return {adj_.data() + adj_offsets_[v], adj_.data() + adj_offsets_[v + 1]};
}

std::span<const EdgeId> Graph::incident_edges(VertexId v) const {
    return {adj_edge_.data() + adj_offsets_[v],
            adj_edge_.data() + adj_offsets_[v + 1]};
}

std::size_t Graph::degree(VertexId v) const {
    return adj_offsets_[v + 1] - adj_offsets_[v];
}

bool Graph::adjacent(VertexId a, VertexId b) const {
    auto nb = neighbors(a);
    return std::binary_search(nb.begin(), nb.end(), b);
}

std::optional<EdgeId> Graph::edge_between(VertexId a, VertexId b) const {
    auto nb = neighbors(a);
    auto it = std::lower_bound(nb.begin(), nb.end(), b);
    if (it == nb.end() || *it != b) return std::nullopt;
    return incident_edges(a)[static_cast<std::size_t>(it - nb.begin())];
}

EdgeId Graph::require_edge(VertexId a, VertexId b) const {
    auto e = edge_between(a, b);
    if (!e)
        throw InputError("no edge between '" + label(a) + "' and '" +
                         label(b) + "'");
    return *e;
}

std::size_t GraphBuilder::intern(std::string_view label) {
    if (label.empty()) throw InputError("empty vertex id");
    auto [it, inserted] = seen_vertices_.emplace(label, vertices_.size());
    if (inserted) vertices_.emplace_back(label);
    return it->second;
}

GraphBuilder& GraphBuilder::add_vertex(std::string_view label) {
    intern(label);
    return *this;
}

GraphBuilder& GraphBuilder::add_edge(std::string_view u, std::string_view v,
                                     double weight, bool oriented) {
    if (u == v)
        throw InputError("self-loop on vertex '" + std::string(u) + "'");
    if (!(weight > 0.0))
        throw InputError("nonpositive edge weight on '" + std::string(u) +
                         "'-'" + std::string(v) + "'");
    intern(u);
    intern(v);
    std::string key = u < v ? std::string(u) + '\x1f' + std::string(v)
                            : std::string(v) + '\x1f' + std::string(u);
    if (!seen_pairs_.emplace(std::move(key), true).second)
        throw InputError("duplicate edge '" + std::string(u) + "'-'" +
                         std::string(v) + "'");
    rows_.push_back({std::string(u), std::string(v), weight, oriented});
    return *this;
}

GraphBuilder& GraphBuilder::set_vertex_weight(std::string_view label,
                                              double weight) {
    if (!(weight > 0.0))
        throw InputError("nonpositive vertex weight on '" +
                         std::string(label) + "'");
    if (!seen_vertices_.count(std::string(label)))
        throw InputError("vertex weight for unknown vertex '" +
                         std::string(label) + "'");
    vertex_weights_[std::string(label)] = weight;
    return *this;
}

Graph GraphBuilder::build() {
    Graph g;
    g.labels_ = vertices_;
    std::sort(g.labels_.begin(), g.labels_.end());
    for (VertexId i = 0; i < g.labels_.size(); ++i) g.index_[g.labels_[i]] = i;

    g.vertex_weights_.assign(g.labels_.size(), 1.0);
    for (const auto& [label, w] : vertex_weights_)
        g.vertex_weights_[g.index_.at(label)] = w;

    g.edges_.reserve(rows_.size());
    for (const auto& row : rows_) {
        VertexId a = g.index_.at(row.u);
        VertexId b = g.index_.at(row.v);
        Edge e;
        e.weight = row.weight;
        if (a < b) {
            e.u = a;
            e.v = b;
            e.dir = row.oriented ? EdgeDirection::forward : EdgeDirection::none;
        } else {
            e.u = b;
            e.v = a;
            e.dir = row.oriented ? EdgeDirection::backward : EdgeDirection::none;
        }
        g.edges_.push_back(e);
    }
    // Canonical edge order: by endpoint pair.
    std::sort(g.edges_.begin(), g.edges_.end(), [](const Edge& a, const Edge& b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    });
    g.directed_ = std::any_of(g.edges_.begin(), g.edges_.end(),
                              [](const Edge& e) { return e.oriented(); });

    const std::size_t n = g.labels_.size();
    g.adj_offsets_.assign(n + 1, 0);
    for (const Edge& e : g.edges_) {
        ++g.adj_offsets_[e.u + 1];
        ++g.adj_offsets_[e.v + 1];
    }
    for (std::size_t i = 1; i <= n; ++i) g.adj_offsets_[i] += g.adj_offsets_[i - 1];
    g.adj_.resize(2 * g.edges_.size());
    g.adj_edge_.resize(2 * g.edges_.size());
    std::vector<std::uint32_t> cursor(g.adj_offsets_.begin(),
                                      g.adj_offsets_.end() - 1);
    for (EdgeId id = 0; id < g.edges_.size(); ++id) {
        const Edge& e = g.edges_[id];
        g.adj_[cursor[e.u]] = e.v;
        g.adj_edge_[cursor[e.u]++] = id;
        g.adj_[cursor[e.v]] = e.u;
        g.adj_edge_[cursor[e.v]++] = id;
    }
    // Neighbor lists must be sorted: adjacency queries binary-search them.
    for (VertexId v = 0; v < n; ++v) {
        auto b = g.adj_offsets_[v], e = g.adj_offsets_[v + 1];
        std::vector<std::pair<VertexId, EdgeId>> tmp;
        tmp.reserve(e - b);
        for (auto i = b; i < e; ++i) tmp.emplace_back(g.adj_[i], g.adj_edge_[i]);
        std::sort(tmp.begin(), tmp.end());
        for (auto i = b; i < e; ++i) {
            g.adj_[i] = tmp[i - b].first;
            g.adj_edge_[i] = tmp[i - b].second;
        }
    }
    return g;
}

} // namespace curvnet
