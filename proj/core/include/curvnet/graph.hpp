#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "curvnet/errors.hpp"

namespace curvnet {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

// Orientation of an edge relative to its canonical (u < v) endpoint order.
enum class EdgeDirection : std::int8_t {
    none = 0,     // plain undirected edge
    forward = 1,  // directed u -> v
    backward = -1 // directed v -> u
};

struct Edge {
    VertexId u = 0; // canonical: u < v
    VertexId v = 0;
    double weight = 1.0;
    EdgeDirection dir = EdgeDirection::none;

    bool oriented() const { return dir != EdgeDirection::none; }
    // Source/target of the edge's own orientation; unoriented edges fall
    // back to the canonical order so every edge has a well-defined traversal.
    VertexId source() const { return dir == EdgeDirection::backward ? v : u; }
    VertexId target() const { return dir == EdgeDirection::backward ? u : v; }
    VertexId other(VertexId x) const { return x == u ? v : u; }
};

// Immutable simple graph with positive edge and vertex weights.
//
// Vertex ids are opaque strings mapped to dense indices at build time;
// indices follow lexicographic label order, so index comparisons and label
// comparisons agree everywhere a deterministic minimum is taken. Directed
// graphs keep one underlying undirected adjacency; direction is per-edge
// metadata and only ever contributes a sign to curvature values.
//
// Instances are immutable after construction and safe for concurrent reads.
class Graph {
public:
    Graph() = default;

    std::size_t vertex_count() const { return labels_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    // True when any edge carries an orientation.
    bool directed() const { return directed_; }

    const std::string& label(VertexId v) const { return labels_[v]; }
    std::optional<VertexId> find_vertex(std::string_view label) const;
    VertexId require_vertex(std::string_view label) const;

    double vertex_weight(VertexId v) const { return vertex_weights_[v]; }
    bool has_nonunit_vertex_weights() const;
    bool has_nonunit_edge_weights() const;

    const Edge& edge(EdgeId e) const { return edges_[e]; }
    std::span<const Edge> edges() const { return edges_; }
    double edge_weight(EdgeId e) const { return edges_[e].weight; }

    // Sorted underlying-undirected neighbor list, and the incident edge ids
    // in the same order.
    std::span<const VertexId> neighbors(VertexId v) const;
    std::span<const EdgeId> incident_edges(VertexId v) const;
    std::size_t degree(VertexId v) const;

    bool adjacent(VertexId a, VertexId b) const;
    std::optional<EdgeId> edge_between(VertexId a, VertexId b) const;
    EdgeId require_edge(VertexId a, VertexId b) const;

private:
    friend class GraphBuilder;

    std::vector<std::string> labels_;
    std::unordered_map<std::string, VertexId> index_;
    std::vector<double> vertex_weights_;
    std::vector<Edge> edges_;
    // CSR adjacency over the underlying undirected graph.
    std::vector<std::uint32_t> adj_offsets_;
    std::vector<VertexId> adj_;
    std::vector<EdgeId> adj_edge_;
    bool directed_ = false;
};

// Accumulates labeled rows, then builds the canonical Graph. Rejects
// self-loops, duplicate edges (including anti-parallel duplicates: the
// underlying undirected graph must be simple) and nonpositive weights as
// soon as they are seen, so file parsers can attach line numbers.
class GraphBuilder {
public:
    GraphBuilder& add_vertex(std::string_view label);
    GraphBuilder& add_edge(std::string_view u, std::string_view v,
                           double weight = 1.0, bool oriented = false);
    GraphBuilder& set_vertex_weight(std::string_view label, double weight);

    Graph build();

private:
    struct Row {
        std::string u, v;
        double weight;
        bool oriented;
    };
    std::vector<std::string> vertices_;
    std::unordered_map<std::string, std::size_t> seen_vertices_;
    std::vector<Row> rows_;
    std::unordered_map<std::string, double> vertex_weights_;
    std::unordered_map<std::string, bool> seen_pairs_;

    std::size_t intern(std::string_view label);
};

} // namespace curvnet
