#pragma once

#include <optional>
#include <vector>

#include "curvnet/graph.hpp"

namespace curvnet {

struct PathMetricResult {
    double length = 0.0;               // sum of edge weights along path
    std::vector<VertexId> path;        // simple, path.front()==u, path.back()==v
};

struct ShortestPathOptions {
    // When true, oriented edges may only be traversed source -> target;
    // unoriented edges stay two-way. Default searches the underlying
    // undirected graph.
    bool respect_direction = false;
};

// Minimum-weight simple path between two distinct vertices. Among equal
// weights the lexicographically smallest vertex sequence wins, so results
// are reproducible across runs. Disconnected pairs yield nullopt.
std::optional<PathMetricResult> shortest_path(const Graph& g, VertexId u,
                                              VertexId v,
                                              const ShortestPathOptions& opts = {});

// Distance field from a single source (infinity = unreachable).
// reverse_arcs flips oriented edges, for distances *to* the source.
std::vector<double> shortest_path_distances(const Graph& g, VertexId source,
                                            bool respect_direction = false,
                                            bool reverse_arcs = false);

// Hop-count BFS distances (kNoHop = unreachable or beyond max_depth), used
// for search pruning.
inline constexpr std::uint32_t kNoHop = std::numeric_limits<std::uint32_t>::max();
std::vector<std::uint32_t> hop_distances(const Graph& g, VertexId source,
                                         std::optional<EdgeId> skip_edge = {},
                                         std::uint32_t max_depth = kNoHop);

} // namespace curvnet
