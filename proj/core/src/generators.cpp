#include "curvnet/generators.hpp"

#include <array>
#include <cstdio>

namespace curvnet {

const char* to_string(LatticeKind kind) {
    switch (kind) {
        case LatticeKind::triangular: return "triangular";
        case LatticeKind::square: return "square";
        case LatticeKind::hexagonal: return "hexagonal";
        case LatticeKind::cubic: return "cubic";
    }
    return "?";
}

LatticeKind lattice_kind_from_string(std::string_view name) {
    if (name == "triangular") return LatticeKind::triangular;
    if (name == "square") return LatticeKind::square;
    if (name == "hexagonal") return LatticeKind::hexagonal;
    if (name == "cubic") return LatticeKind::cubic;
    throw InputError("unknown lattice kind '" + std::string(name) + "'");
}

unsigned lattice_degree(LatticeKind kind) {
    switch (kind) {
        case LatticeKind::triangular: return 6;
        case LatticeKind::square: return 4;
        case LatticeKind::hexagonal: return 3;
        case LatticeKind::cubic: return 6;
    }
    return 0;
}

unsigned lattice_face_length(LatticeKind kind) {
    switch (kind) {
        case LatticeKind::triangular: return 3;
        case LatticeKind::square: return 4;
        case LatticeKind::hexagonal: return 6;
        case LatticeKind::cubic: return 4;
    }
    return 0;
}

namespace {

std::string cell_label(std::uint64_t index) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "n%06llu",
                  static_cast<unsigned long long>(index));
    return buf;
}

void validate_spec(const LatticeSpec& spec) {
    const std::size_t want = spec.kind == LatticeKind::cubic ? 3 : 2;
    if (spec.dims.size() != want)
        throw InputError(std::string("lattice '") + to_string(spec.kind) +
                         "' needs " + std::to_string(want) + " dimensions");
    for (std::uint32_t d : spec.dims)
        if (d == 0) throw InputError("lattice dimensions must be positive");
    if (spec.periodic) {
        for (std::uint32_t d : spec.dims)
            if (d < spec.safe_cycle_len + 1)
                throw InputError(
                    "periodic dimension " + std::to_string(d) +
                    " is too small: cycles up to length " +
                    std::to_string(spec.safe_cycle_len) +
                    " could wrap; need every dimension >= " +
                    std::to_string(spec.safe_cycle_len + 1));
    }
}

// 2D planar lattices share an offset scheme: vertex (i, j) connects to
// (i, j) + each offset, with wrap-around on periodic patches.
void emit_offset_lattice(GraphBuilder& b, const LatticeSpec& spec,
                         std::span<const std::array<int, 2>> offsets) {
    const std::uint32_t m = spec.dims[0], n = spec.dims[1];
    auto id = [&](std::uint32_t i, std::uint32_t j) {
        return cell_label(static_cast<std::uint64_t>(i) * n + j);
    };
    for (std::uint32_t i = 0; i < m; ++i)
        for (std::uint32_t j = 0; j < n; ++j) {
            b.add_vertex(id(i, j));
            for (const auto& [di, dj] : offsets) {
                std::int64_t i2 = static_cast<std::int64_t>(i) + di;
                std::int64_t j2 = static_cast<std::int64_t>(j) + dj;
                if (spec.periodic) {
                    i2 = (i2 % m + m) % m;
                    j2 = (j2 % n + n) % n;
                } else if (i2 < 0 || i2 >= m || j2 < 0 || j2 >= n) {
                    continue;
                }
                b.add_edge(id(i, j),
                           id(static_cast<std::uint32_t>(i2),
                              static_cast<std::uint32_t>(j2)));
            }
        }
}

void emit_cubic(GraphBuilder& b, const LatticeSpec& spec) {
    const std::uint32_t m = spec.dims[0], n = spec.dims[1], o = spec.dims[2];
    auto id = [&](std::uint32_t i, std::uint32_t j, std::uint32_t k) {
        return cell_label((static_cast<std::uint64_t>(i) * n + j) * o + k);
    };
    static constexpr std::array<std::array<int, 3>, 3> offsets{
        {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
    for (std::uint32_t i = 0; i < m; ++i)
        for (std::uint32_t j = 0; j < n; ++j)
            for (std::uint32_t k = 0; k < o; ++k) {
                b.add_vertex(id(i, j, k));
                for (const auto& [di, dj, dk] : offsets) {
                    std::int64_t i2 = i + di, j2 = j + dj, k2 = k + dk;
                    if (spec.periodic) {
                        i2 %= m;
                        j2 %= n;
                        k2 %= o;
                    } else if (i2 >= m || j2 >= n || k2 >= o) {
                        continue;
                    }
                    b.add_edge(id(i, j, k),
                               id(static_cast<std::uint32_t>(i2),
                                  static_cast<std::uint32_t>(j2),
                                  static_cast<std::uint32_t>(k2)));
                }
            }
}

// Honeycomb as two sublattices per cell: A(i,j) bonds to B(i,j),
// B(i-1,j) and B(i,j-1). Faces are hexagons; every vertex has degree 3 on
// the torus.
void emit_hexagonal(GraphBuilder& b, const LatticeSpec& spec) {
    const std::uint32_t m = spec.dims[0], n = spec.dims[1];
    auto id = [&](std::uint32_t i, std::uint32_t j, unsigned s) {
        return cell_label((static_cast<std::uint64_t>(i) * n + j) * 2 + s);
    };
    static constexpr std::array<std::array<int, 2>, 3> to_b{
        {{0, 0}, {-1, 0}, {0, -1}}};
    for (std::uint32_t i = 0; i < m; ++i)
        for (std::uint32_t j = 0; j < n; ++j) {
            b.add_vertex(id(i, j, 0));
            b.add_vertex(id(i, j, 1));
            for (const auto& [di, dj] : to_b) {
                std::int64_t i2 = static_cast<std::int64_t>(i) + di;
                std::int64_t j2 = static_cast<std::int64_t>(j) + dj;
                if (spec.periodic) {
                    i2 = (i2 % m + m) % m;
                    j2 = (j2 % n + n) % n;
                } else if (i2 < 0 || j2 < 0) {
                    continue;
                }
                b.add_edge(id(i, j, 0),
                           id(static_cast<std::uint32_t>(i2),
                              static_cast<std::uint32_t>(j2), 1));
            }
        }
}

} // namespace

Graph generate_lattice(const LatticeSpec& spec) {
    validate_spec(spec);
    GraphBuilder b;
    switch (spec.kind) {
        case LatticeKind::triangular: {
            static constexpr std::array<std::array<int, 2>, 3> offsets{
                {{1, 0}, {0, 1}, {1, 1}}};
            emit_offset_lattice(b, spec, offsets);
            break;
        }
        case LatticeKind::square: {
            static constexpr std::array<std::array<int, 2>, 2> offsets{
                {{1, 0}, {0, 1}}};
            emit_offset_lattice(b, spec, offsets);
            break;
        }
        case LatticeKind::hexagonal:
            emit_hexagonal(b, spec);
            break;
        case LatticeKind::cubic:
            emit_cubic(b, spec);
            break;
    }
    return b.build();
}

std::vector<EdgeId> lattice_boundary_edges(const Graph& g,
                                           const LatticeSpec& spec) {
    const unsigned full = lattice_degree(spec.kind);
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& edge = g.edge(e);
        if (g.degree(edge.u) < full || g.degree(edge.v) < full)
            out.push_back(e);
    }
    return out;
}

Graph figure3_graph(char which) {
    GraphBuilder b;
    auto coherent_triangle = [&](std::string_view w) {
        b.add_edge("v", w, 1.0, true);
        b.add_edge(w, "u", 1.0, true);
    };
    switch (which) {
        case 'a':
            b.add_edge("u", "v", 1.0, true);
            coherent_triangle("w1");
            coherent_triangle("w2");
            coherent_triangle("w3");
            break;
        case 'b':
            b.add_edge("u", "v", 1.0, true);
            coherent_triangle("w1");
            break;
        case 'c':
            b.add_edge("u", "v", 1.0, true);
            coherent_triangle("w1");
            coherent_triangle("w2");
            // the coherent quadrilateral u -> v -> x -> y -> u
            b.add_edge("v", "x", 1.0, true);
            b.add_edge("x", "y", 1.0, true);
            b.add_edge("y", "u", 1.0, true);
            break;
        default:
            throw InputError("figure3 graph id must be a, b or c");
    }
    return b.build();
}

} // namespace curvnet
