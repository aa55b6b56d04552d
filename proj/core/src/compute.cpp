#include "curvnet/compute.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <functional>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace curvnet {

const char* to_string(Measure m) {
    switch (m) {
        case Measure::menger_ricci: return "menger-ricci";
        case Measure::menger_scalar: return "menger-scalar";
        case Measure::haantjes_ricci: return "haantjes-ricci";
        case Measure::haantjes_scalar: return "haantjes-scalar";
        case Measure::haantjes_sectional: return "haantjes-sectional";
        case Measure::directional_ricci: return "directional-ricci";
        case Measure::excess: return "excess";
        case Measure::aspect_ratio: return "aspect-ratio";
        case Measure::forman_reduced: return "forman-reduced";
        case Measure::forman_augmented: return "forman-augmented";
        case Measure::ollivier: return "ollivier";
    }
    return "?";
}

Measure measure_from_string(std::string_view name) {
    for (Measure m :
         {Measure::menger_ricci, Measure::menger_scalar, Measure::haantjes_ricci,
          Measure::haantjes_scalar, Measure::haantjes_sectional,
          Measure::directional_ricci, Measure::excess, Measure::aspect_ratio,
          Measure::forman_reduced, Measure::forman_augmented, Measure::ollivier})
        if (name == to_string(m)) return m;
    throw InputError("unknown measure '" + std::string(name) + "'");
}

namespace {

std::string fmt_value(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

bool uses_cells(Measure m) {
    return m == Measure::haantjes_ricci || m == Measure::haantjes_scalar ||
           m == Measure::haantjes_sectional || m == Measure::forman_augmented;
}

} // namespace

std::string ComputeConfig::echo() const {
    std::ostringstream out;
    out << "measure=" << to_string(measure);
    out << " geometry=" << to_string(geometry.kind);
    out << " keep_classical_constants="
        << (geometry.keep_classical_constants ? "true" : "false");
    out << " admission=" << to_string(admission.mode);
    out << " max_cycle_length=" << admission.max_length;
    out << " face_scheme=" << to_string(scheme.mode);
    out << " sign_convention="
        << (sign_convention == SignConvention::standard ? "standard" : "swapped");
    out << " weighted_literal_sign=" << (weighted_literal_sign ? "true" : "false");
    out << " menger_scalar_mode="
        << (menger_scalar_mode == ScalarAggregation::triangle_sum ? "triangle-sum"
                                                                  : "edge-sum");
    out << " idleness=" << fmt_value(idleness);
    if (measure == Measure::directional_ricci) {
        out << " from=" << from << " to=" << to;
        out << " bound=" << fmt_value(bound.limit);
        out << " bound_kind=" << (bound.weight_bound ? "weight" : "hops");
    }
    out << " components=" << (include_components ? "true" : "false");
    return out.str();
}

void parallel_for_indices(std::size_t count, unsigned workers,
                          const std::function<void(std::size_t)>& fn) {
    if (workers == 0) workers = std::thread::hardware_concurrency();
    if (workers <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto body = [&] {
        constexpr std::size_t chunk = 8;
        while (true) {
            std::size_t begin = next.fetch_add(chunk);
            if (begin >= count) return;
            std::size_t end = std::min(begin + chunk, count);
            try {
                for (std::size_t i = begin; i < end; ++i) fn(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(body);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

namespace {

std::vector<std::array<VertexId, 3>> all_triangles(const Graph& g) {
    std::vector<std::array<VertexId, 3>> out;
    for (EdgeId eid = 0; eid < g.edge_count(); ++eid) {
        const Edge& e = g.edge(eid);
        for (VertexId w : g.neighbors(e.u)) {
            if (w <= e.v) continue;
            if (g.adjacent(e.v, w)) out.push_back({e.u, e.v, w});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

CurvatureField compute_field(const Graph& g, const ComputeConfig& config,
                             unsigned workers) {
    if (uses_cells(config.measure)) config.admission.validate();
    CurvatureField field;
    HaantjesOptions hopts{config.admission, config.scheme, config.sign_convention,
                          config.weighted_literal_sign};

    switch (config.measure) {
        case Measure::menger_ricci:
        case Measure::haantjes_ricci:
        case Measure::forman_reduced:
        case Measure::forman_augmented:
        case Measure::ollivier: {
            field.subject = SubjectKind::edge;
            field.rows.resize(g.edge_count());
            parallel_for_indices(g.edge_count(), workers, [&](std::size_t i) {
                EdgeId e = static_cast<EdgeId>(i);
                FieldRow& row = field.rows[i];
                row.subject = {g.edge(e).u, g.edge(e).v};
                switch (config.measure) {
                    case Measure::menger_ricci:
                        row.value = menger_ricci_edge(g, e, config.geometry,
                                                      config.sign_convention);
                        break;
                    case Measure::haantjes_ricci: {
                        SignedCurvature s = haantjes_ricci_edge(g, e, hopts);
                        row.value = s.value;
                        if (config.include_components)
                            row.components = std::move(s.components);
                        break;
                    }
                    case Measure::forman_reduced:
                        row.value = forman_reduced(g, e);
                        break;
                    case Measure::forman_augmented:
                        row.value = forman_augmented(g, e, config.admission);
                        break;
                    default:
                        row.value = ollivier_ricci_edge(g, e, config.idleness);
                }
            });
            break;
        }
        case Measure::menger_scalar:
        case Measure::haantjes_scalar: {
            field.subject = SubjectKind::vertex;
            field.rows.resize(g.vertex_count());
            parallel_for_indices(g.vertex_count(), workers, [&](std::size_t i) {
                VertexId v = static_cast<VertexId>(i);
                FieldRow& row = field.rows[i];
                row.subject = {v};
                row.value =
                    config.measure == Measure::menger_scalar
                        ? menger_scalar_vertex(g, v, config.geometry,
                                               config.menger_scalar_mode,
                                               config.sign_convention)
                        : haantjes_scalar_vertex(g, v, hopts);
            });
            break;
        }
        case Measure::haantjes_sectional: {
            field.subject = SubjectKind::cell;
            // Enumerate sequentially (row counts vary per edge), evaluate
            // trivially afterwards; enumeration dominates anyway.
            for (EdgeId e = 0; e < g.edge_count(); ++e)
                for (const Cycle& c : two_cells_at_edge(g, e, config.admission)) {
                    FieldRow row;
                    row.subject = c.vertices;
                    row.value = sectional_cell(g, c, hopts);
                    field.rows.push_back(std::move(row));
                }
            break;
        }
        case Measure::directional_ricci: {
            field.subject = SubjectKind::pair;
            VertexId u = g.require_vertex(config.from);
            VertexId v = g.require_vertex(config.to);
            SignedCurvature s =
                directional_ricci(g, u, v, config.bound, config.sign_convention);
            FieldRow row;
            row.subject = {u, v};
            row.value = s.value;
            if (config.include_components) row.components = std::move(s.components);
            field.rows.push_back(std::move(row));
            break;
        }
        case Measure::excess:
        case Measure::aspect_ratio: {
            field.subject = SubjectKind::triangle;
            auto triangles = all_triangles(g);
            field.rows.resize(triangles.size());
            parallel_for_indices(triangles.size(), workers, [&](std::size_t i) {
                const auto& t = triangles[i];
                double a = g.edge_weight(g.require_edge(t[0], t[1]));
                double b = g.edge_weight(g.require_edge(t[1], t[2]));
                double c = g.edge_weight(g.require_edge(t[2], t[0]));
                field.rows[i].subject = {t[0], t[1], t[2]};
                field.rows[i].value = config.measure == Measure::excess
                                          ? excess(a, b, c)
                                          : aspect_ratio(a, b, c);
            });
            break;
        }
    }
    return field;
}

namespace {

const char* subject_header(SubjectKind kind) {
    switch (kind) {
        case SubjectKind::edge: return "source,target,value";
        case SubjectKind::vertex: return "vertex,value";
        case SubjectKind::triangle: return "u,v,w,value";
        case SubjectKind::pair: return "from,to,value";
        case SubjectKind::cell: return "source,target,cell,value";
    }
    return "value";
}

std::string cell_string(const Graph& g, const std::vector<VertexId>& vs) {
    std::string out;
    for (VertexId v : vs) {
        if (!out.empty()) out += '-';
        out += g.label(v);
    }
    return out;
}

std::string components_string(const Graph& g,
                              const std::vector<CellContribution>& parts) {
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty()) out += ';';
        out += cell_string(g, p.cell);
        out += "|kappa_h=" + fmt_value(p.kappa_h);
        out += "|sign=" + std::to_string(p.sign);
        out += "|K=" + fmt_value(p.contribution);
    }
    return out;
}

} // namespace

void render_csv(const CurvatureField& field, const Graph& g,
                const ComputeConfig& config, std::ostream& out) {
    out << "# curvnet compute\n# " << config.echo() << "\n";
    out << subject_header(field.subject);
    if (config.include_components) out << ",components";
    out << "\n";
    for (const FieldRow& row : field.rows) {
        switch (field.subject) {
            case SubjectKind::edge:
            case SubjectKind::pair:
                out << g.label(row.subject[0]) << ',' << g.label(row.subject[1]);
                break;
            case SubjectKind::vertex:
                out << g.label(row.subject[0]);
                break;
            case SubjectKind::triangle:
                out << g.label(row.subject[0]) << ',' << g.label(row.subject[1])
                    << ',' << g.label(row.subject[2]);
                break;
            case SubjectKind::cell:
                out << g.label(row.subject.front()) << ','
                    << g.label(row.subject.back()) << ','
                    << cell_string(g, row.subject);
                break;
        }
        out << ',' << fmt_value(row.value);
        if (config.include_components)
            out << ',' << components_string(g, row.components);
        out << '\n';
    }
}

void render_json(const CurvatureField& field, const Graph& g,
                 const ComputeConfig& config, std::ostream& out) {
    nlohmann::json doc;
    doc["config"] = config.echo();
    auto rows = nlohmann::json::array();
    for (const FieldRow& row : field.rows) {
        nlohmann::json jr;
        auto subject = nlohmann::json::array();
        for (VertexId v : row.subject) subject.push_back(g.label(v));
        jr["subject"] = std::move(subject);
        jr["value"] = row.value;
        if (!row.components.empty()) {
            auto parts = nlohmann::json::array();
            for (const auto& p : row.components) {
                nlohmann::json jp;
                jp["cell"] = cell_string(g, p.cell);
                jp["kappa_h"] = p.kappa_h;
                jp["sign"] = p.sign;
                jp["K"] = p.contribution;
                parts.push_back(std::move(jp));
            }
            jr["components"] = std::move(parts);
        }
        rows.push_back(std::move(jr));
    }
    doc["rows"] = std::move(rows);
    out << doc.dump(2) << "\n";
}

} // namespace curvnet
