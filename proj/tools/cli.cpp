#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "curvnet/compute.hpp"
#include "curvnet/graph_io.hpp"
#include "curvnet/table1.hpp"

namespace curvnet::cli {

namespace {

// Writes to the chosen file, or to the session stream when no path given.
class OutputTarget {
public:
    OutputTarget(const std::string& path, std::ostream& fallback)
        : fallback_(fallback) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw InputError("cannot open output file '" + path + "'");
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : fallback_; }

private:
    std::ofstream file_;
    std::ostream& fallback_;
};

std::vector<std::uint32_t> parse_dims(const std::string& text) {
    std::vector<std::uint32_t> dims;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, 'x')) {
        try {
            dims.push_back(static_cast<std::uint32_t>(std::stoul(part)));
        } catch (const std::exception&) {
            throw InputError("malformed dimension spec '" + text + "'");
        }
    }
    return dims;
}

struct GenerateArgs {
    std::string lattice;
    std::string dims = "8x8";
    bool open = false;
    unsigned safe_cycle_len = 0; // 0: face length of the lattice
    std::string figure3;
    std::string output;
};

int run_generate(const GenerateArgs& a, std::ostream& out) {
    if (a.lattice.empty() == a.figure3.empty())
        throw InputError("generate needs exactly one of --lattice or --figure3");
    OutputTarget target(a.output, out);
    if (!a.figure3.empty()) {
        if (a.figure3.size() != 1)
            throw InputError("figure3 graph id must be a, b or c");
        target.stream() << to_json(figure3_graph(a.figure3[0]));
        return 0;
    }
    LatticeSpec spec;
    spec.kind = lattice_kind_from_string(a.lattice);
    spec.dims = parse_dims(a.dims);
    spec.periodic = !a.open;
    spec.safe_cycle_len =
        a.safe_cycle_len ? a.safe_cycle_len : lattice_face_length(spec.kind);
    Graph g = generate_lattice(spec);
    if (!a.open) {
        target.stream() << to_json(g);
        return 0;
    }
    // Open patches carry their boundary edges so downstream tooling can
    // drop rows whose values are boundary artifacts.
    nlohmann::json doc = nlohmann::json::parse(to_json(g));
    auto boundary = nlohmann::json::array();
    for (EdgeId e : lattice_boundary_edges(g, spec)) {
        const Edge& edge = g.edge(e);
        boundary.push_back({g.label(edge.u), g.label(edge.v)});
    }
    doc["boundary_edges"] = std::move(boundary);
    target.stream() << doc.dump(2) << "\n";
    return 0;
}

struct ComputeArgs {
    std::string graph;
    std::string vertex_weights;
    std::string measure;
    std::string geometry = "euclidean";
    bool discard_constants = false;
    std::string admission = "chordless";
    unsigned max_cycle_length = 5;
    std::string face_scheme = "unit";
    std::string sign_convention = "standard";
    bool weighted_literal_sign = false;
    std::string menger_scalar_mode = "triangle-sum";
    double idleness = 0.0;
    std::string from, to;
    double bound = 0.0;
    std::string bound_kind = "hops";
    bool components = false;
    std::string format = "csv";
    unsigned workers = 0;
    std::string output;
};

CellAdmissionMode admission_from_string(const std::string& name) {
    if (name == "chordless") return CellAdmissionMode::chordless;
    if (name == "all-simple") return CellAdmissionMode::all_simple;
    if (name == "triangles-only") return CellAdmissionMode::triangles_only;
    throw InputError("unknown admission mode '" + name + "'");
}

FaceWeightMode face_scheme_from_string(const std::string& name) {
    if (name == "unit") return FaceWeightMode::unit;
    if (name == "perimeter-penalty") return FaceWeightMode::perimeter_penalty;
    throw InputError("unknown face weight scheme '" + name + "'");
}

// Flags that only mean something for some measures are rejected when set
// for others, so a config echo never quietly misrepresents a run.
void validate_flag_usage(const CLI::App& cmd, Measure m) {
    const bool menger = m == Measure::menger_ricci || m == Measure::menger_scalar;
    const bool haantjes = m == Measure::haantjes_ricci ||
                          m == Measure::haantjes_scalar ||
                          m == Measure::haantjes_sectional ||
                          m == Measure::directional_ricci;
    const bool cells = m == Measure::haantjes_ricci ||
                       m == Measure::haantjes_scalar ||
                       m == Measure::haantjes_sectional ||
                       m == Measure::forman_augmented;
    auto used = [&](const std::string& flag) {
        return cmd.count(flag) > 0;
    };
    auto reject = [&](const std::string& flag, const std::string& why) {
        if (used(flag))
            throw InputError(flag + " is only meaningful for " + why);
    };
    if (!menger) {
        reject("--geometry", "menger measures");
        reject("--discard-constants", "menger measures");
    }
    if (m != Measure::menger_scalar)
        reject("--menger-scalar-mode", "menger-scalar");
    if (!cells) {
        reject("--admission", "cell-based measures");
        reject("--max-cycle-length", "cell-based measures");
    }
    if (!haantjes || m == Measure::directional_ricci) {
        reject("--face-scheme", "haantjes cell measures");
        reject("--weighted-literal-sign", "haantjes cell measures");
    }
    if (m != Measure::ollivier) reject("--idleness", "ollivier");
    if (m != Measure::directional_ricci) {
        reject("--from", "directional-ricci");
        reject("--to", "directional-ricci");
        reject("--bound", "directional-ricci");
        reject("--bound-kind", "directional-ricci");
    } else {
        if (!used("--from") || !used("--to") || !used("--bound"))
            throw InputError("directional-ricci needs --from, --to and --bound");
    }
}

int run_compute(const CLI::App& cmd, const ComputeArgs& a, std::ostream& out) {
    ComputeConfig config;
    config.measure = measure_from_string(a.measure);
    validate_flag_usage(cmd, config.measure);
    config.geometry.kind = geometry_kind_from_string(a.geometry);
    config.geometry.keep_classical_constants = !a.discard_constants;
    config.admission.mode = admission_from_string(a.admission);
    config.admission.max_length = a.max_cycle_length;
    config.scheme.mode = face_scheme_from_string(a.face_scheme);
    if (a.sign_convention == "standard")
        config.sign_convention = SignConvention::standard;
    else if (a.sign_convention == "swapped")
        config.sign_convention = SignConvention::swapped;
    else
        throw InputError("unknown sign convention '" + a.sign_convention + "'");
    config.weighted_literal_sign = a.weighted_literal_sign;
    if (a.menger_scalar_mode == "triangle-sum")
        config.menger_scalar_mode = ScalarAggregation::triangle_sum;
    else if (a.menger_scalar_mode == "edge-sum")
        config.menger_scalar_mode = ScalarAggregation::edge_sum;
    else
        throw InputError("unknown menger scalar mode '" + a.menger_scalar_mode + "'");
    config.idleness = a.idleness;
    config.from = a.from;
    config.to = a.to;
    config.bound.limit = a.bound;
    if (a.bound_kind == "hops")
        config.bound.weight_bound = false;
    else if (a.bound_kind == "weight")
        config.bound.weight_bound = true;
    else
        throw InputError("unknown bound kind '" + a.bound_kind + "'");
    config.include_components = a.components;

    Graph g = load_graph_file(a.graph, a.vertex_weights);
    CurvatureField field = compute_field(g, config, a.workers);

    OutputTarget target(a.output, out);
    if (a.format == "csv")
        render_csv(field, g, config, target.stream());
    else if (a.format == "json")
        render_json(field, g, config, target.stream());
    else
        throw InputError("unknown output format '" + a.format + "'");
    return 0;
}

struct StatsArgs {
    std::string graph;
    std::string vertex_weights;
    std::string output;
};

int run_stats(const StatsArgs& a, std::ostream& out) {
    Graph g = load_graph_file(a.graph, a.vertex_weights);
    GlobalTriangleStats stats = global_triangle_stats(g);
    OutputTarget target(a.output, out);
    std::ostream& os = target.stream();
    os << "# curvnet stats\n";
    os << "triangles," << stats.triangle_count << "\n";
    char buf[40];
    if (!stats.max_excess) {
        os << "max_excess,,\n";
        os << "min_aspect_ratio,,\n";
        return 0;
    }
    auto witness = [&](const TriangleWitness& w) {
        std::snprintf(buf, sizeof buf, "%.12g", w.value);
        return std::string(buf) + "," + g.label(w.vertices[0]) + "-" +
               g.label(w.vertices[1]) + "-" + g.label(w.vertices[2]);
    };
    os << "max_excess," << witness(*stats.max_excess) << "\n";
    os << "min_aspect_ratio," << witness(*stats.min_aspect_ratio) << "\n";
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"curvnet: metric curvature analytics for networks"};
    app.require_subcommand(1);

    GenerateArgs gen;
    CLI::App* generate = app.add_subcommand(
        "generate", "emit a tessellation torus/patch or a worked example graph");
    generate->add_option("--lattice", gen.lattice,
                         "triangular|square|hexagonal|cubic");
    generate->add_option("--dims", gen.dims, "e.g. 8x8 or 6x6x6");
    generate->add_flag("--open", gen.open, "open boundary instead of a torus");
    generate->add_option("--safe-cycle-len", gen.safe_cycle_len,
                         "wrap-safety bound (default: face length)");
    generate->add_option("--figure3", gen.figure3, "worked example id: a|b|c");
    generate->add_option("-o,--output", gen.output, "output file (default stdout)");

    ComputeArgs comp;
    CLI::App* compute =
        app.add_subcommand("compute", "compute a curvature field over a graph");
    compute->add_option("--graph", comp.graph, "graph file (.json or CSV)")
        ->required();
    compute->add_option("--vertex-weights", comp.vertex_weights,
                        "vertex weight CSV (CSV graphs only)");
    compute->add_option("--measure", comp.measure, "curvature measure")->required();
    compute->add_option("--geometry", comp.geometry,
                        "euclidean|hyperbolic|spherical");
    compute->add_flag("--discard-constants", comp.discard_constants,
                      "drop the classical constant factors");
    compute->add_option("--admission", comp.admission,
                        "chordless|all-simple|triangles-only");
    compute->add_option("--max-cycle-length", comp.max_cycle_length,
                        "cell admission bound L >= 3");
    compute->add_option("--face-scheme", comp.face_scheme,
                        "unit|perimeter-penalty");
    compute->add_option("--sign-convention", comp.sign_convention,
                        "standard|swapped");
    compute->add_flag("--weighted-literal-sign", comp.weighted_literal_sign,
                      "negate weighted sectional curvature");
    compute->add_option("--menger-scalar-mode", comp.menger_scalar_mode,
                        "triangle-sum|edge-sum");
    compute->add_option("--idleness", comp.idleness, "Ollivier idleness in [0,1]");
    compute->add_option("--from", comp.from, "directional source vertex");
    compute->add_option("--to", comp.to, "directional target vertex");
    compute->add_option("--bound", comp.bound, "alternative path bound");
    compute->add_option("--bound-kind", comp.bound_kind, "hops|weight");
    compute->add_flag("--components", comp.components,
                      "include per-cell breakdowns");
    compute->add_option("--format", comp.format, "csv|json");
    compute->add_option("--workers", comp.workers,
                        "worker threads (0 = hardware)");
    compute->add_option("-o,--output", comp.output, "output file (default stdout)");

    double table1_idleness = 0.0;
    std::string table1_output;
    CLI::App* table1 = app.add_subcommand(
        "table1", "compare tessellation curvatures against published values");
    table1->add_option("--idleness", table1_idleness, "Ollivier idleness");
    table1->add_option("-o,--output", table1_output, "output file");

    StatsArgs st;
    CLI::App* stats = app.add_subcommand(
        "stats", "global triangle excess / aspect ratio extrema");
    stats->add_option("--graph", st.graph, "graph file")->required();
    stats->add_option("--vertex-weights", st.vertex_weights, "vertex weight CSV");
    stats->add_option("-o,--output", st.output, "output file");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help and friends
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (generate->parsed()) return run_generate(gen, out);
        if (compute->parsed()) return run_compute(*compute, comp, out);
        if (table1->parsed()) {
            OutputTarget target(table1_output, out);
            render_table1(compute_table1(table1_idleness), target.stream());
            return 0;
        }
        if (stats->parsed()) return run_stats(st, out);
        err << "error: no subcommand\n";
        return 1;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    }
}

} // namespace curvnet::cli
