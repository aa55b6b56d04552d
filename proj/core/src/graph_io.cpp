#include "curvnet/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace curvnet {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_row(std::string_view line) {
    std::vector<std::string_view> cells;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= line.size(); ++i) {
        if (i == line.size() || line[i] == ',') {
            cells.push_back(trim(line.substr(start, i - start)));
            start = i + 1;
        }
    }
    return cells;
}

double parse_double(std::string_view cell, std::size_t line_no,
                    const char* what) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
    if (ec != std::errc{} || ptr != cell.data() + cell.size())
        throw InputError("line " + std::to_string(line_no) + ": malformed " +
                         what + " '" + std::string(cell) + "'");
    return value;
}

bool parse_flag(std::string_view cell, std::size_t line_no) {
    if (cell == "1" || cell == "true") return true;
    if (cell == "0" || cell == "false" || cell.empty()) return false;
    throw InputError("line " + std::to_string(line_no) +
                     ": malformed directed flag '" + std::string(cell) + "'");
}

// Format a double with shortest round-trip representation.
std::string fmt_double(double x) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, ptr);
}

void check_label(std::string_view label, std::size_t line_no) {
    if (label.empty())
        throw InputError("line " + std::to_string(line_no) + ": empty vertex id");
    if (label.find_first_of(",\"\n") != std::string_view::npos)
        throw InputError("line " + std::to_string(line_no) + ": vertex id '" +
                         std::string(label) + "' contains a CSV delimiter");
}

struct Header {
    int source = 0, target = 1, weight = -1, directed = -1;
    std::size_t columns = 0; // 0: headerless, infer per row
};

// A first line whose cells are all drawn from the known column names is a
// header; anything else is data and the columns are inferred per row as
// source,target[,weight[,directed]].
std::optional<Header> try_parse_header(std::string_view line) {
    Header h;
    h.source = h.target = -1;
    auto cells = split_row(line);
    h.columns = cells.size();
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (cells[i] == "source") h.source = static_cast<int>(i);
        else if (cells[i] == "target") h.target = static_cast<int>(i);
        else if (cells[i] == "weight") h.weight = static_cast<int>(i);
        else if (cells[i] == "directed") h.directed = static_cast<int>(i);
        else return std::nullopt;
    }
    if (h.source < 0 || h.target < 0)
        throw InputError("line 1: edge list header must name source and target");
    return h;
}

void parse_edges_into(GraphBuilder& b, std::string_view text) {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    bool saw_first = false;
    Header header;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(
            pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;
        if (trim(line).empty()) continue;
        if (!saw_first) {
            saw_first = true;
            if (auto h = try_parse_header(line)) {
                header = *h;
                continue;
            }
        }
        auto cells = split_row(line);
        int wi = header.weight, di = header.directed;
        if (header.columns != 0) {
            if (cells.size() != header.columns)
                throw InputError("line " + std::to_string(line_no) + ": expected " +
                                 std::to_string(header.columns) + " columns, got " +
                                 std::to_string(cells.size()));
        } else {
            if (cells.size() < 2 || cells.size() > 4)
                throw InputError("line " + std::to_string(line_no) +
                                 ": expected 2 to 4 columns, got " +
                                 std::to_string(cells.size()));
            wi = cells.size() >= 3 ? 2 : -1;
            di = cells.size() == 4 ? 3 : -1;
        }
        std::string_view u = cells[header.source];
        std::string_view v = cells[header.target];
        check_label(u, line_no);
        check_label(v, line_no);
        double w = 1.0;
        if (wi >= 0 && !cells[wi].empty())
            w = parse_double(cells[wi], line_no, "weight");
        bool oriented = false;
        if (di >= 0) oriented = parse_flag(cells[di], line_no);
        try {
            b.add_edge(u, v, w, oriented);
        } catch (const InputError& err) {
            throw InputError("line " + std::to_string(line_no) + ": " + err.what());
        }
    }
}

void parse_vertex_weights_into(GraphBuilder& b, std::string_view text) {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(
            pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;
        if (trim(line).empty()) continue;
        auto cells = split_row(line);
        if (line_no == 1) {
            if (cells.size() != 2 || cells[0] != "vertex" || cells[1] != "weight")
                throw InputError("line 1: vertex weight header must be vertex,weight");
            continue;
        }
        if (cells.size() != 2)
            throw InputError("line " + std::to_string(line_no) +
                             ": expected 2 columns");
        check_label(cells[0], line_no);
        double w = parse_double(cells[1], line_no, "weight");
        try {
            b.set_vertex_weight(cells[0], w);
        } catch (const InputError& err) {
            throw InputError("line " + std::to_string(line_no) + ": " + err.what());
        }
    }
}

std::string slurp(std::istream& in) {
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

} // namespace

Graph parse_edge_list(std::string_view text) {
    GraphBuilder b;
    parse_edges_into(b, text);
    return b.build();
}

Graph parse_edge_list(std::istream& in) { return parse_edge_list(slurp(in)); }

Graph parse_edge_list(std::string_view edge_csv,
                      std::string_view vertex_weight_csv) {
    GraphBuilder b;
    parse_edges_into(b, edge_csv);
    parse_vertex_weights_into(b, vertex_weight_csv);
    return b.build();
}

Graph parse_json_graph(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("invalid graph JSON: ") + e.what());
    }
    try {
        GraphBuilder b;
        for (const auto& v : doc.value("vertices", nlohmann::json::array()))
            b.add_vertex(v.get<std::string>());
        for (const auto& e : doc.at("edges")) {
            b.add_edge(e.at("u").get<std::string>(), e.at("v").get<std::string>(),
                       e.value("w", 1.0), e.value("dir", false));
        }
        if (doc.contains("vertex_weights"))
            for (const auto& [label, w] : doc["vertex_weights"].items())
                b.set_vertex_weight(label, w.get<double>());
        return b.build();
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("invalid graph JSON: ") + e.what());
    }
}

Graph parse_json_graph(std::istream& in) { return parse_json_graph(slurp(in)); }

std::string to_csv(const Graph& g) {
    std::string out = "source,target";
    bool weights = g.has_nonunit_edge_weights();
    if (weights) out += ",weight";
    if (g.directed()) out += ",directed";
    out += '\n';
    for (const Edge& e : g.edges()) {
        // Oriented edges are emitted source->target so the file preserves
        // direction; unoriented ones in canonical order.
        VertexId a = e.oriented() ? e.source() : e.u;
        VertexId b = e.oriented() ? e.target() : e.v;
        out += g.label(a);
        out += ',';
        out += g.label(b);
        if (weights) {
            out += ',';
            out += fmt_double(e.weight);
        }
        if (g.directed()) out += e.oriented() ? ",1" : ",0";
        out += '\n';
    }
    return out;
}

std::string vertex_weights_to_csv(const Graph& g) {
    std::string out = "vertex,weight\n";
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        out += g.label(v);
        out += ',';
        out += fmt_double(g.vertex_weight(v));
        out += '\n';
    }
    return out;
}

std::string to_json(const Graph& g) {
    nlohmann::json doc;
    auto vertices = nlohmann::json::array();
    for (VertexId v = 0; v < g.vertex_count(); ++v) vertices.push_back(g.label(v));
    doc["vertices"] = std::move(vertices);
    auto edges = nlohmann::json::array();
    for (const Edge& e : g.edges()) {
        nlohmann::json je;
        VertexId a = e.oriented() ? e.source() : e.u;
        VertexId b = e.oriented() ? e.target() : e.v;
        je["u"] = g.label(a);
        je["v"] = g.label(b);
        je["w"] = e.weight;
        if (g.directed()) je["dir"] = e.oriented();
        edges.push_back(std::move(je));
    }
    doc["edges"] = std::move(edges);
    if (g.has_nonunit_vertex_weights()) {
        nlohmann::json vw;
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            vw[g.label(v)] = g.vertex_weight(v);
        doc["vertex_weights"] = std::move(vw);
    }
    return doc.dump(2) + "\n";
}

Graph load_graph_file(const std::string& path,
                      const std::string& vertex_weight_path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open graph file '" + path + "'");
    std::string text = slurp(in);
    bool json = path.size() >= 5 && path.substr(path.size() - 5) == ".json";
    if (json) {
        if (!vertex_weight_path.empty())
            throw InputError("vertex weight tables apply to CSV graphs only; "
                             "JSON graphs carry vertex_weights inline");
        return parse_json_graph(text);
    }
    if (vertex_weight_path.empty()) return parse_edge_list(text);
    std::ifstream vw(vertex_weight_path);
    if (!vw)
        throw InputError("cannot open vertex weight file '" +
                         vertex_weight_path + "'");
    return parse_edge_list(text, slurp(vw));
}

} // namespace curvnet
