// Acceptance suite: every release criterion as an executable check with a
// pinned tolerance, one PASS/FAIL line each. Exit code = number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <vector>

#include "curvnet/baselines.hpp"
#include "curvnet/compute.hpp"
#include "curvnet/generators.hpp"
#include "curvnet/graph_io.hpp"
#include "curvnet/haantjes.hpp"
#include "curvnet/menger.hpp"
#include "curvnet/table1.hpp"
#include "test_support.hpp"

using namespace curvnet;
using namespace curvnet::testing;

namespace {

constexpr double kPi = std::numbers::pi;

struct Check {
    std::string name;
    std::function<std::string()> run; // empty string = pass, else the reason
};

EdgeId edge_of(const Graph& g, const std::string& u, const std::string& v) {
    return g.require_edge(g.require_vertex(u), g.require_vertex(v));
}

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return buf;
}

std::string expect_near(const char* what, double got, double want, double tol) {
    if (std::abs(got - want) <= tol) return "";
    return std::string(what) + ": got " + fmt(got) + ", want " + fmt(want) +
           " (tol " + fmt(tol) + ")";
}

// --- criterion bodies ------------------------------------------------------

std::string c1_figure3_exact() {
    const std::pair<char, double> cases[] = {
        {'a', 6 * kPi - 3},
        {'b', 2 * kPi - 1},
        {'c', 6 * kPi - 2 - std::sqrt(2.0)},
    };
    for (auto [which, want] : cases) {
        Graph g = figure3_graph(which);
        double got = haantjes_ricci_edge(g, edge_of(g, "u", "v")).value;
        std::string r = expect_near(
            (std::string("figure3(") + which + ") anchor Ric_H").c_str(), got,
            want, 1e-12);
        if (!r.empty()) return r;
    }
    return "";
}

std::string c2_table1_haantjes() {
    Table1Report report = compute_table1();
    const double s2 = std::sqrt(2.0);
    struct Row {
        LatticeKind k;
        double want;
        bool published_match;
    };
    const Row rows[] = {
        {LatticeKind::triangular, 4 * kPi - 2, true},
        {LatticeKind::square, 4 * kPi - 2 * s2, false},
        {LatticeKind::hexagonal, 4 * kPi - 4, false},
        {LatticeKind::cubic, 8 * kPi - 4 * s2, true},
    };
    for (const Row& row : rows) {
        const Table1Cell& cell = report.cell("Ric_H", row.k);
        std::string r = expect_near(
            (std::string("Ric_H ") + to_string(row.k)).c_str(), cell.computed,
            row.want, 1e-12);
        if (!r.empty()) return r;
        if (cell.match != row.published_match)
            return std::string("Ric_H ") + to_string(row.k) +
                   " match flag is wrong";
    }
    if (report.cell("Ric_H", LatticeKind::square).note.find("transposed") ==
            std::string::npos ||
        report.cell("Ric_H", LatticeKind::hexagonal).note.find("transposed") ==
            std::string::npos)
        return "transposition of the square/hexagonal entries is not flagged";
    return "";
}

std::string c3_table1_forman() {
    Table1Report report = compute_table1();
    struct Row {
        const char* measure;
        LatticeKind k;
        double want;
        bool published_match;
    };
    const Row rows[] = {
        {"Ric_F-augmented", LatticeKind::triangular, -2, true},
        {"Ric_F-augmented", LatticeKind::square, 0, true},
        {"Ric_F-augmented", LatticeKind::hexagonal, -2, false},
        {"Ric_F-reduced", LatticeKind::triangular, -8, true},
        {"Ric_F-reduced", LatticeKind::hexagonal, -2, true},
        {"Ric_F-reduced", LatticeKind::square, -4, false},
        {"Ric_F-reduced", LatticeKind::cubic, -8, false},
    };
    for (const Row& row : rows) {
        const Table1Cell& cell = report.cell(row.measure, row.k);
        std::string r = expect_near(
            (std::string(row.measure) + " " + to_string(row.k)).c_str(),
            cell.computed, row.want, 1e-12);
        if (!r.empty()) return r;
        if (cell.match != row.published_match)
            return std::string(row.measure) + " " + to_string(row.k) +
                   (row.published_match ? " must match the published value"
                                        : " must be reported as a delta");
    }
    return "";
}

std::string c4_combinatorial_law() {
    for (int n = 2; n <= 10; ++n) {
        double got = haantjes_path(static_cast<double>(n), 1.0);
        double want = std::sqrt(static_cast<double>(n - 1));
        if (got != want)
            return "kappa_H(" + std::to_string(n) + " unit edges, unit chord) = " +
                   fmt(got) + ", want exactly " + fmt(want);
    }
    return "";
}

std::string c5_ratio() {
    Graph torus = generate_lattice({LatticeKind::triangular, {8, 8}});
    auto stats_triangles = [&] {
        std::vector<std::array<VertexId, 3>> tris;
        for (EdgeId eid = 0; eid < torus.edge_count(); ++eid) {
            const Edge& e = torus.edge(eid);
            for (VertexId w : torus.neighbors(e.u))
                if (w > e.v && torus.adjacent(e.v, w))
                    tris.push_back({e.u, e.v, w});
        }
        return tris;
    }();
    std::mt19937_64 rng(123);
    std::shuffle(stats_triangles.begin(), stats_triangles.end(), rng);
    std::size_t count = std::min<std::size_t>(100, stats_triangles.size());
    for (std::size_t i = 0; i < count; ++i) {
        const auto& t = stats_triangles[i];
        auto w = [&](VertexId a, VertexId b) {
            return torus.edge_weight(*torus.edge_between(a, b));
        };
        double km = menger_curvature({w(t[0], t[1]), w(t[1], t[2]), w(t[2], t[0])});
        double kh = haantjes_path(w(t[0], t[1]) + w(t[1], t[2]), w(t[2], t[0]));
        std::string r = expect_near("kappa_M / kappa_H on a unit lattice triangle",
                                    km / kh, std::sqrt(3.0) / 3.0, 1e-12);
        if (!r.empty()) return r;
    }
    return "";
}

std::string c6_geometry_limit() {
    const double s = 1e-3;
    double e = menger_curvature({s, s, s});
    double h = menger_curvature({s, s, s}, {GeometryKind::hyperbolic});
    double sp = menger_curvature({s, s, s}, {GeometryKind::spherical});
    if (std::abs(h - e) / e >= 1e-3)
        return "hyperbolic deviation " + fmt(std::abs(h - e) / e) + " >= 1e-3";
    if (std::abs(sp - e) / e >= 1e-3)
        return "spherical deviation " + fmt(std::abs(sp - e) / e) + " >= 1e-3";
    for (double side : {1.0, 0.1, 0.01}) {
        double ee = menger_curvature({side, side, side});
        double hh = menger_curvature({side, side, side}, {GeometryKind::hyperbolic});
        double ss = menger_curvature({side, side, side}, {GeometryKind::spherical});
        if (!(hh < ee && ee < ss))
            return "ordering hyperbolic < euclidean < spherical fails at side " +
                   fmt(side);
    }
    return "";
}

std::string c7_oracle_equivalence() {
    std::mt19937_64 rng(2024);
    // cycle enumeration vs exhaustive permutation census
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 4 + trial % 5;
        Graph g = random_graph(rng, n, 0.45);
        std::uint32_t L = 3 + trial % 4;
        for (EdgeId eid = 0; eid < g.edge_count(); ++eid) {
            const Edge& e = g.edge(eid);
            for (bool chordless : {true, false}) {
                auto mode = chordless ? CellAdmissionMode::chordless
                                      : CellAdmissionMode::all_simple;
                auto got = two_cells_at_edge(g, eid, {mode, L});
                auto want = brute_cycles_through_edge(g, e.u, e.v, L, chordless);
                if (got.size() != want.size())
                    return "cycle census mismatch on trial " +
                           std::to_string(trial) + ": got " +
                           std::to_string(got.size()) + ", want " +
                           std::to_string(want.size());
                for (const Cycle& c : got)
                    if (!want.count(canonical_cyclic(c.vertices)))
                        return "enumerated cycle missing from the census, trial " +
                               std::to_string(trial);
            }
        }
    }
    // transport vs spanning-tree oracle
    std::uniform_int_distribution<std::size_t> size(1, 4);
    std::uniform_real_distribution<double> mass(0.05, 1.0);
    std::uniform_real_distribution<double> cost(0.0, 5.0);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t m = size(rng), n = size(rng);
        std::vector<double> mv(m), nv(n);
        double sum = 0;
        for (auto& x : mv) sum += (x = mass(rng));
        for (auto& x : mv) x /= sum;
        sum = 0;
        for (auto& x : nv) sum += (x = mass(rng));
        for (auto& x : nv) x /= sum;
        ProbabilityMeasure mu, nu;
        for (std::size_t i = 0; i < m; ++i) {
            mu.support.push_back(static_cast<VertexId>(i));
            mu.mass.push_back(mv[i]);
        }
        for (std::size_t j = 0; j < n; ++j) {
            nu.support.push_back(static_cast<VertexId>(64 + j));
            nu.mass.push_back(nv[j]);
        }
        DistanceTable d{m, n, {}};
        std::vector<std::vector<double>> dmat(m, std::vector<double>(n));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j)
                d.data.push_back(dmat[i][j] = cost(rng));
        double got = exact_w1(mu, nu, d).cost;
        double want = brute_w1_cost(mv, nv, dmat);
        std::string r = expect_near("W1 vs brute-force oracle", got, want, 1e-9);
        if (!r.empty()) return r + " on trial " + std::to_string(trial);
    }
    return "";
}

std::string c8_weighted_sign_contract() {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> w(0.05, 4.0);
    std::uniform_int_distribution<int> len(3, 7);
    for (int trial = 0; trial < 200; ++trial) {
        // random weighted cycle graph; anchor its (v0, v_last) closing edge
        int n = len(rng);
        GraphBuilder b;
        for (int i = 0; i < n; ++i)
            b.add_edge(num_label(i), num_label((i + 1) % n), w(rng));
        Graph g = b.build();
        EdgeId anchor = edge_of(g, num_label(0), num_label(n - 1));
        auto cells = two_cells_at_edge(
            g, anchor, {CellAdmissionMode::chordless,
                        static_cast<std::uint32_t>(n)});
        if (cells.size() != 1)
            return "cycle graph should have one cell through the anchor";
        const Cycle& c = cells[0];
        double kappa = haantjes_path(c.path_weight(), c.chord_weight);
        double diff = c.path_weight() - c.chord_weight;
        if (diff > 0 && !(kappa > 0)) return "positive case not positive";
        if (diff < 0 && !(kappa < 0)) return "negative case not negative";
        if (haantjes_path(c.chord_weight, c.chord_weight) != 0.0)
            return "equality case not exactly zero";
    }
    return "";
}

std::string c9_determinism_and_scale() {
    std::mt19937_64 rng(4242);
    Graph g = random_gnm(rng, 10000, 50000);
    ComputeConfig config;
    config.measure = Measure::haantjes_ricci;
    config.admission = {CellAdmissionMode::chordless, 5};

    auto render = [&](unsigned workers) {
        CurvatureField field = compute_field(g, config, workers);
        std::ostringstream out;
        render_csv(field, g, config, out);
        return out.str();
    };
    auto start = std::chrono::steady_clock::now();
    std::string with8 = render(8);
    std::string with1 = render(1);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                start)
                      .count();
    if (with1 != with8) return "output differs between 1 and 8 workers";
    if (secs >= 60.0)
        return "both runs took " + fmt(secs) + "s; the budget is 60s for one";
    std::cout << "    (erdos-renyi 10^4 vertices / 5*10^4 edges: both runs in "
              << fmt(secs) << "s)\n";
    return "";
}

std::string c10_ollivier_exploration() {
    const double published[] = {1.0, -1.0, -4.0 / 3.0};
    const LatticeKind kinds[] = {LatticeKind::triangular, LatticeKind::square,
                                 LatticeKind::cubic};
    std::cout << "    published Ric_O entries: triangular 1, square -1, "
                 "cubic -4/3\n";
    bool any_match = false;
    for (double idleness : {0.0, 0.5}) {
        bool all = true;
        std::cout << "    idleness " << idleness << ":";
        for (int i = 0; i < 3; ++i) {
            LatticeSpec spec;
            spec.kind = kinds[i];
            spec.safe_cycle_len = lattice_face_length(kinds[i]);
            spec.dims.assign(kinds[i] == LatticeKind::cubic ? 3 : 2,
                             spec.safe_cycle_len + 2);
            Graph g = generate_lattice(spec);
            double got = ollivier_ricci_edge(g, 0, idleness);
            std::cout << " " << to_string(kinds[i]) << "=" << fmt(got);
            if (std::abs(got - published[i]) > 1e-9) all = false;
        }
        std::cout << (all ? "  -> reproduces the published row\n"
                          : "  -> does not reproduce the published row\n");
        any_match = any_match || all;
    }
    if (!any_match)
        std::cout << "    no scanned idleness reproduces the published row; "
                     "W1 exactness is covered by criterion 7\n";
    return ""; // reporting criterion: the scan itself is the deliverable
}

} // namespace

int main() {
    const std::vector<Check> checks = {
        {"criterion 1: worked-example Ric_H values exact to 1e-12",
         c1_figure3_exact},
        {"criterion 2: tessellation Ric_H row (incl. transposition flag)",
         c2_table1_haantjes},
        {"criterion 3: tessellation Forman rows (matches and deltas)",
         c3_table1_forman},
        {"criterion 4: kappa_H = sqrt(n-1) exactly for n = 2..10",
         c4_combinatorial_law},
        {"criterion 5: Menger/Haantjes ratio sqrt(3)/3 on 100 lattice triangles",
         c5_ratio},
        {"criterion 6: geometry limit and ordering", c6_geometry_limit},
        {"criterion 7: oracle equivalence (cycles x200, transport x200)",
         c7_oracle_equivalence},
        {"criterion 8: weighted sign contract on random cycles",
         c8_weighted_sign_contract},
        {"criterion 9: determinism and scale (10^4 x 5*10^4 under 60s)",
         c9_determinism_and_scale},
        {"criterion 10: Ollivier idleness scan report", c10_ollivier_exploration},
    };

    int failures = 0;
    for (const Check& check : checks) {
        std::string reason;
        try {
            reason = check.run();
        } catch (const std::exception& e) {
            reason = std::string("exception: ") + e.what();
        }
        if (reason.empty()) {
            std::cout << "[PASS] " << check.name << "\n";
        } else {
            ++failures;
            std::cout << "[FAIL] " << check.name << ": " << reason << "\n";
        }
    }
    std::cout << (failures == 0 ? "acceptance: all criteria passed\n"
                                : "acceptance: " + std::to_string(failures) +
                                      " criterion(s) failed\n");
    return failures;
}
