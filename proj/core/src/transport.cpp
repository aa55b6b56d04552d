#include "curvnet/transport.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

namespace curvnet {

void ProbabilityMeasure::validate() const {
    if (support.size() != mass.size())
        throw InputError("measure support and mass sizes differ");
    if (support.empty()) throw InputError("measure has empty support");
    for (double m : mass)
        if (!(m >= 0.0)) throw InputError("measure has negative mass");
    double total = std::accumulate(mass.begin(), mass.end(), 0.0);
    if (std::abs(total - 1.0) > 1e-12)
        throw InputError("measure mass sums to " + std::to_string(total) +
                         ", not 1");
    std::set<VertexId> distinct(support.begin(), support.end());
    if (distinct.size() != support.size())
        throw InputError("measure support has repeated vertices");
}

namespace {

constexpr double kReducedCostTol = 1e-12;

// Basis of a transportation tableau: a spanning tree over m sources and
// n sinks, kept as an explicit cell list plus membership flags.
struct Tableau {
    std::size_t m, n;
    const DistanceTable& d;
    std::vector<double> flow;  // m x n
    std::vector<char> basic;   // m x n
    std::vector<double> u, v;  // duals

    Tableau(std::size_t m_, std::size_t n_, const DistanceTable& d_)
        : m(m_), n(n_), d(d_), flow(m_ * n_, 0.0), basic(m_ * n_, 0),
          u(m_, 0.0), v(n_, 0.0) {}

    std::size_t idx(std::size_t i, std::size_t j) const { return i * n + j; }

    // Northwest-corner start: always yields exactly m + n - 1 basic cells
    // (zeros included under degeneracy), i.e. a spanning tree.
    void initial_basis(std::vector<double> supply, std::vector<double> demand) {
        std::size_t i = 0, j = 0;
        while (true) {
            double q = std::min(supply[i], demand[j]);
            flow[idx(i, j)] = q;
            basic[idx(i, j)] = 1;
            supply[i] -= q;
            demand[j] -= q;
            if (i + 1 == m && j + 1 == n) break;
            // Advance along exactly one axis per step so the basic-cell
            // count lands at m + n - 1.
            if (i + 1 == m) ++j;
            else if (j + 1 == n) ++i;
            else if (supply[i] <= demand[j]) ++i;
            else ++j;
        }
    }

    void solve_duals() {
        std::vector<char> useen(m, 0), vseen(n, 0);
        u[0] = 0.0;
        useen[0] = 1;
        bool progress = true;
        while (progress) {
            progress = false;
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    if (!basic[idx(i, j)]) continue;
                    if (useen[i] && !vseen[j]) {
                        v[j] = d.at(i, j) - u[i];
                        vseen[j] = 1;
                        progress = true;
                    } else if (!useen[i] && vseen[j]) {
                        u[i] = d.at(i, j) - v[j];
                        useen[i] = 1;
                        progress = true;
                    }
                }
        }
        for (std::size_t i = 0; i < m; ++i)
            if (!useen[i]) throw InvariantError("transport basis is not spanning");
        for (std::size_t j = 0; j < n; ++j)
            if (!vseen[j]) throw InvariantError("transport basis is not spanning");
    }

    // Unique alternating cycle the entering cell closes in the basis tree.
    // Returned as cells with +/- labels, entering cell first (+).
    std::vector<std::pair<std::size_t, int>> pivot_cycle(std::size_t ei,
                                                         std::size_t ej) const {
        // Walk the basis tree from sink ej back to source ei over bipartite
        // nodes; parents give the cycle path.
        std::vector<int> row_parent(m, -1), col_parent(n, -1);
        std::vector<char> row_seen(m, 0), col_seen(n, 0);
        std::vector<std::size_t> row_stack{ei};
        row_seen[ei] = 1;
        std::vector<std::size_t> col_stack;
        bool found = false;
        while (!found && (!row_stack.empty() || !col_stack.empty())) {
            if (!row_stack.empty()) {
                std::size_t i = row_stack.back();
                row_stack.pop_back();
                for (std::size_t j = 0; j < n; ++j) {
                    if (i == ei && j == ej) continue;
                    if (!basic[idx(i, j)] || col_seen[j]) continue;
                    col_seen[j] = 1;
                    col_parent[j] = static_cast<int>(i);
                    if (j == ej) {
                        found = true;
                        break;
                    }
                    col_stack.push_back(j);
                }
            } else {
                std::size_t j = col_stack.back();
                col_stack.pop_back();
                for (std::size_t i = 0; i < m; ++i) {
                    if (i == ei && j == ej) continue;
                    if (!basic[idx(i, j)] || row_seen[i]) continue;
                    row_seen[i] = 1;
                    row_parent[i] = static_cast<int>(j);
                    row_stack.push_back(i);
                }
            }
        }
        if (!found) throw InvariantError("pivot cycle not found in transport basis");
        // Reconstruct ei -> ... -> ej, then prepend the entering cell.
        std::vector<std::pair<std::size_t, int>> cycle;
        cycle.emplace_back(idx(ei, ej), +1);
        std::size_t j = ej;
        int sign = -1;
        while (true) {
            std::size_t i = static_cast<std::size_t>(col_parent[j]);
            cycle.emplace_back(idx(i, j), sign);
            sign = -sign;
            if (i == ei) break;
            j = static_cast<std::size_t>(row_parent[i]);
            cycle.emplace_back(idx(i, j), sign);
            sign = -sign;
        }
        return cycle;
    }
};

} // namespace

TransportPlan exact_w1(const ProbabilityMeasure& mu, const ProbabilityMeasure& nu,
                       const DistanceTable& dist) {
    mu.validate();
    nu.validate();
    const std::size_t m = mu.support.size(), n = nu.support.size();
    if (dist.rows != m || dist.cols != n)
        throw InputError("distance table shape does not match measure supports");
    for (double c : dist.data)
        if (!(c >= 0.0)) throw InputError("negative transport cost");
    double tm = std::accumulate(mu.mass.begin(), mu.mass.end(), 0.0);
    double tn = std::accumulate(nu.mass.begin(), nu.mass.end(), 0.0);
    if (std::abs(tm - tn) > 1e-12)
        throw InputError("transport problem is infeasible: mass mismatch");

    Tableau t(m, n, dist);
    t.initial_basis(mu.mass, nu.mass);

    const std::size_t max_pivots = 200000;
    for (std::size_t pivot = 0;; ++pivot) {
        if (pivot > max_pivots)
            throw InvariantError("transportation simplex exceeded pivot budget");
        t.solve_duals();
        // Bland: entering cell is the lowest-index one priced below zero.
        std::size_t ei = m, ej = n;
        for (std::size_t i = 0; i < m && ei == m; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (t.basic[t.idx(i, j)]) continue;
                if (dist.at(i, j) - t.u[i] - t.v[j] < -kReducedCostTol) {
                    ei = i;
                    ej = j;
                    break;
                }
            }
        if (ei == m) break; // optimal

        auto cycle = t.pivot_cycle(ei, ej);
        double theta = std::numeric_limits<double>::infinity();
        std::size_t leaving = 0;
        for (const auto& [cell, sign] : cycle) {
            if (sign >= 0) continue;
            // Bland again on the leaving side: lowest cell index among the
            // minimizers.
            if (t.flow[cell] < theta ||
                (t.flow[cell] == theta && cell < leaving)) {
                theta = t.flow[cell];
                leaving = cell;
            }
        }
        for (const auto& [cell, sign] : cycle)
            t.flow[cell] = std::max(0.0, t.flow[cell] + sign * theta);
        t.basic[t.idx(ei, ej)] = 1;
        t.basic[leaving] = 0;
        t.flow[leaving] = 0.0;
    }

    TransportPlan plan;
    plan.rows = m;
    plan.cols = n;
    plan.flow = std::move(t.flow);
    plan.cost = 0.0;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            plan.cost += plan.at(i, j) * dist.at(i, j);
    return plan;
}

} // namespace curvnet
