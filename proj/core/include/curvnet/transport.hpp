#pragma once

#include <vector>

#include "curvnet/graph.hpp"

namespace curvnet {

// Discrete probability measure on vertices.
struct ProbabilityMeasure {
    std::vector<VertexId> support; // distinct entries
    std::vector<double> mass;      // parallel, nonnegative, sums to 1

    void validate() const; // throws InputError when the invariants fail
};

// Dense rows x cols table of nonnegative costs.
struct DistanceTable {
    std::size_t rows = 0, cols = 0;
    std::vector<double> data; // row-major

    double at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
    double& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
};

struct TransportPlan {
    std::size_t rows = 0, cols = 0;
    std::vector<double> flow; // row-major, nonnegative
    double cost = 0.0;

    double at(std::size_t i, std::size_t j) const { return flow[i * cols + j]; }
};

// Exact 1-Wasserstein plan between two measures under the given pairwise
// costs, solved by the transportation simplex with Bland's anti-cycling
// rule; terminates on every instance and the optimum is exact up to
// floating-point rounding. Row sums reproduce mu, column sums nu.
// Throws InputError when total masses differ (beyond 1e-12) or the table
// shape does not match the supports.
TransportPlan exact_w1(const ProbabilityMeasure& mu, const ProbabilityMeasure& nu,
                       const DistanceTable& dist);

} // namespace curvnet
