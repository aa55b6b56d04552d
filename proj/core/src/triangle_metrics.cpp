#include "curvnet/triangle_metrics.hpp"

#include <algorithm>
#include <cmath>

namespace curvnet {

double triangle_haantjes(double duv, double dvw, double duw) {
    if (!(duv > 0.0) || !(dvw > 0.0) || !(duw > 0.0))
        throw DomainError("triangle_haantjes needs positive side lengths");
    double numer = duv + dvw - duw;
    if (numer < 0.0)
        throw DomainError("triangle inequality violated: sides sum below chord");
    if (numer == 0.0) return 0.0;
    return std::sqrt(numer / (duw * duw * duw));
}

double excess(double duv, double dvw, double duw) {
    if (!(duv > 0.0) || !(dvw > 0.0) || !(duw > 0.0))
        throw DomainError("excess needs positive side lengths");
    // Sort before summing so the value is bitwise labeling-symmetric.
    double lo = duv, mid = dvw, hi = duw;
    if (lo > mid) std::swap(lo, mid);
    if (mid > hi) std::swap(mid, hi);
    if (lo > mid) std::swap(lo, mid);
    return mid + hi - lo;
}

double aspect_ratio(double duv, double dvw, double duw) {
    return excess(duv, dvw, duw) / std::max({duv, dvw, duw});
}

TriangleStats TriangleStats::from_sides(double a, double b, double c) {
    TriangleStats s;
    s.diameter = std::max({a, b, c});
    s.excess = curvnet::excess(a, b, c);
    s.aspect_ratio = s.excess / s.diameter;
    // Chord = diameter labeling.
    double s1 = a, s2 = b;
    if (c != s.diameter) {
        if (a == s.diameter) s1 = c;
        else s2 = c;
    }
    s.kappa_h = triangle_haantjes(s1, s2, s.diameter);
    return s;
}

GlobalTriangleStats global_triangle_stats(const Graph& g) {
    GlobalTriangleStats out;
    auto better_max = [](double v, const std::array<VertexId, 3>& t,
                         const std::optional<TriangleWitness>& cur) {
        return !cur || v > cur->value || (v == cur->value && t < cur->vertices);
    };
    auto better_min = [](double v, const std::array<VertexId, 3>& t,
                         const std::optional<TriangleWitness>& cur) {
        return !cur || v < cur->value || (v == cur->value && t < cur->vertices);
    };
    for (EdgeId eid = 0; eid < g.edge_count(); ++eid) {
        const Edge& e = g.edge(eid);
        auto nu = g.neighbors(e.u);
        auto nv = g.neighbors(e.v);
        std::vector<VertexId> common;
        std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(),
                              std::back_inserter(common));
        for (VertexId w : common) {
            if (w <= e.v) continue; // count each triangle at its smallest edge
            ++out.triangle_count;
            double a = e.weight;
            double b = g.edge_weight(g.require_edge(e.v, w));
            double c = g.edge_weight(g.require_edge(w, e.u));
            std::array<VertexId, 3> t{e.u, e.v, w};
            double exc = excess(a, b, c);
            double ar = exc / std::max({a, b, c});
            if (better_max(exc, t, out.max_excess)) out.max_excess = {t, exc};
            if (better_min(ar, t, out.min_aspect_ratio))
                out.min_aspect_ratio = {t, ar};
        }
    }
    return out;
}

} // namespace curvnet
