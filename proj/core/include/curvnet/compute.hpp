#pragma once

#include <functional>
#include <iosfwd>
#include <string>

#include "curvnet/baselines.hpp"
#include "curvnet/haantjes.hpp"
#include "curvnet/menger.hpp"
#include "curvnet/triangle_metrics.hpp"

namespace curvnet {

enum class Measure {
    menger_ricci,
    menger_scalar,
    haantjes_ricci,
    haantjes_scalar,
    haantjes_sectional,
    directional_ricci,
    excess,
    aspect_ratio,
    forman_reduced,
    forman_augmented,
    ollivier,
};

const char* to_string(Measure m);
Measure measure_from_string(std::string_view name);

// What a field is indexed by.
enum class SubjectKind { edge, vertex, triangle, pair, cell };

struct ComputeConfig {
    Measure measure = Measure::haantjes_ricci;
    GeometryModel geometry;                  // menger-* only
    CellAdmission admission;                 // cell-based measures
    FaceWeightScheme scheme;                 // haantjes-* only
    SignConvention sign_convention = SignConvention::standard;
    bool weighted_literal_sign = false;      // haantjes-* only
    ScalarAggregation menger_scalar_mode = ScalarAggregation::triangle_sum;
    double idleness = 0.0;                   // ollivier only
    std::string from, to;                    // directional-ricci only
    PathBound bound;                         // directional-ricci only
    bool include_components = false;

    // One "key=value" token per knob, used verbatim as the provenance
    // header of every output.
    std::string echo() const;
};

struct FieldRow {
    std::vector<VertexId> subject;
    double value = 0.0;
    std::vector<CellContribution> components;
};

struct CurvatureField {
    SubjectKind subject = SubjectKind::edge;
    std::vector<FieldRow> rows;
};

// Evaluates the configured measure over the whole graph as an
// order-independent parallel map: rows land in slots indexed by subject,
// so the result is identical for any worker count. workers == 0 uses the
// hardware concurrency.
CurvatureField compute_field(const Graph& g, const ComputeConfig& config,
                             unsigned workers = 0);

// Tabular renderings; both start with '#'-prefixed header lines echoing
// the config. Values carry 12 significant digits. The JSON form includes
// component breakdowns whenever they were computed.
void render_csv(const CurvatureField& field, const Graph& g,
                const ComputeConfig& config, std::ostream& out);
void render_json(const CurvatureField& field, const Graph& g,
                 const ComputeConfig& config, std::ostream& out);

// Minimal fixed-order parallel map used by compute_field, exposed for
// callers with their own per-index jobs.
void parallel_for_indices(std::size_t count, unsigned workers,
                          const std::function<void(std::size_t)>& fn);

} // namespace curvnet
