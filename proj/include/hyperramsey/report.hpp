#pragma once

#include <string>

#include <json.hpp>

#include "hyperramsey/arrows.hpp"
#include "hyperramsey/construct.hpp"
#include "hyperramsey/covers.hpp"
#include "hyperramsey/density.hpp"

namespace hyperramsey {

/// Fields: n, s, r, t, p, trace_count, bound, reference, ratio, exact,
/// ratio_upper. Doubles are enclosure midpoints except ratio_upper, which
/// comes from the upper end of the ratio enclosure.
nlohmann::json to_json(const CoverBoundReport& report);

/// `result_file` names the .uhg sidecar holding the cleaned hypergraph.
nlohmann::json to_json(const CleanReport& report, const std::string& result_file = "");

nlohmann::json to_json(const TrialStats& stats);
nlohmann::json to_json(const ArrowResult& result);
nlohmann::json to_json(const DensityResult& result);
nlohmann::json to_json(const VertexSet& set);

/// One row per trial with the fixed header `seed,e_H,X,Y,deleted,e_H0`.
std::string to_csv(const TrialStats& stats);

}  // namespace hyperramsey
