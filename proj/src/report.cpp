#include "hyperramsey/report.hpp"

#include <sstream>

namespace hyperramsey {

using nlohmann::json;

json to_json(const VertexSet& set) {
  json out = json::array();
  for (Vertex v : set) out.push_back(v);
  return out;
}

json to_json(const CoverBoundReport& report) {
  return {
      {"n", report.n},
      {"s", report.s},
      {"r", report.r},
      {"t", report.t},
      {"p", report.p.to_string()},
      {"trace_count", report.terms.size()},
      {"bound", report.bound.midpoint()},
      {"reference", report.reference.midpoint()},
      {"ratio", report.ratio.midpoint()},
      {"ratio_upper", report.ratio.upper.to_double()},
      {"exact", report.bound.is_exact() && report.reference.is_exact()},
  };
}

json to_json(const CleanReport& report, const std::string& result_file) {
  json deleted = json::array();
  for (const auto& e : report.deleted) deleted.push_back(to_json(e));
  const double fraction =
      report.input_edges == 0
          ? 0.0
          : static_cast<double>(report.deleted.size()) / static_cast<double>(report.input_edges);
  json out = {
      {"r", report.r},
      {"t", report.t},
      {"input_edges", report.input_edges},
      {"X", report.cover_violations.size()},
      {"Y", report.linearity_violations.size()},
      {"deleted", deleted},
      {"deleted_count", report.deleted.size()},
      {"deleted_fraction", fraction},
      {"result_edges", report.result.num_edges()},
      // clean() throws unless both re-checks pass
      {"r_linear", true},
      {"conformal", true},
  };
  if (!result_file.empty()) out["result_file"] = result_file;
  return out;
}

json to_json(const TrialStats& stats) {
  const auto& p = stats.parameters;
  return {
      {"n", p.n},
      {"s", p.s},
      {"r", p.r},
      {"t", p.t},
      {"p", p.p.to_string()},
      {"p_value", p.p.to_double(p.n)},
      {"trials", p.trials},
      {"master_seed", p.master_seed},
      {"mean_e_H", stats.mean_e_h},
      {"mean_X", stats.mean_x},
      {"mean_Y", stats.mean_y},
      {"mean_deleted", stats.mean_deleted},
      {"mean_e_H0", stats.mean_e_h0},
      {"mean_deleted_fraction", stats.mean_deleted_fraction},
      {"ratio", stats.ratio},
  };
}

json to_json(const ArrowResult& result) {
  json out = {
      {"verdict", to_string(result.verdict)},
      {"exhausted", result.exhausted},
      {"nodes_explored", result.nodes_explored},
      {"elapsed_seconds", result.elapsed_seconds},
  };
  out["has_witness"] = result.witness.has_value();
  return out;
}

json to_json(const DensityResult& result) {
  return {{"density", result.value.to_string()}, {"witness", to_json(result.witness)}};
}

std::string to_csv(const TrialStats& stats) {
  std::ostringstream out;
  out << "seed,e_H,X,Y,deleted,e_H0\n";
  for (const auto& rec : stats.records) {
    out << rec.seed << ',' << rec.e_h << ',' << rec.x << ',' << rec.y << ',' << rec.deleted << ','
        << rec.e_h0 << '\n';
  }
  return out.str();
}

}  // namespace hyperramsey
