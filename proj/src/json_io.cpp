#include "statuslab/json_io.hpp"

namespace statuslab {

namespace {

nlohmann::ordered_json encodings(const std::vector<CanonicalForm>& forms) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& f : forms) out.push_back(f.encoding());
  return out;
}

std::vector<Vertex> as_vector(const VertexSet& set) {
  const auto m = set.members();
  return {m.begin(), m.end()};
}

}  // namespace

nlohmann::ordered_json status_report_json(const Tree& t, Selector sel) {
  const auto vec = status_vector(t, sel);
  const auto report = extremes(t, sel);
  nlohmann::ordered_json j;
  j["n"] = t.order();
  j["selector"] = std::string(to_string(sel));
  j["values"] = vec.values;
  j["min"] = report.min_value;
  j["min_set"] = as_vector(report.min_set);
  j["max"] = report.max_value;
  j["max_set"] = as_vector(report.max_set);
  return j;
}

nlohmann::ordered_json params_json(const ClaimParams& params) {
  nlohmann::ordered_json j;
  j["n"] = params.n;
  if (params.diameter) j["d"] = *params.diameter;
  if (params.max_degree) j["max_degree"] = *params.max_degree;
  return j;
}

nlohmann::ordered_json claim_report_json(const ClaimReport& report) {
  nlohmann::ordered_json j;
  j["claim"] = report.claim;
  j["params"] = params_json(report.params);
  j["universe"] = report.universe;
  j["bound"] = report.bound;
  j["violations"] = encodings(report.violations);
  j["extremal"] = encodings(report.extremal);
  j["characterization_agreement"] = report.characterization_agreement;
  j["seconds"] = report.seconds;
  return j;
}

}  // namespace statuslab
