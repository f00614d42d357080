#include "orjsj/report.hpp"

#include <algorithm>

#include "orjsj/parse.hpp"

namespace orjsj {

using nlohmann::ordered_json;

ordered_json polytope_json(const LatticePolytope& p) {
  ordered_json vertices = ordered_json::array();
  for (const auto& v : p.vertices()) vertices.push_back({v.x, v.y});
  return {{"class", class_name(classify(p))}, {"vertices", vertices}};
}

ordered_json orbit_json(const OrbitSet& orbit) {
  std::vector<std::string> words;
  for (const auto& m : orbit.members) words.push_back(m.str());
  std::sort(words.begin(), words.end());
  return words;
}

ordered_json decomposition_json(const JsjDecomposition& d) {
  if (d.trivial()) {
    return {{"type", "trivial"}, {"vertices", 1}, {"edges", 0}, {"vertex_group", "G"}};
  }
  const auto& h = *d.hnn;
  return {{"type", "hnn"},
          {"base_relator_xy", format_xy(h.base_relator)},
          {"exponent", h.exponent},
          {"stable_letter", "b"},
          {"attaching", "y = b^-1 a b"},
          {"representative", h.representative.str()}};
}

ordered_json report_json(const JsjReport& r, bool with_timing) {
  ordered_json j;
  j["input"] = r.input;
  j["relator"] = r.relator.str();
  j["root"] = r.applicability.root.str();
  j["exponent"] = r.applicability.exponent;
  j["exponent_sums"] = {r.applicability.sums.a, r.applicability.sums.b};
  j["applicability"] = case_name(r.applicability.kind);
  j["polytope"] = r.polytope ? polytope_json(*r.polytope) : ordered_json(nullptr);
  j["detection"] = verdict_name(r.detection);
  j["decomposition"] =
      r.decomposition ? decomposition_json(*r.decomposition) : ordered_json(nullptr);
  j["out_class"] = r.out ? ordered_json(out_class_name(*r.out)) : ordered_json(nullptr);
  j["warnings"] = r.warnings;
  if (with_timing) j["timing_ms"] = {{"detect", r.detect_ms}, {"compute", r.compute_ms}};
  return j;
}

}  // namespace orjsj
