#pragma once

// JSON forms of library values. Field names are stable.

#include <json.hpp>

#include "orjsj/jsj.hpp"
#include "orjsj/polytope.hpp"
#include "orjsj/whitehead.hpp"

namespace orjsj {

// {"class": "point|segment|2d", "vertices": [[x, y], ...]}
nlohmann::ordered_json polytope_json(const LatticePolytope& p);

// Sorted array of canonical-rotation word strings.
nlohmann::ordered_json orbit_json(const OrbitSet& orbit);

nlohmann::ordered_json decomposition_json(const JsjDecomposition& d);

nlohmann::ordered_json report_json(const JsjReport& r, bool with_timing = true);

}  // namespace orjsj
