#pragma once

#include "hurwitz/arrangement.hpp"
#include "hurwitz/orbit.hpp"
#include "hurwitz/quasicox.hpp"
#include "hurwitz/realization.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace hw {

using json = nlohmann::json;

// {"n": 3, "entries": [["2","1","0"], ...]}; entries may also be JSON integers.
json matrix_to_json(const ArrangementMatrix &b);
ArrangementMatrix matrix_from_json(const json &j);
json mat_to_json(const Mat &m); // rows of expression strings
Mat mat_from_json(const json &j);

json fingerprint_to_json(const Fingerprint &f);
json invariants_to_json(const Invariants &inv);
json orbit_report_to_json(const OrbitReport &r);
json classification_to_json(const Classification &c);
json orbit_count_to_json(const OrbitCount &c);
json bucket_search_to_json(const BucketSearch &s);
json realization_to_json(const Realization &r);

// {"group": "H3", "reflections": [root-index, ...]}; root indices map to their reflections.
struct TupleInput {
  std::string group;
  std::vector<int> reflections; // reflection indices
};
TupleInput tuple_from_json(const json &j);

std::string read_file(const std::string &path);

} // namespace hw
