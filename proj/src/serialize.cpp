#include "hurwitz/serialize.hpp"
#include "hurwitz/catalog.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hw {

namespace {

ExactNumber entry_from_json(const json &e) {
  if (e.is_number_integer()) return ExactNumber(e.get<long>());
  if (e.is_string()) return parse_expr(e.get<std::string>());
  throw std::invalid_argument("matrix entries must be expression strings or integers");
}

json order_json(const std::optional<long> &o) { return o ? json(*o) : json(nullptr); }

} // namespace

json mat_to_json(const Mat &m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(format_expr(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Mat mat_from_json(const json &j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix must be a non-empty array of rows");
  std::vector<Vec> rows;
  for (auto &r : j) {
    if (!r.is_array() || r.size() != j[0].size()) throw std::invalid_argument("matrix rows must have equal length");
    Vec row;
    for (auto &e : r) row.push_back(entry_from_json(e));
    rows.push_back(std::move(row));
  }
  return Mat::from_rows(rows);
}

json matrix_to_json(const ArrangementMatrix &b) { return {{"n", b.n()}, {"entries", mat_to_json(b.mat())}}; }

ArrangementMatrix matrix_from_json(const json &j) {
  if (!j.is_object() || !j.contains("entries")) throw std::invalid_argument("matrix document needs \"entries\"");
  Mat m = mat_from_json(j.at("entries"));
  if (j.contains("n") && j.at("n").get<std::size_t>() != m.rows()) throw std::invalid_argument("\"n\" does not match the entries");
  return ArrangementMatrix(std::move(m));
}

json fingerprint_to_json(const Fingerprint &f) {
  json c = json::array(), q = json::array();
  for (auto [d, m] : f.cyclotomic) c.push_back({d, m});
  for (auto [p, r] : f.quadratic) q.push_back({p, r});
  return {{"cyclotomic", c}, {"quadratic", q}, {"residual", f.residual.empty() ? json(nullptr) : json(poly_to_string(f.residual))}};
}

json invariants_to_json(const Invariants &inv) {
  json cp = fingerprint_to_json(inv.charpoly);
  cp["text"] = inv.charpoly.to_string();
  return {{"det", format_expr(inv.det)}, {"charpoly", cp}, {"order", order_json(inv.order)}};
}

json orbit_report_to_json(const OrbitReport &r) {
  json j;
  j["verdict"] = r.finite ? "Finite" : "ExceededCap";
  j["size"] = r.size;
  j["invariants"] = invariants_to_json(r.invariants);
  json reps = json::array();
  for (auto &m : r.representatives) reps.push_back(matrix_to_json(m));
  for (auto &t : r.tuple_representatives) reps.push_back(t);
  j["representatives"] = reps;
  return j;
}

json classification_to_json(const Classification &c) {
  json j{{"verdict", to_string(c.verdict)}, {"reason", c.reason}};
  if (c.size) j["states"] = c.size;
  auto angle = [](const std::optional<std::pair<long, long>> &a) {
    return a ? json(std::to_string(a->first) + "/" + std::to_string(a->second)) : json(nullptr);
  };
  if (c.alpha || c.beta) j["alpha_over_pi"] = angle(c.alpha), j["beta_over_pi"] = angle(c.beta);
  return j;
}

json orbit_count_to_json(const OrbitCount &c) {
  json j{{"group", c.group}, {"n", c.n}, {"mode", c.exhaustive ? "exhaustive" : "seeded"}, {"orbits", c.orbits.size()}};
  if (c.exhaustive) j["generating_tuples"] = c.generating_tuples;
  else j["certificate"] = {{"samples", c.samples}, {"consecutive_misses", c.consecutive_misses}};
  json list = json::array();
  for (auto &o : c.orbits) {
    json e{{"representative", o.representative},
           {"states", o.states},
           {"det", format_expr(o.det)},
           {"charpoly", fingerprint_to_json(o.charpoly)},
           {"fingerprint", o.charpoly.to_string()},
           {"order", order_json(o.order)}};
    if (c.exhaustive) e["tuples"] = o.tuples;
    list.push_back(e);
  }
  j["details"] = list;
  return j;
}

json bucket_search_to_json(const BucketSearch &s) {
  json list = json::array();
  for (auto &b : s.buckets)
    list.push_back({{"fingerprint", b.fingerprint}, {"count", b.count}, {"first", b.first}, {"det", format_expr(b.det)}, {"order", order_json(b.order)}});
  return {{"samples", s.samples}, {"draws", s.draws}, {"buckets", list}};
}

json realization_to_json(const Realization &r) {
  json vs = json::array(), cs = json::array(), rs = json::array();
  for (std::size_t i = 0; i < r.size(); ++i) {
    json v = json::array(), c = json::array();
    for (auto &x : r.v[i]) v.push_back(format_expr(x));
    for (auto &x : r.vdual[i]) c.push_back(format_expr(x));
    vs.push_back(v);
    cs.push_back(c);
    rs.push_back(mat_to_json(r.reflection(i)));
  }
  return {{"dim", r.dim}, {"vectors", vs}, {"covectors", cs}, {"reflections", rs}};
}

TupleInput tuple_from_json(const json &j) {
  if (!j.is_object() || !j.contains("group") || !j.contains("reflections"))
    throw std::invalid_argument("tuple document needs \"group\" and \"reflections\"");
  TupleInput t;
  t.group = j.at("group").get<std::string>();
  const RootSystem &r = root_system(t.group);
  for (auto &x : j.at("reflections")) {
    long k = x.get<long>();
    if (k < 0 || (std::size_t)k >= r.num_roots()) throw std::invalid_argument("root index " + std::to_string(k) + " out of range");
    t.reflections.push_back(r.refl_of_root[k]);
  }
  if (t.reflections.empty()) throw std::invalid_argument("empty tuple");
  return t;
}

std::string read_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

} // namespace hw
