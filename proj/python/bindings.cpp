#include "hurwitz/catalog.hpp"
#include "hurwitz/orbit.hpp"
#include "hurwitz/quasicox.hpp"
#include "hurwitz/realization.hpp"
#include "hurwitz/serialize.hpp"
#include "hurwitz/suites.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace hw;

namespace {

// Matrices cross the boundary as lists of rows of expression strings.
using Rows = std::vector<std::vector<std::string>>;

ArrangementMatrix to_matrix(const Rows &rows) {
  json j = json::array();
  for (auto &r : rows) j.push_back(r);
  return ArrangementMatrix(mat_from_json(j));
}

Rows to_rows(const ArrangementMatrix &b) { return mat_to_json(b.mat()).get<Rows>(); }

} // namespace

PYBIND11_MODULE(_hurwitz, m) {
  m.doc() = "Exact braid group action on reflection arrangements";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  m.def("normalize", [](const std::string &e) { return format_expr(parse_expr(e)); }, py::arg("expr"));
  m.def("approx", [](const std::string &e, int digits) { return approx(parse_expr(e), digits); }, py::arg("expr"), py::arg("digits") = 15);

  m.def("act_sigma", [](const Rows &b, int i, int e) { return to_rows(act_sigma(to_matrix(b), i, e)); }, py::arg("matrix"), py::arg("i"),
        py::arg("e") = 1);
  m.def("act_word", [](const Rows &b, const std::string &w) { return to_rows(act_word(to_matrix(b), BraidWord::parse(w))); },
        py::arg("matrix"), py::arg("word"));
  m.def("det", [](const Rows &b) { return format_expr(det(to_matrix(b).mat())); }, py::arg("matrix"));

  m.def(
      "orbit_json",
      [](const Rows &b, long cap, int threads) {
        OrbitOptions o;
        o.cap = cap;
        o.threads = threads;
        py::gil_scoped_release nogil;
        return orbit_report_to_json(matrix_orbit(to_matrix(b), o)).dump();
      },
      py::arg("matrix"), py::arg("cap") = 1000000, py::arg("threads") = 1);
  m.def(
      "hurwitz_json",
      [](const std::string &group, const std::vector<int> &roots, long cap) {
        TupleInput t = tuple_from_json({{"group", group}, {"reflections", roots}});
        OrbitOptions o;
        o.cap = cap;
        py::gil_scoped_release nogil;
        return orbit_report_to_json(hurwitz_orbit(root_system(t.group), t.reflections, o)).dump();
      },
      py::arg("group"), py::arg("roots"), py::arg("cap") = 1000000);
  m.def("classify_json", [](const Rows &b) { return classification_to_json(classify_3x3(to_matrix(b))).dump(); }, py::arg("matrix"));
  m.def(
      "fingerprint_json",
      [](const Rows &rows) {
        ArrangementMatrix b = to_matrix(rows);
        Mat c = det(b.mat()).is_zero() ? quasicox_degenerate(b, minimal_realization(b)) : cox_matrix(b);
        return fingerprint_to_json(fingerprint_of(c)).dump();
      },
      py::arg("matrix"));
  m.def(
      "count_orbits_json",
      [](const std::string &group, bool exhaustive, int threads, std::uint64_t seed) {
        CountOptions o;
        o.exhaustive = exhaustive;
        o.threads = threads;
        o.seed = seed;
        py::gil_scoped_release nogil;
        return orbit_count_to_json(count_generating_orbits(group, 0, o)).dump();
      },
      py::arg("group"), py::arg("exhaustive") = true, py::arg("threads") = 1, py::arg("seed") = 1);
  m.def(
      "search_buckets_json",
      [](const std::string &group, long samples, std::uint64_t seed, int threads) {
        py::gil_scoped_release nogil;
        return bucket_search_to_json(search_buckets(group, samples, seed, threads)).dump();
      },
      py::arg("group"), py::arg("samples"), py::arg("seed") = 1, py::arg("threads") = 1);
  m.def("catalog", [](const std::string &name) { return to_rows(universal_matrix(name)); }, py::arg("name"));
  m.def(
      "extension",
      [](const std::string &family, int n, int k, int p, int q) { return to_rows(extension_matrix({family, n, k, p, q})); },
      py::arg("family"), py::arg("n"), py::arg("k") = 0, py::arg("p") = 0, py::arg("q") = 0);
  m.def("realize_json", [](const Rows &b) { return realization_to_json(minimal_realization(to_matrix(b))).dump(); }, py::arg("matrix"));
  m.def(
      "verify_json",
      [](const std::string &suite, int threads, bool long_run) {
        SuiteOptions o;
        o.threads = threads;
        o.long_run = long_run;
        py::gil_scoped_release nogil;
        return suite_to_json(run_suite(suite, o)).dump();
      },
      py::arg("suite"), py::arg("threads") = 1, py::arg("long_run") = false);
  m.def("suite_names", &suite_names);
}
