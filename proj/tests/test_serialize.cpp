#include "hurwitz/catalog.hpp"
#include "hurwitz/serialize.hpp"

#include "doctest.h"

using namespace hw;

TEST_SUITE("serialize") {

TEST_CASE("matrix documents round-trip") {
  ArrangementMatrix b = ArrangementMatrix::from_rows({{2, two_cos(1, 5), -1}, {two_cos(1, 5), 2, 0}, {-1, 0, 2}});
  json j = matrix_to_json(b);
  CHECK(j["n"] == 3);
  CHECK(matrix_from_json(j) == b);
  CHECK(matrix_from_json(json::parse(j.dump())) == b);
  json ints = json::parse(R"({"n": 2, "entries": [[2, 1], [1, 2]]})");
  CHECK(matrix_from_json(ints) == gamma0_A(2));
}

TEST_CASE("malformed documents are rejected") {
  CHECK_THROWS(matrix_from_json(json::parse(R"({"n": 3, "entries": [[2, 1], [1, 2]]})")));
  CHECK_THROWS(matrix_from_json(json::parse(R"({"entries": [[2, 1], [0, 2]]})")));
  CHECK_THROWS(matrix_from_json(json::parse(R"j({"entries": [[2, "2cos(pi*1/0)"], ["1", 2]]})j")));
  CHECK_THROWS(matrix_from_json(json::parse(R"([1, 2])")));
  CHECK_THROWS(tuple_from_json(json::parse(R"({"group": "H3", "reflections": [99]})")));
  CHECK_THROWS(tuple_from_json(json::parse(R"({"group": "H3"})")));
}

TEST_CASE("tuples map root indices to reflections") {
  const RootSystem &r = root_system("H3");
  int a = r.positive[0], b = r.neg[r.positive[1]];
  TupleInput t = tuple_from_json({{"group", "H3"}, {"reflections", {a, b}}});
  CHECK(t.reflections == std::vector<int>{0, 1});
}

TEST_CASE("fingerprint document shape") {
  json j = fingerprint_to_json(fingerprint_of(cox_matrix(gamma0_A(2))));
  CHECK(j["cyclotomic"] == json::parse("[[3, 1]]"));
  CHECK(j["quadratic"].empty());
  CHECK(j["residual"].is_null());
}

TEST_CASE("orbit report document shape") {
  json j = orbit_report_to_json(matrix_orbit(gamma0_A(3)));
  CHECK(j["verdict"] == "Finite");
  CHECK(j["invariants"]["det"] == "4");
  CHECK(j["representatives"].size() >= 1);
}

}
