#include "hurwitz/catalog.hpp"
#include "hurwitz/quasicox.hpp"

#include "doctest.h"

using namespace hw;

TEST_SUITE("catalog") {

TEST_CASE("root counts") {
  struct {
    const char *type;
    std::size_t roots;
  } want[] = {{"A3", 12}, {"A5", 30}, {"B3", 18}, {"B4", 32}, {"D4", 24}, {"D5", 40}, {"E6", 72},
              {"E7", 126}, {"E8", 240}, {"F4", 48}, {"H3", 30}, {"H4", 120}, {"I2(5)", 10}};
  for (auto &w : want) {
    CAPTURE(w.type);
    const RootSystem &r = root_system(w.type);
    CHECK(r.num_roots() == w.roots);
    CHECK(r.num_reflections() * 2 == w.roots);
    for (std::size_t x = 0; x < r.num_roots(); ++x) CHECK(r.neg[r.neg[x]] == (int)x);
  }
  CHECK_THROWS(root_system("X3"));
}

TEST_CASE("reflection permutations are involutions fixing their root up to sign") {
  const RootSystem &r = root_system("H3");
  for (std::size_t k = 0; k < r.num_reflections(); ++k) {
    const Perm &p = r.refl_perm[k];
    CHECK(perm_mul(p, p) == perm_identity(r.num_roots()));
    CHECK(p[r.positive[k]] == r.neg[r.positive[k]]);
    Mat m = r.reflection_matrix((int)k);
    CHECK((m * m).is_identity());
  }
}

TEST_CASE("reflection closure identifies subsystems") {
  const RootSystem &e8 = root_system("E8");
  std::vector<int> seed;
  for (int s : e8.simple) seed.push_back(e8.positive[s]);
  CHECK(reflection_closure(e8, seed).identification == "E8");
  CHECK(reflection_closure(e8, {seed[0]}).identification == "A1");
  const RootSystem &b3 = root_system("B3");
  std::vector<int> b;
  for (int s : b3.simple) b.push_back(b3.positive[s]);
  CHECK(reflection_closure(b3, {b[0], b[1]}).roots.size() == 6);
  CHECK(identify_irreducible(8, 240, 1) == "E8");
  CHECK(identify_irreducible(4, 48, 2) == "F4");
  CHECK(identify_irreducible(3, 30, 1) == "H3");
}

TEST_CASE("universal matrices") {
  CHECK(det(gamma0_A(5).mat()) == ExactNumber(6));
  CHECK(det(gamma0_D(6).mat()) == ExactNumber(4));
  CHECK(det(gamma0_B(3).mat()) == ExactNumber(2));
  CHECK(universal_matrix("A4") == gamma0_A(4));
  CHECK_THROWS(universal_matrix("E6:9"));
}

TEST_CASE("pinned representatives") {
  CHECK(fixtures_for("E6").size() == 3);
  CHECK(fixtures_for("E7").size() == 5);
  CHECK(fixtures_for("E8").size() == 9);
  CHECK(fixtures_for("H4").size() == 11);
  CHECK(fixtures_for("F4").size() == 2);
  CHECK(fixtures_for("H3").size() == 3);
  for (auto &f : fixtures()) {
    CAPTURE(f.group);
    CAPTURE(f.bucket);
    ArrangementMatrix b = root_system(f.group).arrangement(f.reflections);
    CHECK(fingerprint_of(cox_matrix(b)).to_string() == f.bucket);
  }
  CHECK(fingerprint_of(cox_matrix(universal_matrix("E6:1"))).to_string() == "Phi3*Phi12");
}

TEST_CASE("extension matrices") {
  ArrangementMatrix b = extension_matrix({"Dext1", 5, 0, 1, 0});
  CHECK(b.n() == 6);
  CHECK(det(b.mat()) == extension_det_formula({"Dext1", 5, 0, 1, 0}));
  CHECK(a1_vector(5, 2, 1) == std::vector<int>{0, 0, -1, 1, 1});
  CHECK_THROWS(extension_matrix({"Dext9", 5, 0, 0, 0}));
  CHECK_THROWS(extension_matrix({"Dext1", 5, 0, 3, 2}));
  CHECK(same_rank_inclusions().size() > 0);
}

}
