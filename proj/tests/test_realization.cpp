#include "hurwitz/catalog.hpp"
#include "hurwitz/realization.hpp"

#include "doctest.h"

using namespace hw;

TEST_SUITE("realization") {

TEST_CASE("unique realization of an invertible matrix") {
  ArrangementMatrix b = gamma0_D(5);
  Realization r = unique_realization(b);
  CHECK(r.dim == 5);
  CHECK(gram_matches(r, b));
  CHECK(is_minimal(r));
  for (auto &m : r.reflections()) {
    CHECK((m * m).is_identity());
    CHECK(m.transpose() * b.mat() * m == b.mat());
  }
  RealizationSpec all{{0, 1, 2, 3, 4}, {}, {0, 1, 2, 3, 4}, {}, {}, {}};
  Realization g = general_realization(b, all);
  CHECK(g.reflections() == r.reflections());
}

TEST_CASE("rank-1 example") {
  ArrangementMatrix b = ArrangementMatrix::uniform(3, 2);
  RealizationSpec s{{0}, {1}, {0}, {1}, {ExactNumber(3)}, {ExactNumber(3)}};
  Realization r = general_realization(b, s);
  CHECK(r.dim == 3);
  CHECK(r.reflection(0) == Mat::from_rows({{-1, -2, 0}, {0, 1, 0}, {0, 0, 1}}));
  CHECK(r.reflection(1) == Mat::from_rows({{1, 0, 0}, {-2, -1, -1}, {0, 0, 1}}));
  CHECK(r.reflection(2) == Mat::from_rows({{5, 4, 6}, {-6, -5, -9}, {0, 0, 1}}));
  Mat p = r.product();
  CHECK((p * p).is_identity());
  s.b = {ExactNumber(5)};
  Mat q = general_realization(b, s).product();
  CHECK(!(q * q).is_identity());
  CHECK(quasicox_degenerate(b, r) == p);

  Realization m = minimal_realization(b);
  CHECK(m.dim == 1);
  CHECK(m.reflection(0) == Mat::from_rows({{-1}}));
  CHECK_THROWS(general_realization(b, RealizationSpec{{0}, {0}, {0}, {1}, {}, {}}));
}

TEST_CASE("minimal realization basis") {
  ArrangementMatrix b = extension_matrix({"AK", 8, 3, 0, 0});
  CHECK(first_basis(b).size() == 8);
  Realization r = minimal_realization(b);
  CHECK(r.dim == 8);
  CHECK(gram_matches(r, b));
  CHECK(is_minimal(r));
}

TEST_CASE("degenerate 3x3 parameters") {
  CHECK(sign_canonical(degenerate_3x3(Angle::make(1, 1), Angle::make(1, 1))) == sign_canonical(ArrangementMatrix::uniform(3, 2)));
  CHECK(degenerate_3x3(Angle::make(0, 1), Angle::make(0, 1)) == ArrangementMatrix::uniform(3, 2));
  CHECK(det(degenerate_3x3(Angle::make(1, 3), Angle::make(1, 5)).mat()).is_zero());
  CHECK(Angle::make(7, 3) == Angle::make(1, 3));
  CHECK(Angle::make(-1, 3) == Angle::make(5, 3));
  // the matrix action and the parameter map agree up to sign equivalence
  for (long p = 0; p < 6; ++p)
    for (long q = 0; q < 6; ++q) {
      Angle a = Angle::make(p, 7), c = Angle::make(q, 5);
      for (int i : {1, 2})
        for (int e : {1, -1}) {
          auto [a2, c2] = braid_on_params(a, c, i, e);
          CHECK(sign_canonical(act_sigma(degenerate_3x3(a, c), i, e)) == sign_canonical(degenerate_3x3(a2, c2)));
        }
    }
}

TEST_CASE("redundancy") {
  CHECK(is_redundant(ArrangementMatrix::uniform(3, 2), 2));
  for (std::size_t i = 0; i < 3; ++i) CHECK(!is_redundant(gamma0_A(3), i));
  ArrangementMatrix a = extension_matrix({"A1", 5, 0, 1, 1});
  CHECK(is_redundant(a, 5));
  Realization r = minimal_realization(a);
  CHECK(reflection_word(r, {5, 4, 5}) == r.reflection(5));
  CHECK_THROWS(reflection_word(r, {7}));
}

}
