#include "hurwitz/arrangement.hpp"
#include "hurwitz/catalog.hpp"

#include "doctest.h"

#include <random>

using namespace hw;

TEST_SUITE("arrangement") {

TEST_CASE("validation") {
  CHECK_THROWS(ArrangementMatrix(Mat::from_rows({{2, 1}, {0, 2}})));
  CHECK_THROWS(ArrangementMatrix(Mat::from_rows({{1, 0}, {0, 2}})));
  CHECK_NOTHROW(ArrangementMatrix(Mat::from_rows({{2, -1}, {-1, 2}})));
}

TEST_CASE("sign classes") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> c(-2, 2), s(0, 1);
  for (int t = 0; t < 50; ++t) {
    std::size_t n = 2 + t % 4;
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = 2;
      for (std::size_t j = i + 1; j < n; ++j) m(i, j) = m(j, i) = c(rng) * two_cos(1, 5);
    }
    ArrangementMatrix b(m);
    SignVector l(n);
    for (auto &x : l) x = s(rng) ? 1 : -1;
    ArrangementMatrix c2 = apply_signs(b, l);
    CHECK(sign_canonical(c2) == sign_canonical(b));
    CHECK(sign_canonical(b) == sign_canonical_exhaustive(b));
    CHECK(det(c2.mat()) == det(b.mat()));
  }
}

TEST_CASE("graph labels follow the drawing convention") {
  auto e = match_cos_label(ExactNumber(1));
  REQUIRE(e);
  CHECK(e->label() == "");
  CHECK(match_cos_label(ExactNumber(-1))->label() == "-");
  CHECK(match_cos_label(two_cos(1, 5))->label() == "5");
  CHECK(match_cos_label(two_cos(2, 5))->label() == "5'");
  CHECK(match_cos_label(-two_cos(1, 4))->label() == "-4");
  CHECK(!match_cos_label(ExactNumber(0)));
  ArrangementMatrix h = ArrangementMatrix::from_rows({{2, two_cos(1, 5), 0}, {two_cos(1, 5), 2, -1}, {0, -1, 2}});
  LabeledGraph g = to_graph(h);
  CHECK(g.edges.size() == 2);
  CHECK(from_graph(g) == h);
  std::string dot = to_dot(g, "h");
  CHECK(dot.find("label=\"5\"") != std::string::npos);
  CHECK(dot.find("label=\"-\"") != std::string::npos);
}

TEST_CASE("decomposition") {
  ArrangementMatrix b = ArrangementMatrix::from_rows({{2, 0, 1}, {0, 2, 0}, {1, 0, 2}});
  auto d = is_decomposable(b);
  CHECK(d.decomposable);
  CHECK(d.parts.size() == 2);
  CHECK(!is_decomposable(gamma0_A(4)).decomposable);
}

TEST_CASE("minor chains") {
  CHECK(minor_chain(gamma0_A(4)).s == std::vector<int>{1, 2, 3, 4});
  CHECK(minor_chain(ArrangementMatrix::uniform(3, 2)).s == std::vector<int>{1, 1, 1});
  CHECK(minor_chain(ArrangementMatrix::uniform(3, -2)).s == std::vector<int>{1, 1, 3});
}

TEST_CASE("permute") {
  ArrangementMatrix b = gamma0_D(4);
  std::vector<int> p{3, 1, 0, 2};
  ArrangementMatrix c = permute(b, p);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(c(i, j) == b(p[i], p[j]));
}

}
