#include "hurwitz/braid.hpp"
#include "hurwitz/catalog.hpp"
#include "hurwitz/realization.hpp"

#include "doctest.h"

#include <random>

using namespace hw;

namespace {

// Moves the vectors and covectors of a realization directly; the Gram matrix
// of the result is compared with act_sigma.
Mat hurwitz_gram(const Realization &r, int i, int e) {
  std::vector<Vec> v = r.v, c = r.vdual;
  std::size_t p = i - 1, q = i;
  auto refl = [&](std::size_t k, const Vec &x) {
    ExactNumber s = 0;
    for (std::size_t a = 0; a < x.size(); ++a) s += c[k][a] * x[a];
    Vec y = x;
    for (std::size_t a = 0; a < x.size(); ++a) y[a] -= s * v[k][a];
    return y;
  };
  auto crefl = [&](std::size_t k, const Vec &f) {
    ExactNumber s = 0;
    for (std::size_t a = 0; a < f.size(); ++a) s += f[a] * v[k][a];
    Vec y = f;
    for (std::size_t a = 0; a < f.size(); ++a) y[a] -= s * c[k][a];
    return y;
  };
  std::vector<Vec> v2 = v, c2 = c;
  if (e > 0) {
    v2[p] = refl(p, v[q]), c2[p] = crefl(p, c[q]);
    v2[q] = v[p], c2[q] = c[p];
  } else {
    v2[p] = v[q], c2[p] = c[q];
    v2[q] = refl(q, v[p]), c2[q] = crefl(q, c[p]);
  }
  Mat g(v.size(), v.size());
  for (std::size_t a = 0; a < v.size(); ++a)
    for (std::size_t b = 0; b < v.size(); ++b) {
      ExactNumber s = 0;
      for (std::size_t k = 0; k < v[b].size(); ++k) s += c2[a][k] * v2[b][k];
      g(a, b) = s;
    }
  return g;
}

ArrangementMatrix random_matrix(std::mt19937_64 &rng, int n) {
  std::uniform_int_distribution<int> c(-2, 2);
  Mat m(n, n);
  for (int i = 0; i < n; ++i) {
    m(i, i) = 2;
    for (int j = i + 1; j < n; ++j) m(i, j) = m(j, i) = c(rng) + (c(rng) > 0 ? two_cos(1, 7) : ExactNumber(0));
  }
  return ArrangementMatrix(m);
}

} // namespace

TEST_SUITE("braid") {

TEST_CASE("word syntax") {
  BraidWord w = BraidWord::parse("s1 s2^-1 s1");
  REQUIRE(w.size() == 3);
  CHECK(w.letters[1] == std::pair{2, -1});
  CHECK(w.to_string() == "s1 s2^-1 s1");
  CHECK(w.inverse().to_string() == "s1^-1 s2 s1^-1");
  CHECK(w.max_index() == 2);
  CHECK_THROWS(BraidWord::parse("s0"));
  CHECK_THROWS(BraidWord::parse("t1"));
}

TEST_CASE("matrix action agrees with moving the reflections") {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 40; ++t) {
    ArrangementMatrix b = random_matrix(rng, 2 + t % 4);
    Realization r = minimal_realization(b);
    for (int i = 1; i < (int)b.n(); ++i)
      for (int e : {1, -1}) CHECK(hurwitz_gram(r, i, e) == act_sigma(b, i, e).mat());
  }
}

TEST_CASE("group-level Hurwitz action preserves the product") {
  std::vector<Mat> t = unique_realization(gamma0_B(4)).reflections();
  Mat before = t[0] * t[1] * t[2] * t[3];
  auto u = hurwitz_word(t, BraidWord::parse("s1 s3^-1 s2 s2 s1^-1"));
  CHECK(u[0] * u[1] * u[2] * u[3] == before);
  CHECK(hurwitz(hurwitz(t, 2, 1), 2, -1) == t);
}

TEST_CASE("words act from the left") {
  ArrangementMatrix b = gamma0_A(3);
  BraidWord w = BraidWord::parse("s1 s2");
  CHECK(act_word(b, w) == act_sigma(act_sigma(b, 2, 1), 1, 1));
}

TEST_CASE("braid relations on random matrices") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 30; ++t) {
    ArrangementMatrix b = random_matrix(rng, 3 + t % 3);
    for (int i = 1; i + 1 < (int)b.n(); ++i)
      CHECK(act_word(b, BraidWord{{{i, 1}, {i + 1, 1}, {i, 1}}}) == act_word(b, BraidWord{{{i + 1, 1}, {i, 1}, {i + 1, 1}}}));
  }
}

TEST_CASE("Stokes action") {
  Mat s = Mat::from_rows({{1, 2, 0}, {0, 1, -1}, {0, 0, 1}});
  Mat s2 = stokes_act(s, 1, 1);
  ArrangementMatrix b(s + s.transpose());
  CHECK(s2 + s2.transpose() == act_sigma(b, 1, 1).mat());
  CHECK_THROWS(stokes_act(Mat::from_rows({{1, 0}, {1, 1}}), 1, 1));
}

TEST_CASE("tree reordering") {
  ArrangementMatrix b = ArrangementMatrix::from_rows({{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}});
  std::vector<int> target{2, 0, 3, 1};
  BraidWord w = reorder_tree(b, target);
  ArrangementMatrix c = act_word(b, w);
  CHECK(sign_canonical(c) == sign_canonical(permute(b, target)));
  CHECK_THROWS(reorder_tree(gamma0_A(3), {0, 1, 2}));
}

TEST_CASE("cycle invariants") {
  CHECK(cycle_invariants({1, 2, 3}) == std::pair{2, 1});
  CHECK(cycle_invariants({3, 1, 4, 2}) == std::pair{2, 2});
}

}
