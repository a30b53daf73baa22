#include "hurwitz/catalog.hpp"
#include "hurwitz/cyclotomic.hpp"
#include "hurwitz/quasicox.hpp"
#include "hurwitz/realization.hpp"

#include "doctest.h"

#include <random>

using namespace hw;

namespace {

Poly phi(long d) { return poly_from_ints(cyclotomic_poly(d)); }
Poly quad(long p, long q) { return Poly{ExactNumber(1), -two_cos(p, q), ExactNumber(1)}; }

} // namespace

TEST_SUITE("quasicox") {

TEST_CASE("fingerprints of known products") {
  Fingerprint f = cyclo_fingerprint(poly_mul(phi(3), poly_pow(phi(6), 2)));
  CHECK(f.cyclotomic == std::vector<std::pair<long, long>>{{3, 1}, {6, 2}});
  CHECK(f.to_string() == "Phi3*Phi6^2");
  CHECK(f.implied_order() == 6);

  Fingerprint g = cyclo_fingerprint(poly_mul(quad(1, 15), quad(11, 15)));
  CHECK(g.quadratic == std::vector<std::pair<long, long>>{{1, 15}, {11, 15}});
  CHECK(g.to_string() == "Q(1/15)*Q(11/15)");
  CHECK(g.implied_order() == 30);

  Fingerprint h = cyclo_fingerprint(Poly{ExactNumber(1), ExactNumber(-3), ExactNumber(1)});
  CHECK(!h.residual.empty());
  CHECK(!h.implied_order());
  CHECK_THROWS(cyclo_fingerprint(Poly{ExactNumber(1), ExactNumber(2)}));
}

TEST_CASE("reassembly recovers random products") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<long> d(1, 40), pq(2, 30);
  for (int t = 0; t < 40; ++t) {
    Poly p{ExactNumber(1)};
    for (int k = 0; k < 1 + t % 3; ++k) p = poly_mul(p, phi(d(rng)));
    if (t % 2) {
      long q = pq(rng);
      p = poly_mul(p, quad(1, q));
    }
    CHECK(cyclo_fingerprint(p).reassemble() == p);
  }
}

TEST_CASE("Coxeter elements of the universal matrices") {
  // eigenvalues exp(2 pi i m / h) over the exponents m: B3 (1,3,5), D4 (1,3,3,5), h = 6
  CHECK(fingerprint_of(cox_matrix(gamma0_A(4))).to_string() == "Phi5");
  CHECK(fingerprint_of(cox_matrix(gamma0_B(3))).to_string() == "Phi2*Phi6");
  CHECK(fingerprint_of(cox_matrix(gamma0_D(4))).to_string() == "Phi2^2*Phi6");
  for (int n = 2; n <= 6; ++n) {
    ArrangementMatrix b = gamma0_A(n);
    Mat c = cox_matrix(b);
    CHECK(c == unique_realization(b).product());
    CHECK(element_order(c, 100) == n + 1);
  }
}

TEST_CASE("split") {
  ArrangementMatrix b = gamma0_A(3);
  SplitUV s = split_UV(b);
  CHECK(s.U + s.V == b.mat());
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j <= i; ++j) CHECK(s.U(i, j).is_zero());
}

TEST_CASE("element order") {
  CHECK(element_order(Mat::from_rows({{0, -1}, {1, 1}}), 100) == 6);
  CHECK(!element_order(Mat::from_rows({{1, 1}, {0, 1}}), 100));
}

TEST_CASE("tuple product") {
  const RootSystem &r = root_system("B3");
  std::vector<Perm> t;
  for (int s : r.simple) t.push_back(r.refl_perm[s]);
  Perm p = quasicox_of_tuple(t);
  CHECK(p == perm_mul(perm_mul(t[0], t[1]), t[2]));
}

}
