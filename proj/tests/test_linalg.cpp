#include "hurwitz/cyclotomic.hpp"
#include "hurwitz/linalg.hpp"

#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

using namespace hw;

namespace {

// Leibniz expansion, independent of the elimination code.
ExactNumber leibniz(const Mat &m) {
  std::size_t n = m.rows();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  ExactNumber total = 0;
  do {
    int inv = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inv += p[i] > p[j];
    ExactNumber t = inv % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) t *= m(i, p[i]);
    total += t;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

ExactNumber eval(const Poly &p, const ExactNumber &x) {
  ExactNumber r = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + *it;
  return r;
}

Mat random_mat(std::mt19937_64 &rng, std::size_t n, bool field) {
  std::uniform_int_distribution<long> c(-3, 3);
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = field && c(rng) > 1 ? ExactNumber(c(rng)) * two_cos(1, 5) : ExactNumber(c(rng));
  return m;
}

} // namespace

TEST_SUITE("linalg") {

TEST_CASE("determinant against the Leibniz expansion") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 60; ++t) {
    std::size_t n = 1 + t % 5;
    Mat m = random_mat(rng, n, t % 2);
    CHECK(det(m) == leibniz(m));
  }
}

TEST_CASE("inverse, kernel and solve") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 40; ++t) {
    Mat m = random_mat(rng, 2 + t % 4, t % 2);
    auto inv = inverse(m);
    CHECK(inv.has_value() == !det(m).is_zero());
    if (inv) {
      CHECK((m * *inv).is_identity());
      Vec b(m.rows(), ExactNumber(1));
      auto x = solve(m, b);
      REQUIRE(x);
      CHECK(m * *x == b);
    }
    Mat k = kernel(m);
    CHECK((long)k.cols() == (long)m.cols() - rank(m));
    if (k.cols()) CHECK((m * k).is_zero());
  }
  Mat s = Mat::from_rows({{1, 2}, {2, 4}});
  CHECK(rank(s) == 1);
  CHECK(!inverse(s));
}

TEST_CASE("characteristic polynomial evaluates to det(xI - M)") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 30; ++t) {
    std::size_t n = 1 + t % 5;
    Mat m = random_mat(rng, n, t % 3 == 0);
    Poly p = charpoly(m);
    CHECK(degree(p) == (long)n);
    for (long x = -2; x <= 2; ++x) {
      Mat a = ExactNumber(x) * Mat::identity(n) - m;
      CHECK(eval(p, ExactNumber(x)) == det(a));
    }
  }
}

TEST_CASE("power") {
  Mat r = Mat::from_rows({{0, -1}, {1, 1}}); // order 6
  CHECK(power(r, 6).is_identity());
  CHECK(!power(r, 3).is_identity());
  CHECK(power(r, 0).is_identity());
}

TEST_CASE("cyclotomic polynomials multiply to x^n - 1") {
  for (long n = 1; n <= 60; ++n) {
    Poly prod{ExactNumber(1)};
    for (long d = 1; d <= n; ++d)
      if (n % d == 0) {
        Poly f;
        for (auto &c : cyclotomic_poly(d)) f.push_back(ExactNumber(mpq_class(c)));
        prod = poly_mul(prod, f);
      }
    Poly want(n + 1, ExactNumber(0));
    want[0] = -1;
    want[n] = 1;
    CHECK(prod == want);
  }
  auto &p12 = cyclotomic_poly(12);
  CHECK(p12 == std::vector<mpz_class>{1, 0, -1, 0, 1});
}

}
