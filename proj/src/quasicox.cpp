#include "hurwitz/quasicox.hpp"
#include "hurwitz/cyclotomic.hpp"

#include <cmath>
#include <complex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hw {

SplitUV split_UV(const ArrangementMatrix &b) {
  std::size_t n = b.n();
  SplitUV s{Mat(n, n), Mat(n, n)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) (i < j ? s.U : s.V)(i, j) = b(i, j);
  return s;
}

Mat cox_matrix(const ArrangementMatrix &b) {
  auto [U, V] = split_UV(b);
  Mat id = Mat::identity(b.n());
  // I + U is unipotent: (I + U)^{-1} = sum_k (-U)^k
  Mat inv = id, term = id;
  Mat negU = ExactNumber(-1) * U;
  for (std::size_t k = 1; k < b.n(); ++k) {
    term = term * negU;
    inv = inv + term;
  }
  return inv * (id - V);
}

std::optional<long> element_order(const Mat &m, long cap) {
  if (m.rows() != m.cols()) throw std::invalid_argument("element_order of non-square matrix");
  Mat p = m;
  for (long k = 1; k <= cap; ++k) {
    if (p.is_identity()) return k;
    p = p * m;
  }
  return std::nullopt;
}

namespace {

std::vector<std::complex<double>> numeric(const Poly &p) {
  std::vector<std::complex<double>> c;
  for (auto &x : p) c.push_back(x.to_complex());
  return c;
}

double eval_abs(const std::vector<std::complex<double>> &c, std::complex<double> z) {
  std::complex<double> s = 0;
  for (std::size_t i = c.size(); i-- > 0;) s = s * z + c[i];
  return std::abs(s);
}

Poly quad(long p, long q) { return {ExactNumber(1), -two_cos(p, q), ExactNumber(1)}; }

} // namespace

Fingerprint cyclo_fingerprint(const Poly &p0, const FingerprintOptions &opt) {
  Poly p = p0;
  trim(p);
  if (p.empty() || p.back() != ExactNumber(1)) throw std::invalid_argument("cyclo_fingerprint needs a monic polynomial");
  Fingerprint fp;
  for (long d = 1; d <= opt.max_d && degree(p) > 0; ++d) {
    if (euler_phi(d) > degree(p)) continue;
    auto c = numeric(p);
    double scale = 1;
    for (auto &x : c) scale += std::abs(x);
    std::complex<double> z = std::polar(1.0, 2 * M_PI / d);
    if (eval_abs(c, z) > 1e-6 * scale) continue;
    Poly phi = poly_from_ints(cyclotomic_poly(d));
    long mult = 0;
    Poly q;
    while (degree(p) >= degree(phi) && poly_divides(p, phi, q)) {
      p = q;
      ++mult;
    }
    if (mult) fp.cyclotomic.emplace_back(d, mult);
  }
  std::vector<std::pair<long, long>> quads;
  for (long q = 2; q <= opt.max_q && degree(p) >= 2; ++q)
    for (long k = 1; k < q && degree(p) >= 2; ++k) {
      if (std::gcd(k, q) != 1) continue;
      auto c = numeric(p);
      double scale = 1;
      for (auto &x : c) scale += std::abs(x);
      if (eval_abs(c, std::polar(1.0, M_PI * k / q)) > 1e-6 * scale) continue;
      Poly f = quad(k, q), r;
      while (degree(p) >= 2 && poly_divides(p, f, r)) {
        p = r;
        quads.emplace_back(k, q);
      }
    }
  std::sort(quads.begin(), quads.end(), [](auto a, auto b) { return a.first * b.second < b.first * a.second; });
  fp.quadratic = quads;
  if (degree(p) > 0) fp.residual = p;
  return fp;
}

Fingerprint fingerprint_of(const Mat &m) { return cyclo_fingerprint(charpoly(m)); }

std::string Fingerprint::to_string() const {
  std::ostringstream os;
  bool first = true;
  auto sep = [&] {
    if (!first) os << "*";
    first = false;
  };
  for (auto [d, m] : cyclotomic) {
    sep();
    os << "Phi" << d;
    if (m > 1) os << "^" << m;
  }
  for (std::size_t i = 0; i < quadratic.size();) {
    std::size_t j = i;
    while (j < quadratic.size() && quadratic[j] == quadratic[i]) ++j;
    sep();
    os << "Q(" << quadratic[i].first << "/" << quadratic[i].second << ")";
    if (j - i > 1) os << "^" << (j - i);
    i = j;
  }
  if (!residual.empty()) {
    sep();
    os << "R(" << poly_to_string(residual) << ")";
  }
  if (first) os << "1";
  return os.str();
}

Poly Fingerprint::reassemble() const {
  Poly p{ExactNumber(1)};
  for (auto [d, m] : cyclotomic) p = poly_mul(p, poly_pow(poly_from_ints(cyclotomic_poly(d)), m));
  for (auto [k, q] : quadratic) p = poly_mul(p, quad(k, q));
  if (!residual.empty()) p = poly_mul(p, residual);
  return p;
}

std::optional<long> Fingerprint::implied_order() const {
  if (!residual.empty()) return std::nullopt;
  long l = 1;
  for (auto [d, m] : cyclotomic) l = std::lcm(l, d);
  // roots exp(+-i pi k/q) with gcd(k,q)=1 have order 2q/gcd(k, 2q)
  for (auto [k, q] : quadratic) l = std::lcm(l, 2 * q / std::gcd(k, 2 * q));
  return l;
}

Mat quasicox_of_tuple(const std::vector<Mat> &t) {
  if (t.empty()) throw std::invalid_argument("empty tuple");
  Mat p = t[0];
  for (std::size_t i = 1; i < t.size(); ++i) p = p * t[i];
  return p;
}

Perm quasicox_of_tuple(const std::vector<Perm> &t) {
  if (t.empty()) throw std::invalid_argument("empty tuple");
  Perm p = t[0];
  for (std::size_t i = 1; i < t.size(); ++i) p = perm_mul(p, t[i]);
  return p;
}

} // namespace hw
