#pragma once

#include "hurwitz/exact_number.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hw {

using Vec = std::vector<ExactNumber>;

class Mat {
public:
  Mat() : r_(0), c_(0) {}
  Mat(std::size_t r, std::size_t c) : r_(r), c_(c), a_(r * c) {}
  static Mat identity(std::size_t n);
  static Mat from_rows(const std::vector<Vec> &rows);

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  ExactNumber &operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const ExactNumber &operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;
  Mat transpose() const;
  Mat submatrix(const std::vector<int> &rs, const std::vector<int> &cs) const;
  Mat principal(const std::vector<int> &idx) const { return submatrix(idx, idx); }
  bool is_identity() const;
  bool is_zero() const;

  friend Mat operator*(const Mat &a, const Mat &b);
  friend Mat operator+(const Mat &a, const Mat &b);
  friend Mat operator-(const Mat &a, const Mat &b);
  friend Mat operator*(const ExactNumber &s, const Mat &a);
  friend Vec operator*(const Mat &a, const Vec &v);
  friend bool operator==(const Mat &a, const Mat &b) { return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_; }
  friend bool operator!=(const Mat &a, const Mat &b) { return !(a == b); }

  std::string to_string() const;

private:
  std::size_t r_, c_;
  std::vector<ExactNumber> a_;
};

struct DetRank {
  ExactNumber det; // zero unless square and full rank
  long rank;
};

DetRank det_rank(const Mat &m);
inline ExactNumber det(const Mat &m) { return det_rank(m).det; }
inline long rank(const Mat &m) { return det_rank(m).rank; }
std::optional<Mat> inverse(const Mat &m);
// Columns form a basis of {x : m x = 0}.
Mat kernel(const Mat &m);
// Solve m x = b for square invertible m.
std::optional<Vec> solve(const Mat &m, const Vec &b);
Mat power(const Mat &m, long e);

// Polynomials, coefficients in ascending degree, no trailing zeros.
using Poly = std::vector<ExactNumber>;

void trim(Poly &p);
long degree(const Poly &p);
Poly poly_mul(const Poly &a, const Poly &b);
Poly poly_pow(const Poly &a, long e);
// Returns false if b does not divide a; q receives the quotient either way.
bool poly_divides(const Poly &a, const Poly &b, Poly &q);
Poly poly_from_ints(const std::vector<mpz_class> &c);
std::string poly_to_string(const Poly &p, const std::string &var = "x");

// det(xI - m), monic.
Poly charpoly(const Mat &m);

} // namespace hw
