#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hw {

struct ParseError : std::runtime_error {
  std::size_t pos;
  ParseError(const std::string &msg, std::size_t p)
      : std::runtime_error(msg + " at position " + std::to_string(p)), pos(p) {}
};

struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("division by zero") {}
};

// Element of Q(zeta_m) in the power basis of zeta_m = exp(2 pi i / m).
// Always stored at its minimal conductor, which is never 2 mod 4.
class ExactNumber {
public:
  ExactNumber();
  ExactNumber(long v);
  ExactNumber(const mpq_class &q);

  static ExactNumber root_of_unity(long k, long m);
  static ExactNumber from_coeffs(long m, std::vector<mpq_class> coeffs);

  long conductor() const { return m_; }
  const std::vector<mpq_class> &coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const { return m_ == 1; }
  const mpq_class &rational() const; // throws unless is_rational()
  bool is_real() const;

  ExactNumber operator-() const;
  ExactNumber &operator+=(const ExactNumber &o);
  ExactNumber &operator-=(const ExactNumber &o);
  ExactNumber &operator*=(const ExactNumber &o);
  ExactNumber &operator/=(const ExactNumber &o);
  ExactNumber inverse() const;
  ExactNumber conj() const;

  friend ExactNumber operator+(ExactNumber a, const ExactNumber &b) { return a += b; }
  friend ExactNumber operator-(ExactNumber a, const ExactNumber &b) { return a -= b; }
  friend ExactNumber operator*(ExactNumber a, const ExactNumber &b) { return a *= b; }
  friend ExactNumber operator/(ExactNumber a, const ExactNumber &b) { return a /= b; }
  friend bool operator==(const ExactNumber &a, const ExactNumber &b) {
    return a.m_ == b.m_ && a.c_ == b.c_;
  }
  friend bool operator!=(const ExactNumber &a, const ExactNumber &b) { return !(a == b); }

  // Total order matching byte order of encode().
  friend int compare(const ExactNumber &a, const ExactNumber &b);
  friend bool operator<(const ExactNumber &a, const ExactNumber &b) { return compare(a, b) < 0; }

  std::string encode() const;
  std::size_t hash() const;

  std::complex<double> to_complex() const;
  double to_double() const { return to_complex().real(); }

private:
  ExactNumber(long m, std::vector<mpq_class> c, bool reduce);
  void reduce();

  long m_;
  std::vector<mpq_class> c_;
};

struct ExactHash {
  std::size_t operator()(const ExactNumber &x) const { return x.hash(); }
};

long euler_phi(long n);
long normalize_conductor(long m);

ExactNumber two_cos(long p, long q);
ExactNumber sqrt_rational(const mpq_class &r);

ExactNumber parse_expr(std::string_view text);
std::string format_expr(const ExactNumber &x);
std::string approx(const ExactNumber &x, int digits);

} // namespace hw
