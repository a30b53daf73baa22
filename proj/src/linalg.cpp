#include "hurwitz/linalg.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace hw {

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_rows(const std::vector<Vec> &rows) {
  Mat m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.c_) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t j = 0; j < m.c_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Vec Mat::row(std::size_t i) const { return Vec(a_.begin() + i * c_, a_.begin() + (i + 1) * c_); }

Vec Mat::col(std::size_t j) const {
  Vec v(r_);
  for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
  return v;
}

Mat Mat::transpose() const {
  Mat t(c_, r_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Mat Mat::submatrix(const std::vector<int> &rs, const std::vector<int> &cs) const {
  Mat s(rs.size(), cs.size());
  for (std::size_t i = 0; i < rs.size(); ++i)
    for (std::size_t j = 0; j < cs.size(); ++j) s(i, j) = (*this)(rs[i], cs[j]);
  return s;
}

bool Mat::is_identity() const {
  if (r_ != c_) return false;
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j)
      if ((*this)(i, j) != ExactNumber(i == j ? 1 : 0)) return false;
  return true;
}

bool Mat::is_zero() const {
  for (auto &x : a_)
    if (!x.is_zero()) return false;
  return true;
}

Mat operator*(const Mat &a, const Mat &b) {
  if (a.c_ != b.r_) throw std::invalid_argument("matrix size mismatch");
  Mat p(a.r_, b.c_);
  for (std::size_t i = 0; i < a.r_; ++i)
    for (std::size_t k = 0; k < a.c_; ++k) {
      const ExactNumber &x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.c_; ++j)
        if (!b(k, j).is_zero()) p(i, j) += x * b(k, j);
    }
  return p;
}

Mat operator+(const Mat &a, const Mat &b) {
  if (a.r_ != b.r_ || a.c_ != b.c_) throw std::invalid_argument("matrix size mismatch");
  Mat s = a;
  for (std::size_t k = 0; k < s.a_.size(); ++k) s.a_[k] += b.a_[k];
  return s;
}

Mat operator-(const Mat &a, const Mat &b) {
  if (a.r_ != b.r_ || a.c_ != b.c_) throw std::invalid_argument("matrix size mismatch");
  Mat s = a;
  for (std::size_t k = 0; k < s.a_.size(); ++k) s.a_[k] -= b.a_[k];
  return s;
}

Mat operator*(const ExactNumber &s, const Mat &a) {
  Mat p = a;
  for (auto &x : p.a_) x *= s;
  return p;
}

Vec operator*(const Mat &a, const Vec &v) {
  if (a.c_ != v.size()) throw std::invalid_argument("matrix size mismatch");
  Vec out(a.r_);
  for (std::size_t i = 0; i < a.r_; ++i)
    for (std::size_t j = 0; j < a.c_; ++j)
      if (!a(i, j).is_zero() && !v[j].is_zero()) out[i] += a(i, j) * v[j];
  return out;
}

std::string Mat::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < r_; ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < c_; ++j) {
      const ExactNumber &x = (*this)(i, j);
      os << (j ? ", " : "") << (x.is_real() ? format_expr(x) : std::string("<complex>"));
    }
  }
  os << "]";
  return os.str();
}

// Fraction-free elimination with column skipping; every division is exact.
DetRank det_rank(const Mat &m) {
  Mat a = m;
  std::size_t R = a.rows(), C = a.cols();
  ExactNumber prev(1);
  bool neg = false;
  std::size_t r = 0;
  bool skipped = false;
  for (std::size_t c = 0; c < C && r < R; ++c) {
    std::size_t p = r;
    while (p < R && a(p, c).is_zero()) ++p;
    if (p == R) {
      skipped = true;
      continue;
    }
    if (p != r) {
      for (std::size_t j = 0; j < C; ++j) std::swap(a(p, j), a(r, j));
      neg = !neg;
    }
    ExactNumber piv = a(r, c);
    ExactNumber inv_prev = prev.inverse();
    for (std::size_t i = r + 1; i < R; ++i) {
      ExactNumber f = a(i, c);
      for (std::size_t j = c + 1; j < C; ++j) {
        ExactNumber t = piv * a(i, j);
        if (!f.is_zero()) t -= f * a(r, j);
        a(i, j) = prev.is_rational() && prev.rational() == 1 ? t : t * inv_prev;
      }
      a(i, c) = 0;
    }
    prev = piv;
    ++r;
  }
  DetRank out{ExactNumber(0), (long)r};
  if (R == C && r == R && !skipped) out.det = neg ? -prev : prev;
  if (R == 0 && C == 0) out.det = 1;
  return out;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Mat &a, std::size_t ncols) {
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    ExactNumber inv = a(r, c).inverse();
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      ExactNumber f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j)
        if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

} // namespace

std::optional<Mat> inverse(const Mat &m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  std::size_t n = m.rows();
  Mat a(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = m(i, j);
    a(i, n + i) = 1;
  }
  if (rref(a, n).size() != n) return std::nullopt;
  Mat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = a(i, n + j);
  return inv;
}

std::optional<Vec> solve(const Mat &m, const Vec &b) {
  std::size_t n = m.rows();
  if (m.cols() != n || b.size() != n) throw std::invalid_argument("solve: size mismatch");
  Mat a(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = m(i, j);
    a(i, n) = b[i];
  }
  if (rref(a, n).size() != n) return std::nullopt;
  return a.col(n);
}

Mat kernel(const Mat &m) {
  Mat a = m;
  auto piv = rref(a, a.cols());
  std::vector<bool> is_piv(m.cols(), false);
  for (auto c : piv) is_piv[c] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_piv[c]) free.push_back(c);
  Mat k(m.cols(), free.size());
  for (std::size_t f = 0; f < free.size(); ++f) {
    k(free[f], f) = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) k(piv[r], f) = -a(r, free[f]);
  }
  return k;
}

Mat power(const Mat &m, long e) {
  if (e < 0) {
    auto inv = inverse(m);
    if (!inv) throw DivisionByZero();
    return power(*inv, -e);
  }
  Mat result = Mat::identity(m.rows()), base = m;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

void trim(Poly &p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

long degree(const Poly &p) { return (long)p.size() - 1; }

Poly poly_mul(const Poly &a, const Poly &b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

Poly poly_pow(const Poly &a, long e) {
  Poly r{ExactNumber(1)};
  for (long k = 0; k < e; ++k) r = poly_mul(r, a);
  return r;
}

bool poly_divides(const Poly &a, const Poly &b, Poly &q) {
  if (b.empty()) throw DivisionByZero();
  Poly rem = a;
  trim(rem);
  long db = degree(b);
  q.assign(std::max<long>(0, degree(rem) - db + 1), ExactNumber());
  ExactNumber lead_inv = b.back().inverse();
  while (degree(rem) >= db) {
    long s = degree(rem) - db;
    ExactNumber f = rem.back() * lead_inv;
    q[s] = f;
    for (long i = 0; i <= db; ++i)
      if (!b[i].is_zero()) rem[s + i] -= f * b[i];
    rem.pop_back();
    trim(rem);
  }
  trim(q);
  return rem.empty();
}

Poly poly_from_ints(const std::vector<mpz_class> &c) {
  Poly p;
  for (auto &z : c) p.emplace_back(mpq_class(z));
  trim(p);
  return p;
}

std::string poly_to_string(const Poly &p, const std::string &var) {
  if (p.empty()) return "0";
  std::string out;
  for (long d = degree(p); d >= 0; --d) {
    const ExactNumber &c = p[d];
    if (c.is_zero()) continue;
    std::string cs = format_expr(c);
    bool simple = c.is_rational();
    bool neg = simple && c.rational() < 0;
    if (neg) cs = format_expr(-c);
    std::string mono = d == 0 ? "" : (d == 1 ? var : var + "^" + std::to_string(d));
    std::string term;
    if (d == 0) term = simple ? cs : "(" + cs + ")";
    else if (simple && cs == "1") term = mono;
    else term = (simple ? cs : "(" + cs + ")") + "*" + mono;
    if (out.empty()) out = (neg ? "-" : "") + term;
    else out += (neg ? " - " : " + ") + term;
  }
  return out;
}

Poly charpoly(const Mat &m0) {
  if (m0.rows() != m0.cols()) throw std::invalid_argument("charpoly of non-square matrix");
  std::size_t n = m0.rows();
  Mat h = m0;
  // similarity reduction to upper Hessenberg form
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && h(i, m - 1).is_zero()) ++i;
    if (i == n) continue;
    if (i != m) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(i, j), h(m, j));
      for (std::size_t j = 0; j < n; ++j) std::swap(h(j, i), h(j, m));
    }
    ExactNumber inv = h(m, m - 1).inverse();
    for (std::size_t j = m + 1; j < n; ++j) {
      if (h(j, m - 1).is_zero()) continue;
      ExactNumber u = h(j, m - 1) * inv;
      for (std::size_t k = 0; k < n; ++k)
        if (!h(m, k).is_zero()) h(j, k) -= u * h(m, k);
      for (std::size_t k = 0; k < n; ++k)
        if (!h(k, j).is_zero()) h(k, m) += u * h(k, j);
    }
  }
  std::vector<Poly> p(n + 1);
  p[0] = {ExactNumber(1)};
  for (std::size_t k = 0; k < n; ++k) {
    Poly next(k + 2);
    for (std::size_t d = 0; d <= k; ++d) {
      next[d + 1] += p[k][d];
      next[d] -= h(k, k) * p[k][d];
    }
    ExactNumber t(1);
    for (std::size_t i = k; i-- > 0;) {
      t *= h(i + 1, i);
      if (t.is_zero()) break;
      if (h(i, k).is_zero()) continue;
      ExactNumber f = t * h(i, k);
      for (std::size_t d = 0; d < p[i].size(); ++d) next[d] -= f * p[i][d];
    }
    trim(next);
    p[k + 1] = std::move(next);
  }
  return p[n];
}

} // namespace hw
