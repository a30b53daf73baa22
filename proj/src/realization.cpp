#include "hurwitz/realization.hpp"
#include "hurwitz/quasicox.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace hw {

Mat Realization::reflection(std::size_t i) const {
  Mat r = Mat::identity(dim);
  for (std::size_t a = 0; a < dim; ++a) {
    if (v[i][a].is_zero()) continue;
    for (std::size_t b = 0; b < dim; ++b)
      if (!vdual[i][b].is_zero()) r(a, b) -= v[i][a] * vdual[i][b];
  }
  return r;
}

std::vector<Mat> Realization::reflections() const {
  std::vector<Mat> out;
  for (std::size_t i = 0; i < size(); ++i) out.push_back(reflection(i));
  return out;
}

Mat Realization::gram() const {
  Mat g(size(), size());
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j) {
      ExactNumber s;
      for (std::size_t k = 0; k < dim; ++k)
        if (!vdual[i][k].is_zero() && !v[j][k].is_zero()) s += vdual[i][k] * v[j][k];
      g(i, j) = s;
    }
  return g;
}

Mat Realization::product() const {
  Mat p = Mat::identity(dim);
  for (std::size_t i = 0; i < size(); ++i) p = p * reflection(i);
  return p;
}

namespace {

std::vector<int> sorted_union(const std::vector<int> &a, const std::vector<int> &b) {
  std::vector<int> u(a);
  u.insert(u.end(), b.begin(), b.end());
  std::sort(u.begin(), u.end());
  return u;
}

void check_set(const std::vector<int> &s, std::size_t n, const char *name) {
  std::vector<int> t(s);
  std::sort(t.begin(), t.end());
  if (std::adjacent_find(t.begin(), t.end()) != t.end()) throw std::invalid_argument(std::string(name) + " has repeated indices");
  for (int x : t)
    if (x < 0 || (std::size_t)x >= n) throw std::invalid_argument(std::string(name) + " index out of range");
}

bool disjoint(const std::vector<int> &a, const std::vector<int> &b) {
  for (int x : a)
    if (std::find(b.begin(), b.end(), x) != b.end()) return false;
  return true;
}

Mat block(const Mat &m, const std::vector<int> &rows, const std::vector<int> &cols) {
  Mat out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = m(rows[i], cols[j]);
  return out;
}

Mat unipotent_inverse(const Mat &u) { // (I + U)^{-1} for strictly upper U
  std::size_t n = u.rows();
  Mat inv = Mat::identity(n), term = Mat::identity(n);
  Mat neg = ExactNumber(-1) * u;
  for (std::size_t k = 1; k < n; ++k) {
    term = term * neg;
    inv = inv + term;
  }
  return inv;
}

} // namespace

std::vector<int> first_basis(const ArrangementMatrix &b) {
  std::size_t n = b.n();
  long r = rank(b.mat());
  std::vector<int> idx(r);
  std::iota(idx.begin(), idx.end(), 0);
  // combinations in lexicographic order
  while (true) {
    if (!det(b.mat().principal(idx)).is_zero()) return idx;
    long k = r - 1;
    while (k >= 0 && idx[k] == (int)(n - r + k)) --k;
    if (k < 0) break;
    ++idx[k];
    for (long j = k + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
  throw std::logic_error("no non-degenerate principal minor of full rank");
}

Realization general_realization(const ArrangementMatrix &bm, const RealizationSpec &spec, bool construction_basis) {
  const Mat &B = bm.mat();
  std::size_t n = bm.n();
  long r = rank(B);
  for (auto [s, name] : {std::pair{&spec.I, "I"}, {&spec.Ip, "I'"}, {&spec.J, "J"}, {&spec.Jp, "J'"}}) check_set(*s, n, name);
  if ((long)spec.I.size() != r || (long)spec.J.size() != r) throw std::invalid_argument("I and J must have rank(B) elements");
  if (!disjoint(spec.I, spec.Ip) || !disjoint(spec.J, spec.Jp)) throw std::invalid_argument("I' and J' must be disjoint from I and J");
  std::vector<int> I = spec.I, J = spec.J;
  std::sort(I.begin(), I.end());
  std::sort(J.begin(), J.end());
  auto Bt_inv = inverse(block(B, I, J));
  if (!Bt_inv) throw std::invalid_argument("B restricted to I x J is singular");
  std::vector<int> Ipp = sorted_union(I, spec.Ip), Jpp = sorted_union(J, spec.Jp);
  std::vector<int> Ip = spec.Ip, Jp = spec.Jp;
  std::sort(Ip.begin(), Ip.end());
  std::sort(Jp.begin(), Jp.end());
  if (spec.a.size() != (n - Ipp.size()) * Ip.size()) throw std::invalid_argument("wrong number of constants a'");
  if (spec.b.size() != (n - Jpp.size()) * Jp.size()) throw std::invalid_argument("wrong number of constants b'");

  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  // rows: B_i. = sum_{i1 in I} a(i, i1) B_i1. ; columns: B_.j = sum_{j1 in J} b(j1, j) B_.j1
  Mat arow = block(B, all, J) * *Bt_inv; // n x |I|
  Mat bcol = *Bt_inv * block(B, I, all); // |J| x n
  auto pos = [](const std::vector<int> &s, int x) { return (std::size_t)(std::find(s.begin(), s.end(), x) - s.begin()); };
  auto in = [](const std::vector<int> &s, int x) { return std::find(s.begin(), s.end(), x) != s.end(); };

  Realization R;
  R.I = I, R.Ip = Ip, R.J = J, R.Jp = Jp;
  R.a_ext = Mat(n, n);
  R.b_ext = Mat(n, n);
  std::size_t ka = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (in(Ipp, (int)i)) {
      R.a_ext(i, i) = 1;
      continue;
    }
    for (int i1 : Ip) R.a_ext(i, i1) = spec.a[ka++];
    for (int i2 : I) {
      ExactNumber s = arow(i, pos(I, i2));
      for (int i1 : Ip) s -= R.a_ext(i, i1) * arow(i1, pos(I, i2));
      R.a_ext(i, i2) = s;
    }
  }
  std::size_t kb = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (in(Jpp, (int)j)) {
      R.b_ext(j, j) = 1;
      continue;
    }
    for (int j1 : Jp) R.b_ext(j1, j) = spec.b[kb++];
    for (int j2 : J) {
      ExactNumber s = bcol(pos(J, j2), j);
      for (int j1 : Jp) s -= bcol(pos(J, j2), j1) * R.b_ext(j1, j);
      R.b_ext(j2, j) = s;
    }
  }

  std::size_t D = Ipp.size() + Jp.size();
  R.dim = D;
  R.v.assign(n, Vec(D));
  R.vdual.assign(n, Vec(D));
  for (int j : Jpp) {
    for (int i1 : Ipp) R.v[j][pos(Ipp, i1)] = B(i1, j);
    if (in(Jp, j)) R.v[j][Ipp.size() + pos(Jp, j)] = 1;
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (in(Jpp, (int)j)) continue;
    for (int j1 : Jpp)
      for (std::size_t k = 0; k < D; ++k) R.v[j][k] += R.b_ext(j1, j) * R.v[j1][k];
  }
  for (std::size_t i = 0; i < n; ++i)
    for (int i1 : Ipp) R.vdual[i][pos(Ipp, i1)] = R.a_ext(i, i1);

  R.to_construction = Mat::identity(D);
  if (!construction_basis) {
    Mat P(D, D);
    std::size_t c = 0;
    for (int j : Jpp) {
      for (std::size_t k = 0; k < D; ++k) P(k, c) = R.v[j][k];
      ++c;
    }
    for (int i : Ip) P(pos(Ipp, i), c++) = 1;
    auto Pinv = inverse(P);
    if (!Pinv) throw std::logic_error("vector basis is degenerate");
    for (auto &x : R.v) x = *Pinv * x;
    for (auto &y : R.vdual) {
      Vec z(D);
      for (std::size_t col = 0; col < D; ++col)
        for (std::size_t k = 0; k < D; ++k)
          if (!y[k].is_zero() && !P(k, col).is_zero()) z[col] += y[k] * P(k, col);
      y = std::move(z);
    }
    R.to_construction = P;
  }
  return R;
}

Realization unique_realization(const ArrangementMatrix &b) {
  if (det(b.mat()).is_zero()) throw std::invalid_argument("unique realization needs a non-degenerate matrix");
  RealizationSpec s;
  s.I.resize(b.n());
  std::iota(s.I.begin(), s.I.end(), 0);
  s.J = s.I;
  return general_realization(b, s);
}

Realization minimal_realization(const ArrangementMatrix &b) {
  RealizationSpec s;
  s.I = s.J = first_basis(b);
  return general_realization(b, s);
}

bool gram_matches(const Realization &r, const ArrangementMatrix &b) { return r.gram() == b.mat(); }

bool is_minimal(const Realization &r) {
  std::size_t n = r.size(), D = r.dim;
  Mat cov(n, D), vec(D, n), vecT(n, D);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < D; ++k) {
      cov(i, k) = r.vdual[i][k];
      vec(k, i) = vecT(i, k) = r.v[i][k];
    }
  long rv = rank(vec), rc = rank(cov);
  Mat kv = kernel(cov); // vectors annihilated by every covector
  for (std::size_t c = 0; c < kv.cols(); ++c) {
    Mat ext(D, n + 1);
    for (std::size_t k = 0; k < D; ++k) {
      for (std::size_t i = 0; i < n; ++i) ext(k, i) = vec(k, i);
      ext(k, n) = kv(k, c);
    }
    if (rank(ext) != rv) return false;
  }
  Mat kc = kernel(vecT); // covectors vanishing on every vector
  for (std::size_t c = 0; c < kc.cols(); ++c) {
    Mat ext(n + 1, D);
    for (std::size_t k = 0; k < D; ++k) {
      for (std::size_t i = 0; i < n; ++i) ext(i, k) = cov(i, k);
      ext(n, k) = kc(k, c);
    }
    if (rank(ext) != rc) return false;
  }
  return true;
}

Mat quasicox_degenerate(const ArrangementMatrix &bm, const Realization &r) {
  const Mat &B = bm.mat();
  std::size_t n = bm.n();
  if (r.size() != n) throw std::invalid_argument("realization does not match the matrix");
  auto [U, V] = split_UV(bm);
  Mat X = r.b_ext * unipotent_inverse(U) * r.a_ext; // b'(d+U)^{-1}a'
  Mat Y = B * X;
  std::vector<int> Ipp = sorted_union(r.I, r.Ip);
  std::size_t D = Ipp.size() + r.Jp.size();
  Mat M(D, D);
  for (std::size_t p = 0; p < Ipp.size(); ++p)
    for (std::size_t q = 0; q < Ipp.size(); ++q) M(p, q) = ExactNumber(p == q ? 1 : 0) - Y(Ipp[p], Ipp[q]);
  for (std::size_t w = 0; w < r.Jp.size(); ++w) {
    M(Ipp.size() + w, Ipp.size() + w) = 1;
    for (std::size_t q = 0; q < Ipp.size(); ++q) M(Ipp.size() + w, q) = -X(r.Jp[w], Ipp[q]);
  }
  auto Pinv = inverse(r.to_construction);
  return *Pinv * M * r.to_construction;
}

Angle Angle::make(long p, long q) {
  if (q <= 0) throw std::invalid_argument("angle denominator must be positive");
  long g = std::gcd(p, q);
  p /= g, q /= g;
  p %= 2 * q;
  if (p < 0) p += 2 * q;
  return Angle{p, q};
}

ExactNumber Angle::two_cos() const { return hw::two_cos(p, q); }

Angle operator+(Angle a, Angle b) { return Angle::make(a.p * b.q + b.p * a.q, a.q * b.q); }
Angle operator-(Angle a, Angle b) { return Angle::make(a.p * b.q - b.p * a.q, a.q * b.q); }

ArrangementMatrix degenerate_3x3(Angle alpha, Angle beta) {
  ExactNumber a = alpha.two_cos(), b = beta.two_cos(), c = (alpha - beta).two_cos();
  return ArrangementMatrix::from_rows({{2, a, b}, {a, 2, c}, {b, c, 2}});
}

std::pair<Angle, Angle> braid_on_params(Angle alpha, Angle beta, int i, int e) {
  if (i == 1) return e > 0 ? std::pair{alpha, alpha + beta} : std::pair{alpha, beta - alpha};
  if (i == 2) return e > 0 ? std::pair{alpha + alpha - beta, alpha} : std::pair{beta, beta + beta - alpha};
  throw std::out_of_range("braid generator index out of range");
}

bool is_redundant(const ArrangementMatrix &b, std::size_t i, std::size_t budget) {
  if (i >= b.n()) throw std::out_of_range("reflection index out of range");
  Realization R = minimal_realization(b);
  auto enc = [](const Vec &x) {
    std::string s;
    for (auto &c : x) s += c.encode() + '|';
    return s;
  };
  std::vector<Mat> refl;
  std::vector<Vec> orbit;
  std::unordered_set<std::string> seen;
  for (std::size_t j = 0; j < b.n(); ++j) {
    if (j == i) continue;
    refl.push_back(R.reflection(j));
    if (seen.insert(enc(R.v[j])).second) orbit.push_back(R.v[j]);
  }
  Vec target = R.v[i], neg = R.v[i];
  for (auto &c : neg) c = -c;
  std::string t1 = enc(target), t2 = enc(neg);
  for (std::size_t h = 0; h < orbit.size(); ++h) {
    if (seen.count(t1) || seen.count(t2)) return true;
    for (auto &m : refl) {
      Vec y = m * orbit[h];
      if (seen.insert(enc(y)).second) {
        if (orbit.size() >= budget) throw std::runtime_error("root orbit exceeds budget; membership undecided");
        orbit.push_back(std::move(y));
      }
    }
  }
  return seen.count(t1) || seen.count(t2);
}

Mat reflection_word(const Realization &r, const std::vector<int> &word) {
  Mat p = Mat::identity(r.dim);
  for (int k : word) {
    if (k < 1 || (std::size_t)k > r.size()) throw std::out_of_range("reflection index out of range");
    p = p * r.reflection(k - 1);
  }
  return p;
}

} // namespace hw
