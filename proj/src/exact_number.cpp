#include "hurwitz/exact_number.hpp"
#include "hurwitz/cyclotomic.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <unordered_map>

namespace hw {

namespace {

std::vector<long> prime_factors(long n) {
  std::vector<long> ps;
  for (long p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) ps.push_back(n);
  return ps;
}

// A subfield Q(zeta_d) of Q(zeta_m) together with what is needed to pull
// elements back into it.
struct Descent {
  long d = 1;
  long stride = 0; // nonzero when the subfield is spanned by every stride-th basis vector
  std::vector<long> rows;
  std::vector<std::vector<mpq_class>> sinv;  // inverse of the selected rows
  std::vector<std::vector<long>> emb;   // column j: image of zeta_d^j
};

struct Field {
  long m = 1, phi = 1;
  std::vector<long> pw; // pw[e * phi + i]: coefficient i of x^e mod Phi_m, e < m
  std::vector<Descent> descents;

  const long *power(long e) const {
    e %= m;
    if (e < 0) e += m;
    return &pw[e * phi];
  }
};

std::unique_ptr<Field> build_field(long m) {
  auto f = std::make_unique<Field>();
  f->m = m;
  f->phi = euler_phi(m);
  const long phi = f->phi;
  const auto &cyc = cyclotomic_poly(m);
  std::vector<long> c(cyc.size());
  for (std::size_t i = 0; i < cyc.size(); ++i) c[i] = cyc[i].get_si();

  f->pw.assign(m * phi, 0);
  std::vector<long> cur(phi, 0);
  cur[0] = 1;
  for (long e = 0; e < m; ++e) {
    std::copy(cur.begin(), cur.end(), f->pw.begin() + e * phi);
    // multiply by x, then replace x^phi by -(Phi_m - x^phi)
    long top = cur[phi - 1];
    for (long i = phi - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0)
      for (long i = 0; i < phi; ++i) {
        long t;
        if (__builtin_mul_overflow(top, c[i], &t) || __builtin_sub_overflow(cur[i], t, &cur[i]))
          throw std::overflow_error("cyclotomic reduction overflow");
      }
  }

  for (long p : prime_factors(m)) {
    Descent ds;
    ds.d = normalize_conductor(m / p);
    long phid = euler_phi(ds.d);
    if ((m / p) % p == 0 && ds.d == m / p) {
      ds.stride = p;
    } else {
      long step = m / ds.d;
      ds.emb.resize(phid);
      for (long j = 0; j < phid; ++j) {
        const long *v = f->power(j * step);
        ds.emb[j].assign(v, v + phi);
      }
      // pick independent rows of the phi x phid embedding matrix
      std::vector<std::vector<mpq_class>> a(phi, std::vector<mpq_class>(phid));
      for (long i = 0; i < phi; ++i)
        for (long j = 0; j < phid; ++j) a[i][j] = mpq_class(ds.emb[j][i]);
      std::vector<std::vector<mpq_class>> work = a;
      std::vector<long> rows;
      std::vector<std::vector<mpq_class>> basis; // reduced copies of chosen rows
      std::vector<long> pivcol;
      for (long i = 0; i < phi && (long)rows.size() < phid; ++i) {
        std::vector<mpq_class> r = work[i];
        for (std::size_t b = 0; b < basis.size(); ++b) {
          if (r[pivcol[b]] == 0) continue;
          mpq_class fct = r[pivcol[b]] / basis[b][pivcol[b]];
          for (long j = 0; j < phid; ++j) r[j] -= fct * basis[b][j];
        }
        long pc = -1;
        for (long j = 0; j < phid; ++j)
          if (r[j] != 0) {
            pc = j;
            break;
          }
        if (pc < 0) continue;
        rows.push_back(i);
        basis.push_back(r);
        pivcol.push_back(pc);
      }
      ds.rows = rows;
      // invert the square submatrix S = a[rows]
      long k = phid;
      std::vector<std::vector<mpq_class>> s(k, std::vector<mpq_class>(2 * k));
      for (long i = 0; i < k; ++i) {
        for (long j = 0; j < k; ++j) s[i][j] = a[rows[i]][j];
        s[i][k + i] = 1;
      }
      for (long col = 0; col < k; ++col) {
        long piv = col;
        while (s[piv][col] == 0) ++piv;
        std::swap(s[piv], s[col]);
        mpq_class inv = 1 / s[col][col];
        for (long j = 0; j < 2 * k; ++j) s[col][j] *= inv;
        for (long i = 0; i < k; ++i) {
          if (i == col || s[i][col] == 0) continue;
          mpq_class fct = s[i][col];
          for (long j = 0; j < 2 * k; ++j) s[i][j] -= fct * s[col][j];
        }
      }
      ds.sinv.assign(k, std::vector<mpq_class>(k));
      for (long i = 0; i < k; ++i)
        for (long j = 0; j < k; ++j) ds.sinv[i][j] = s[i][k + j];
    }
    f->descents.push_back(std::move(ds));
  }
  return f;
}

const Field &field(long m) {
  thread_local std::unordered_map<long, const Field *> local;
  auto it = local.find(m);
  if (it != local.end()) return *it->second;
  static std::mutex mu;
  static std::map<long, std::unique_ptr<Field>> reg;
  const Field *f;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto &slot = reg[m];
    if (!slot) slot = build_field(m);
    f = slot.get();
  }
  local.emplace(m, f);
  return *f;
}

// Coefficients of x at conductor m rewritten at conductor big (m | big).
std::vector<mpq_class> promote(long m, const std::vector<mpq_class> &c, long big) {
  if (m == big) return c;
  const Field &F = field(big);
  std::vector<mpq_class> out(F.phi);
  long step = big / m;
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j] == 0) continue;
    const long *v = F.power((long)j * step);
    for (long i = 0; i < F.phi; ++i)
      if (v[i]) out[i] += c[j] * v[i];
  }
  return out;
}

bool all_zero(const std::vector<mpq_class> &c) {
  for (auto &x : c)
    if (x != 0) return false;
  return true;
}

using QPoly = std::vector<mpq_class>;

void trim(QPoly &p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// p = q*d + r over Q
void poly_divmod(QPoly p, const QPoly &d, QPoly &q, QPoly &r) {
  trim(p);
  q.assign(p.size() >= d.size() ? p.size() - d.size() + 1 : 1, 0);
  mpq_class lead = d.back();
  while (p.size() >= d.size() && !p.empty()) {
    std::size_t shift = p.size() - d.size();
    mpq_class f = p.back() / lead;
    q[shift] = f;
    for (std::size_t i = 0; i < d.size(); ++i) p[i + shift] -= f * d[i];
    trim(p);
  }
  r = p;
}

QPoly poly_mul(const QPoly &a, const QPoly &b) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0)
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

QPoly poly_sub(QPoly a, const QPoly &b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

} // namespace

long euler_phi(long n) {
  long r = n;
  for (long p : prime_factors(n)) r = r / p * (p - 1);
  return r;
}

long normalize_conductor(long m) {
  if (m <= 0) throw std::invalid_argument("conductor must be positive");
  return m % 4 == 2 ? m / 2 : m;
}

ExactNumber::ExactNumber() : m_(1), c_{mpq_class(0)} {}
ExactNumber::ExactNumber(long v) : m_(1), c_{mpq_class(v)} {}
ExactNumber::ExactNumber(const mpq_class &q) : m_(1), c_{q} { c_[0].canonicalize(); }

ExactNumber::ExactNumber(long m, std::vector<mpq_class> c, bool red) : m_(m), c_(std::move(c)) {
  if (red) reduce();
}

ExactNumber ExactNumber::from_coeffs(long m, std::vector<mpq_class> coeffs) {
  long n = normalize_conductor(m);
  for (auto &x : coeffs) x.canonicalize();
  if (n != m) {
    // Q(zeta_m) = Q(zeta_{m/2}) for m = 2 mod 4; re-express via zeta_m = -zeta_n^((n+1)/2)
    ExactNumber acc;
    for (std::size_t j = 0; j < coeffs.size(); ++j)
      if (coeffs[j] != 0) acc += ExactNumber(coeffs[j]) * root_of_unity((long)j, m);
    return acc;
  }
  if ((long)coeffs.size() != euler_phi(n)) {
    // accept any length: interpret as a polynomial in zeta_n and reduce
    const Field &F = field(n);
    std::vector<mpq_class> out(F.phi);
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      if (coeffs[j] == 0) continue;
      const long *v = F.power((long)j);
      for (long i = 0; i < F.phi; ++i)
        if (v[i]) out[i] += coeffs[j] * v[i];
    }
    coeffs = std::move(out);
  }
  return ExactNumber(n, std::move(coeffs), true);
}

ExactNumber ExactNumber::root_of_unity(long k, long m) {
  if (m <= 0) throw std::invalid_argument("root of unity order must be positive");
  k %= m;
  if (k < 0) k += m;
  long sign = 1;
  long n = m;
  if (m % 4 == 2) {
    n = m / 2;
    if (k % 2) sign = -1;
    k = (k * ((n + 1) / 2)) % n;
  }
  const Field &F = field(n);
  const long *v = F.power(k);
  std::vector<mpq_class> c(F.phi);
  for (long i = 0; i < F.phi; ++i) c[i] = sign * v[i];
  return ExactNumber(n, std::move(c), true);
}

void ExactNumber::reduce() {
  for (;;) {
    if (m_ == 1) return;
    if (all_zero(c_)) {
      m_ = 1;
      c_.assign(1, mpq_class(0));
      return;
    }
    const Field &F = field(m_);
    bool moved = false;
    for (const Descent &ds : F.descents) {
      if (ds.stride) {
        bool ok = true;
        for (long j = 0; j < F.phi && ok; ++j)
          if (j % ds.stride && c_[j] != 0) ok = false;
        if (!ok) continue;
        std::vector<mpq_class> y(F.phi / ds.stride);
        for (std::size_t a = 0; a < y.size(); ++a) y[a] = c_[a * ds.stride];
        m_ = ds.d;
        c_ = std::move(y);
        moved = true;
        break;
      }
      long k = (long)ds.rows.size();
      std::vector<mpq_class> y(k);
      for (long i = 0; i < k; ++i)
        for (long j = 0; j < k; ++j)
          if (ds.sinv[i][j] != 0 && c_[ds.rows[j]] != 0) y[i] += ds.sinv[i][j] * c_[ds.rows[j]];
      bool ok = true;
      for (long i = 0; i < F.phi && ok; ++i) {
        mpq_class s = 0;
        for (long j = 0; j < k; ++j)
          if (ds.emb[j][i] && y[j] != 0) s += y[j] * ds.emb[j][i];
        if (s != c_[i]) ok = false;
      }
      if (!ok) continue;
      m_ = ds.d;
      c_ = std::move(y);
      moved = true;
      break;
    }
    if (!moved) return;
  }
}

bool ExactNumber::is_zero() const { return m_ == 1 && c_[0] == 0; }

const mpq_class &ExactNumber::rational() const {
  if (m_ != 1) throw std::domain_error("not a rational number");
  return c_[0];
}

bool ExactNumber::is_real() const { return m_ == 1 || conj() == *this; }

ExactNumber ExactNumber::operator-() const {
  ExactNumber r = *this;
  for (auto &x : r.c_) x = -x;
  return r;
}

ExactNumber &ExactNumber::operator+=(const ExactNumber &o) {
  if (m_ == o.m_) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    if (m_ != 1) reduce();
    return *this;
  }
  long big = std::lcm(m_, o.m_);
  std::vector<mpq_class> a = promote(m_, c_, big);
  std::vector<mpq_class> b = promote(o.m_, o.c_, big);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  m_ = big;
  c_ = std::move(a);
  reduce();
  return *this;
}

ExactNumber &ExactNumber::operator-=(const ExactNumber &o) { return *this += -o; }

ExactNumber &ExactNumber::operator*=(const ExactNumber &o) {
  if (o.m_ == 1) {
    if (o.c_[0] == 0) return *this = ExactNumber();
    for (auto &x : c_) x *= o.c_[0];
    return *this;
  }
  if (m_ == 1) {
    mpq_class s = c_[0];
    *this = o;
    if (s == 0) return *this = ExactNumber();
    for (auto &x : c_) x *= s;
    return *this;
  }
  long big = std::lcm(m_, o.m_);
  std::vector<mpq_class> a = promote(m_, c_, big);
  std::vector<mpq_class> b = promote(o.m_, o.c_, big);
  const Field &F = field(big);
  long phi = F.phi;
  std::vector<mpq_class> conv(2 * phi - 1);
  for (long i = 0; i < phi; ++i) {
    if (a[i] == 0) continue;
    for (long j = 0; j < phi; ++j)
      if (b[j] != 0) conv[i + j] += a[i] * b[j];
  }
  std::vector<mpq_class> out(conv.begin(), conv.begin() + phi);
  for (long e = phi; e < 2 * phi - 1; ++e) {
    if (conv[e] == 0) continue;
    const long *v = F.power(e);
    for (long i = 0; i < phi; ++i)
      if (v[i]) out[i] += conv[e] * v[i];
  }
  m_ = big;
  c_ = std::move(out);
  reduce();
  return *this;
}

ExactNumber ExactNumber::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (m_ == 1) return ExactNumber(mpq_class(1 / c_[0]));
  const auto &cyc = cyclotomic_poly(m_);
  QPoly r0(cyc.begin(), cyc.end()), r1 = c_;
  trim(r1);
  QPoly s0, s1{mpq_class(1)};
  while (r1.size() > 1) {
    QPoly q, r;
    poly_divmod(r0, r1, q, r);
    QPoly s2 = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  mpq_class c = r1[0];
  for (auto &x : s1) x /= c;
  QPoly q, rem;
  poly_divmod(s1, QPoly(cyc.begin(), cyc.end()), q, rem);
  rem.resize(euler_phi(m_));
  return ExactNumber(m_, std::move(rem), false);
}

ExactNumber &ExactNumber::operator/=(const ExactNumber &o) { return *this *= o.inverse(); }

ExactNumber ExactNumber::conj() const {
  if (m_ == 1) return *this;
  const Field &F = field(m_);
  std::vector<mpq_class> out(F.phi);
  for (long j = 0; j < F.phi; ++j) {
    if (c_[j] == 0) continue;
    const long *v = F.power(m_ - j);
    for (long i = 0; i < F.phi; ++i)
      if (v[i]) out[i] += c_[j] * v[i];
  }
  return ExactNumber(m_, std::move(out), false);
}

namespace {

void put_u32(std::string &s, std::size_t v) {
  for (int sh = 24; sh >= 0; sh -= 8) s.push_back(char((v >> sh) & 0xff));
}

void put_mag(std::string &s, const mpz_class &z) {
  std::size_t n = 0;
  std::vector<unsigned char> buf((mpz_sizeinbase(z.get_mpz_t(), 2) + 7) / 8 + 1);
  mpz_export(buf.data(), &n, 1, 1, 1, 0, z.get_mpz_t());
  put_u32(s, n);
  s.append(reinterpret_cast<const char *>(buf.data()), n);
}

int cmp_mag(const mpz_class &a, const mpz_class &b) {
  std::size_t la = mpz_sgn(a.get_mpz_t()) ? (mpz_sizeinbase(a.get_mpz_t(), 2) + 7) / 8 : 0;
  std::size_t lb = mpz_sgn(b.get_mpz_t()) ? (mpz_sizeinbase(b.get_mpz_t(), 2) + 7) / 8 : 0;
  if (la != lb) return la < lb ? -1 : 1;
  int c = mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t());
  return (c > 0) - (c < 0);
}

int sign_byte(const mpq_class &q) {
  int s = sgn(q);
  return s == 0 ? 0 : (s > 0 ? 1 : 2);
}

} // namespace

std::string ExactNumber::encode() const {
  std::string s;
  put_u32(s, (std::size_t)m_);
  for (const auto &q : c_) {
    int sb = sign_byte(q);
    s.push_back(char(sb));
    if (sb == 0) continue;
    put_mag(s, abs(q.get_num()));
    put_mag(s, q.get_den());
  }
  return s;
}

int compare(const ExactNumber &a, const ExactNumber &b) {
  if (a.m_ != b.m_) return a.m_ < b.m_ ? -1 : 1;
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    const mpq_class &x = a.c_[i], &y = b.c_[i];
    int sx = sign_byte(x), sy = sign_byte(y);
    if (sx != sy) return sx < sy ? -1 : 1;
    if (sx == 0) continue;
    if (int c = cmp_mag(x.get_num(), y.get_num())) return c;
    if (int c = cmp_mag(x.get_den(), y.get_den())) return c;
  }
  return 0;
}

std::size_t ExactNumber::hash() const { return std::hash<std::string>()(encode()); }

std::complex<double> ExactNumber::to_complex() const {
  long double re = 0, im = 0;
  const long double tau = 2 * 3.14159265358979323846264338327950288L;
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    long double v = c_[j].get_d();
    re += v * std::cos(tau * j / m_);
    im += v * std::sin(tau * j / m_);
  }
  return {(double)re, (double)im};
}

ExactNumber two_cos(long p, long q) {
  if (q < 1) throw std::invalid_argument("two_cos: q must be positive");
  return ExactNumber::root_of_unity(p, 2 * q) + ExactNumber::root_of_unity(-p, 2 * q);
}

ExactNumber sqrt_rational(const mpq_class &r) {
  if (r < 0) throw std::domain_error("sqrt of a negative rational");
  if (r == 0) return ExactNumber();
  // sqrt(a/b) = sqrt(a*b)/b
  mpz_class n = r.get_num() * r.get_den();
  mpz_class sq = 1, free = 1;
  for (unsigned long p = 2; mpz_class(p) * p <= n; ++p) {
    int e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      n /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) sq *= p;
    if (e % 2) free *= p;
    if (p > 100000) throw std::domain_error("sqrt: radicand too large");
  }
  free *= n;
  if (!free.fits_slong_p() || free > 1000)
    throw std::domain_error("sqrt(" + r.get_str() + ") needs a cyclotomic field beyond the supported conductor");
  long f = free.get_si();
  long cond = f % 4 == 1 ? f : 4 * f;
  if (cond > 4000) throw std::domain_error("sqrt(" + r.get_str() + "): conductor too large");
  ExactNumber acc(1);
  long rest = f;
  for (long p = 2; p <= rest; ++p) {
    if (rest % p) continue;
    rest /= p;
    if (p == 2) {
      acc *= two_cos(1, 4);
      continue;
    }
    // quadratic Gauss sum: g^2 = (-1)^((p-1)/2) p
    ExactNumber g;
    for (long k = 1; k < p; ++k) {
      mpz_class leg;
      mpz_class base(k), mod(p);
      mpz_powm_ui(leg.get_mpz_t(), base.get_mpz_t(), (p - 1) / 2, mod.get_mpz_t());
      g += ExactNumber::root_of_unity(k, p) * ExactNumber(leg == 1 ? 1L : -1L);
    }
    if (p % 4 == 3) g *= ExactNumber::root_of_unity(3, 4); // -i * g is real
    acc *= g;
  }
  if (acc.to_double() < 0) acc = -acc;
  return acc * ExactNumber(mpq_class(sq, r.get_den()));
}

namespace {

struct Parser {
  std::string_view s;
  std::size_t i = 0;

  void ws() {
    while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
  }
  bool eat(std::string_view t) {
    ws();
    if (s.substr(i, t.size()) == t) {
      i += t.size();
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string &msg) { throw ParseError(msg, i); }
  void expect(std::string_view t) {
    if (!eat(t)) fail("expected '" + std::string(t) + "'");
  }
  mpz_class digits() {
    ws();
    std::size_t b = i;
    while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
    if (b == i) fail("expected digits");
    return mpz_class(std::string(s.substr(b, i - b)));
  }
  mpz_class integer() {
    bool neg = eat("-");
    mpz_class z = digits();
    return neg ? mpz_class(-z) : z;
  }
  mpq_class rational(bool allow_sign) {
    bool neg = allow_sign && eat("-");
    mpz_class num = digits();
    mpz_class den = 1;
    ws();
    if (i < s.size() && s[i] == '/') {
      ++i;
      std::size_t at = i;
      den = digits();
      if (den == 0) throw ParseError("zero denominator", at);
    }
    mpq_class q(num, den);
    q.canonicalize();
    return neg ? mpq_class(-q) : q;
  }
  bool at_cosatom() {
    ws();
    return s.substr(i, 4) == "2cos" || s.substr(i, 4) == "sqrt";
  }
  ExactNumber cosatom() {
    ws();
    std::size_t at = i;
    if (eat("2cos")) {
      expect("(");
      expect("pi");
      expect("*");
      mpz_class p = integer();
      expect("/");
      std::size_t qat = i;
      mpz_class q = integer();
      expect(")");
      if (q == 0) throw ParseError("q must be nonzero", qat);
      if (q < 0) {
        q = -q;
        p = -p;
      }
      if (!p.fits_slong_p() || !q.fits_slong_p() || q > 100000) throw ParseError("2cos argument too large", qat);
      return two_cos(p.get_si(), q.get_si());
    }
    if (eat("sqrt")) {
      expect("(");
      std::size_t rat = i;
      mpq_class r = rational(false);
      expect(")");
      try {
        return sqrt_rational(r);
      } catch (const std::domain_error &e) {
        throw ParseError(e.what(), rat);
      }
    }
    throw ParseError("expected 2cos(...) or sqrt(...)", at);
  }
  ExactNumber term(bool negate) {
    ExactNumber v;
    if (at_cosatom()) {
      v = cosatom();
    } else {
      ws();
      bool neg = false;
      if (i < s.size() && s[i] == '-') {
        ++i;
        neg = true;
        if (at_cosatom()) {
          v = -cosatom();
          return negate ? -v : v;
        }
      }
      mpq_class r = rational(false);
      if (neg) r = -r;
      if (eat("*"))
        v = ExactNumber(r) * cosatom();
      else
        v = ExactNumber(r);
    }
    return negate ? -v : v;
  }
  ExactNumber expr() {
    ExactNumber acc = term(false);
    for (;;) {
      if (eat("+"))
        acc += term(false);
      else if (eat("-"))
        acc += term(true);
      else
        break;
    }
    ws();
    if (i != s.size()) fail("unexpected character");
    return acc;
  }
};

std::string frac(const mpq_class &q) { return q.get_str(); }

} // namespace

ExactNumber parse_expr(std::string_view text) {
  Parser p{text};
  return p.expr();
}

std::string format_expr(const ExactNumber &x) {
  if (x.is_rational()) return frac(x.rational());
  if (!x.is_real()) throw std::domain_error("format_expr: value is not real");
  long m = x.conductor();
  double v = x.to_double();
  for (long n : {m / 2, m, 2 * m}) {
    if (n < 2 || (n == m / 2 && m % 2)) continue;
    double t = std::acos(std::min(1.0, std::fabs(v) / 2)) / M_PI * n;
    long k = std::lround(t);
    if (k <= 0 || 2 * k >= n || std::gcd(k, n) != 1) continue;
    ExactNumber c = two_cos(k, n);
    std::string atom = "2cos(pi*" + std::to_string(k) + "/" + std::to_string(n) + ")";
    if (c == x) return atom;
    if (-c == x) return "-" + atom;
  }
  // x = c_0 + sum_j (c_j/2) 2cos(2 pi j/m), valid because x equals its conjugate
  mpq_class c0 = x.coeffs()[0];
  std::map<long, mpq_class> terms; // folded numerator a of 2cos(pi*a/m), 0 < a < m
  for (std::size_t j = 1; j < x.coeffs().size(); ++j) {
    mpq_class c = x.coeffs()[j] / 2;
    if (c == 0) continue;
    long a = 2 * (long)j;
    if (a > m) a = 2 * m - a;
    if (a == m) c0 -= 2 * c;
    else if (2 * a != m) terms[a] += c;
  }
  std::string out = c0 == 0 ? "" : frac(c0);
  for (auto &[a, c] : terms) {
    if (c == 0) continue;
    long g = std::gcd(a, m);
    std::string atom = "2cos(pi*" + std::to_string(a / g) + "/" + std::to_string(m / g) + ")";
    std::string mag = abs(c) == 1 ? atom : frac(abs(c)) + "*" + atom;
    if (out.empty())
      out = (c < 0 ? "-" : "") + mag;
    else
      out += (c < 0 ? " - " : " + ") + mag;
  }
  return out;
}

namespace {

std::string digits_string(const mpz_class &z, int digits) {
  std::string a = mpz_class(abs(z)).get_str();
  if ((int)a.size() <= digits) a.insert(0, digits - a.size() + 1, '0');
  if (digits > 0) a.insert(a.size() - digits, ".");
  return (z < 0 ? "-" : "") + a;
}

} // namespace

std::string approx(const ExactNumber &x, int digits) {
  if (digits < 0) throw std::invalid_argument("approx: digits must be non-negative");
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  if (x.is_rational()) {
    mpq_class t = abs(x.rational()) * scale + mpq_class(1, 2);
    mpz_class z;
    mpz_fdiv_q(z.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
    if (x.rational() < 0) z = -z;
    return digits_string(z, digits);
  }
  if (!x.is_real()) throw std::domain_error("approx: value is not real");
  const auto &c = x.coeffs();
  long m = x.conductor();
  mpq_class l1 = 1;
  for (auto &q : c) l1 += abs(q);
  for (mpfr_prec_t prec = 64 + 4 * digits;; prec *= 2) {
    mpfr_t sum, pi, ang, t, err, lo, hi;
    mpfr_inits2(prec, sum, pi, ang, t, err, lo, hi, (mpfr_ptr)0);
    mpfr_set_ui(sum, 0, MPFR_RNDN);
    mpfr_const_pi(pi, MPFR_RNDN);
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (c[j] == 0) continue;
      mpfr_mul_ui(ang, pi, 2 * j, MPFR_RNDN);
      mpfr_div_si(ang, ang, m, MPFR_RNDN);
      mpfr_cos(t, ang, MPFR_RNDN);
      mpfr_mul_q(t, t, c[j].get_mpq_t(), MPFR_RNDN);
      mpfr_add(sum, sum, t, MPFR_RNDN);
    }
    // generous bound on the accumulated rounding error
    mpfr_set_q(err, l1.get_mpq_t(), MPFR_RNDU);
    mpfr_mul_ui(err, err, (unsigned long)(c.size() + 2) * 256, MPFR_RNDU);
    mpfr_mul_2si(err, err, -(long)prec, MPFR_RNDU);
    mpfr_sub(lo, sum, err, MPFR_RNDD);
    mpfr_add(hi, sum, err, MPFR_RNDU);
    mpfr_mul_z(lo, lo, scale.get_mpz_t(), MPFR_RNDD);
    mpfr_mul_z(hi, hi, scale.get_mpz_t(), MPFR_RNDU);
    mpz_class zl, zh;
    mpfr_get_z(zl.get_mpz_t(), lo, MPFR_RNDN);
    mpfr_get_z(zh.get_mpz_t(), hi, MPFR_RNDN);
    mpfr_clears(sum, pi, ang, t, err, lo, hi, (mpfr_ptr)0);
    if (zl == zh) return digits_string(zl, digits);
    if (prec > 1 << 20) throw std::runtime_error("approx: refinement did not converge");
  }
}

} // namespace hw
