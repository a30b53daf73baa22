#include "hurwitz/catalog.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>
#include <regex>
#include <set>
#include <stdexcept>

namespace hw {

extern const char *const kFixturesJson;

namespace {

std::string encode_vec(const Vec &v) {
  std::string s;
  for (auto &x : v) s += x.encode();
  return s;
}

ExactNumber dot(const Vec &a, const Vec &b) {
  ExactNumber s;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (!a[k].is_zero() && !b[k].is_zero()) s += a[k] * b[k];
  return s;
}

Vec unit(int d, int i, long s = 1) {
  Vec v(d);
  v[i] = ExactNumber(s);
  return v;
}

Vec add(const Vec &a, const Vec &b) {
  Vec c = a;
  for (std::size_t k = 0; k < c.size(); ++k) c[k] += b[k];
  return c;
}

Vec neg(const Vec &a) {
  Vec c = a;
  for (auto &x : c) x = -x;
  return c;
}

void add_pm(std::vector<Vec> &out, const Vec &v) {
  out.push_back(v);
  out.push_back(neg(v));
}

std::vector<Vec> roots_D(int n) {
  std::vector<Vec> r;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      add_pm(r, add(unit(n, i), unit(n, j)));
      add_pm(r, add(unit(n, i), unit(n, j, -1)));
    }
  return r;
}

std::vector<Vec> roots_E8() {
  std::vector<Vec> r = roots_D(8);
  mpq_class h(1, 2);
  for (int mask = 0; mask < 256; ++mask) {
    if (__builtin_popcount(mask) % 2) continue;
    Vec v(8);
    for (int k = 0; k < 8; ++k) v[k] = ExactNumber((mask >> k) & 1 ? mpq_class(-h) : h);
    r.push_back(v);
  }
  return r;
}

std::vector<Vec> even_perms_signed(const Vec &base) {
  // base has length 3 or 4; even permutations of positions, all sign patterns of nonzero entries
  std::vector<Vec> out;
  std::size_t d = base.size();
  std::vector<int> p(d);
  std::iota(p.begin(), p.end(), 0);
  std::set<std::string> seen;
  do {
    int inv = 0;
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = a + 1; b < d; ++b) inv += p[a] > p[b];
    if (inv % 2) continue;
    for (int mask = 0; mask < (1 << d); ++mask) {
      Vec v(d);
      bool ok = true;
      for (std::size_t k = 0; k < d; ++k) {
        v[k] = base[p[k]];
        if ((mask >> k) & 1) {
          if (v[k].is_zero()) ok = false;
          v[k] = -v[k];
        }
      }
      if (ok && seen.insert(encode_vec(v)).second) out.push_back(v);
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

struct Parsed {
  char family;
  int n;
};

Parsed parse_type(const std::string &t) {
  static const std::regex re(R"(^([ABDEFHI])(\d+)(?:\((\d+)\))?$)");
  std::smatch m;
  if (!std::regex_match(t, m, re)) throw std::invalid_argument("unknown root system type '" + t + "'");
  char f = m[1].str()[0];
  int n = std::stoi(m[2]);
  if (f == 'I') {
    if (n != 2 || !m[3].matched) throw std::invalid_argument("dihedral type must be written I2(m)");
    int mm = std::stoi(m[3]);
    if (mm < 3) throw std::invalid_argument("I2(m) needs m >= 3");
    return {f, mm};
  }
  if (m[3].matched) throw std::invalid_argument("unknown root system type '" + t + "'");
  bool ok = (f == 'A' && n >= 1) || (f == 'B' && n >= 2) || (f == 'D' && n >= 4) ||
            (f == 'E' && n >= 6 && n <= 8) || (f == 'F' && n == 4) || (f == 'H' && (n == 3 || n == 4));
  if (!ok || n > 16) throw std::invalid_argument("unsupported root system type '" + t + "'");
  return {f, n};
}

std::unique_ptr<RootSystem> build(const std::string &label) {
  auto [f, n] = parse_type(label);
  auto rs = std::make_unique<RootSystem>();
  rs->label = label;
  rs->family = f;
  rs->n = n;
  std::vector<Vec> &r = rs->roots;
  mpq_class half(1, 2);
  switch (f) {
  case 'A':
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j)
        if (i != j) r.push_back(add(unit(n + 1, i), unit(n + 1, j, -1)));
    rs->rank = n;
    break;
  case 'B':
    r = roots_D(n);
    for (int i = 0; i < n; ++i) add_pm(r, unit(n, i));
    rs->rank = n;
    break;
  case 'D':
    r = roots_D(n);
    rs->rank = n;
    break;
  case 'E': {
    auto e8 = roots_E8();
    Vec w(8, ExactNumber(half)); // a root; its orthogonal complement is E7
    Vec g = add(unit(8, 0, -1), unit(8, 1, -1)); // (w, g) = -1, together an A2
    for (auto &v : e8) {
      if (n <= 7 && !dot(v, w).is_zero()) continue;
      if (n == 6 && !dot(v, g).is_zero()) continue;
      r.push_back(v);
    }
    rs->rank = n;
    break;
  }
  case 'F':
    r = roots_D(4);
    for (int i = 0; i < 4; ++i) add_pm(r, unit(4, i));
    for (int mask = 0; mask < 16; ++mask) {
      Vec v(4);
      for (int k = 0; k < 4; ++k) v[k] = ExactNumber((mask >> k) & 1 ? mpq_class(-half) : half);
      r.push_back(v);
    }
    rs->rank = 4;
    break;
  case 'H': {
    ExactNumber phi = two_cos(1, 5), iphi = phi - ExactNumber(1), h(half);
    for (int i = 0; i < n; ++i) add_pm(r, unit(n, i));
    if (n == 3) {
      for (auto &v : even_perms_signed({h, h * phi, h * iphi})) r.push_back(v);
    } else {
      for (int mask = 0; mask < 16; ++mask) {
        Vec v(4);
        for (int k = 0; k < 4; ++k) v[k] = ExactNumber((mask >> k) & 1 ? mpq_class(-half) : half);
        r.push_back(v);
      }
      for (auto &v : even_perms_signed({h * phi, h, h * iphi, ExactNumber(0)})) r.push_back(v);
    }
    rs->rank = n;
    break;
  }
  case 'I':
    for (int k = 0; k < 2 * n; ++k) {
      ExactNumber c = two_cos(k, n) * ExactNumber(half);
      ExactNumber s = two_cos(n - 2 * k, 2 * n) * ExactNumber(half);
      r.push_back({c, s});
    }
    rs->rank = 2;
    break;
  }
  rs->dim = (int)r[0].size();
  for (std::size_t i = 0; i < r.size(); ++i) {
    auto [it, fresh] = rs->index_.emplace(encode_vec(r[i]), (int)i);
    if (!fresh) throw std::logic_error("duplicate root in " + label);
  }
  std::size_t R = r.size();
  rs->neg.resize(R);
  rs->norm2.resize(R);
  for (std::size_t i = 0; i < R; ++i) {
    rs->neg[i] = rs->find_root(neg(r[i]));
    if (rs->neg[i] < 0) throw std::logic_error("root system not symmetric: " + label);
    rs->norm2[i] = dot(r[i], r[i]);
  }
  // generic functional: rational part orders the coordinates, square roots break ties
  static const int primes[] = {2, 3, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61};
  std::vector<double> fv(R);
  for (std::size_t i = 0; i < R; ++i) {
    double s = 0;
    for (int k = 0; k < rs->dim; ++k) s += r[i][k].to_double() * (10.0 * (rs->dim - k) + std::sqrt((double)primes[k]) / 10);
    fv[i] = s;
  }
  rs->refl_of_root.assign(R, -1);
  for (std::size_t i = 0; i < R; ++i)
    if (fv[i] > 0) {
      rs->refl_of_root[i] = rs->refl_of_root[rs->neg[i]] = (int)rs->positive.size();
      rs->positive.push_back((int)i);
    }
  for (int a : rs->positive) {
    Perm p(R);
    ExactNumber inv_n = ExactNumber(2) / rs->norm2[a];
    for (std::size_t b = 0; b < R; ++b) {
      ExactNumber c = dot(r[a], r[b]);
      if (c.is_zero()) {
        p[b] = (std::uint16_t)b;
        continue;
      }
      c *= inv_n;
      Vec img = r[b];
      for (int k = 0; k < rs->dim; ++k)
        if (!r[a][k].is_zero()) img[k] -= c * r[a][k];
      int j = rs->find_root(img);
      if (j < 0) throw std::logic_error("root system not closed under reflection: " + label);
      p[b] = (std::uint16_t)j;
    }
    rs->refl_perm.push_back(std::move(p));
  }
  // simple reflections send exactly one positive root to a negative one
  std::vector<int> simple;
  for (std::size_t t = 0; t < rs->positive.size(); ++t) {
    int flips = 0;
    for (int b : rs->positive)
      if (fv[rs->refl_perm[t][b]] < 0) ++flips;
    if (flips == 1) simple.push_back((int)t);
  }
  if ((int)simple.size() != rs->rank) throw std::logic_error("simple system has wrong size in " + label);
  // order: walk a longest path of the diagram from its preferred end, then the rest
  auto root = [&](int t) { return rs->positive[t]; };
  int k = (int)simple.size();
  std::vector<std::vector<int>> adj(k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      if (a != b && !dot(r[root(simple[a])], r[root(simple[b])]).is_zero()) adj[a].push_back(b);
  auto farthest = [&](int s, std::vector<int> &par) {
    std::vector<int> dist(k, -1);
    par.assign(k, -1);
    std::vector<int> q{s};
    dist[s] = 0;
    for (std::size_t h = 0; h < q.size(); ++h)
      for (int v : adj[q[h]])
        if (dist[v] < 0) {
          dist[v] = dist[q[h]] + 1;
          par[v] = q[h];
          q.push_back(v);
        }
    return (int)(std::max_element(dist.begin(), dist.end()) - dist.begin());
  };
  std::vector<int> par;
  int e1 = farthest(0, par);
  int e2 = farthest(e1, par);
  std::vector<int> path;
  for (int v = e2; v >= 0; v = par[v]) path.push_back(v);
  auto prefer = [&](int a, int b) {
    int c = compare(rs->norm2[root(simple[a])], rs->norm2[root(simple[b])]);
    if (c != 0) return rs->norm2[root(simple[a])].to_double() > rs->norm2[root(simple[b])].to_double();
    return fv[root(simple[a])] > fv[root(simple[b])];
  };
  if (path.size() > 1 && prefer(path.back(), path.front())) std::reverse(path.begin(), path.end());
  std::vector<bool> used(k, false);
  for (int v : path) used[v] = true;
  for (int v = 0; v < k; ++v)
    if (!used[v]) path.push_back(v);
  for (int v : path) rs->simple.push_back(simple[v]);

  Mat gram(k, k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) gram(a, b) = dot(r[root(rs->simple[a])], r[root(rs->simple[b])]);
  auto gi = inverse(gram);
  if (!gi) throw std::logic_error("simple roots dependent in " + label);
  rs->coords.resize(R);
  for (std::size_t i = 0; i < R; ++i) {
    Vec b(k);
    for (int a = 0; a < k; ++a) b[a] = dot(r[root(rs->simple[a])], r[i]);
    rs->coords[i] = (*gi) * b;
  }
  return rs;
}

} // namespace

ExactNumber RootSystem::inner(int a, int b) const { return dot(roots[a], roots[b]); }

int RootSystem::find_root(const Vec &v) const {
  auto it = index_.find(encode_vec(v));
  return it == index_.end() ? -1 : it->second;
}

int RootSystem::length_classes() const {
  std::set<std::string> s;
  for (auto &x : norm2) s.insert(x.encode());
  return (int)s.size();
}

Mat RootSystem::perm_matrix(const Perm &w) const {
  Mat m(rank, rank);
  for (int k = 0; k < rank; ++k) {
    const Vec &c = coords[w[positive[simple[k]]]];
    for (int i = 0; i < rank; ++i) m(i, k) = c[i];
  }
  return m;
}

Mat RootSystem::reflection_matrix(int refl) const { return perm_matrix(refl_perm.at(refl)); }

Perm RootSystem::product(const std::vector<int> &refls) const {
  Perm p = perm_identity(num_roots());
  for (int t : refls) p = perm_mul(p, refl_perm.at(t));
  return p;
}

ArrangementMatrix RootSystem::arrangement(const std::vector<int> &refls) const {
  std::size_t n = refls.size();
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) {
        m(i, j) = 2;
        continue;
      }
      int a = positive.at(refls[i]), b = positive.at(refls[j]);
      ExactNumber ip = inner(a, b);
      if (ip.is_zero()) continue;
      const ExactNumber &na = norm2[a], &nb = norm2[b];
      if (na == nb) m(i, j) = ExactNumber(2) * ip / na;
      else m(i, j) = ExactNumber(2) * ip / sqrt_rational((na * nb).rational());
    }
  return ArrangementMatrix(std::move(m));
}

const RootSystem &root_system(const std::string &type) {
  static std::mutex mu;
  static std::map<std::string, std::unique_ptr<RootSystem>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(type);
  if (it != cache.end()) return *it->second;
  auto rs = build(type);
  auto &ref = *rs;
  cache.emplace(type, std::move(rs));
  return ref;
}

std::vector<int> closure_roots(const RootSystem &r, const std::vector<int> &seed) {
  std::vector<char> in(r.num_roots(), 0);
  std::vector<int> out;
  std::vector<int> gens;
  for (int s : seed) {
    if (s < 0 || (std::size_t)s >= r.num_roots()) throw std::out_of_range("root index out of range");
    gens.push_back(r.refl_of_root[s]);
    for (int x : {s, r.neg[s]})
      if (!in[x]) {
        in[x] = 1;
        out.push_back(x);
      }
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (std::size_t h = 0; h < out.size(); ++h)
    for (int g : gens) {
      int y = r.refl_perm[g][out[h]];
      if (!in[y]) {
        in[y] = 1;
        out.push_back(y);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::string identify_irreducible(int rank, std::size_t count, int lc) {
  auto s = [](char f, long n) { return std::string(1, f) + std::to_string(n); };
  if (count == 2 && rank == 1) return "A1";
  if (rank == 2) {
    if (count == 6 && lc == 1) return "A2";
    if (count == 8 && lc == 2) return "B2";
    if (count == 12 && lc == 2) return "G2";
    if (lc == 1) return "I2(" + std::to_string(count / 2) + ")";
  }
  if (lc == 2) {
    if (rank == 4 && count == 48) return "F4";
    if (count == (std::size_t)(2 * rank * rank)) return s('B', rank);
  }
  if (lc == 1) {
    if (count == (std::size_t)(rank * (rank + 1))) return s('A', rank);
    if (rank >= 4 && count == (std::size_t)(2 * rank * (rank - 1))) return s('D', rank);
    if (rank == 6 && count == 72) return "E6";
    if (rank == 7 && count == 126) return "E7";
    if (rank == 8 && count == 240) return "E8";
    if (rank == 3 && count == 30) return "H3";
    if (rank == 4 && count == 120) return "H4";
  }
  return "?(" + std::to_string(rank) + "," + std::to_string(count) + ")";
}

ClosureResult reflection_closure(const RootSystem &r, const std::vector<int> &seed) {
  ClosureResult res;
  res.roots = closure_roots(r, seed);
  // split into mutually orthogonal irreducible components
  std::vector<int> comp(res.roots.size(), -1);
  std::vector<std::string> labels;
  int ncomp = 0;
  for (std::size_t s = 0; s < res.roots.size(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<std::size_t> members{s};
    comp[s] = ncomp;
    for (std::size_t h = 0; h < members.size(); ++h)
      for (std::size_t t = 0; t < res.roots.size(); ++t)
        if (comp[t] < 0 && !r.inner(res.roots[members[h]], res.roots[t]).is_zero()) {
          comp[t] = ncomp;
          members.push_back(t);
        }
    Mat m(members.size(), r.rank);
    std::set<std::string> lens;
    for (std::size_t i = 0; i < members.size(); ++i) {
      int x = res.roots[members[i]];
      for (int c = 0; c < r.rank; ++c) m(i, c) = r.coords[x][c];
      lens.insert(r.norm2[x].encode());
    }
    int rk = (int)rank(m);
    res.rank += rk;
    labels.push_back(identify_irreducible(rk, members.size(), (int)lens.size()));
    ++ncomp;
  }
  std::sort(labels.begin(), labels.end(), [](const std::string &a, const std::string &b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a > b;
  });
  for (std::size_t i = 0; i < labels.size(); ++i) res.identification += (i ? "x" : "") + labels[i];
  return res;
}

std::vector<std::pair<std::string, std::string>> same_rank_inclusions() {
  std::vector<std::pair<std::string, std::string>> t = {
      {"D_n", "B_n"},          {"D4", "B4"},          {"B4", "F4"},           {"D4", "F4"},
      {"D8", "E8"},            {"A8", "E8"},          {"A7", "E7"},           {"A1xA1", "B2"},
      {"D_kxB_{n-k}", "B_n"},  {"A1xA1xA1", "B3"},    {"B_kxB_{n-k}", "B_n"}, {"B_nxA1", "B_{n+1}"},
      {"A1^4", "D4"},          {"D_kxD_{n-k}", "D_n"}, {"A1xA5", "E6"},        {"A2xA2xA2", "E6"},
      {"A1xA3xA3", "E7"},      {"A2xA5", "E7"},       {"A1xD5", "E7"},        {"A1xA2xA5", "E8"},
      {"A1xA7", "E8"},         {"A4xA4", "E8"},       {"A3xD5", "E8"},        {"A1xE7", "E8"},
      {"A1xA1xA1", "H3"},      {"A1xH3", "H4"},       {"I2(5)xI2(5)", "H4"},  {"A2xA2", "H4"},
  };
  return t;
}

std::vector<std::string> inclusions_into(const std::string &super) {
  std::vector<std::string> out;
  char f = super.empty() ? 0 : super[0];
  for (auto &[sub, sup] : same_rank_inclusions()) {
    if (sup == super) out.push_back(sub);
    else if (sup == "B_n" && f == 'B') {
      std::string n = super.substr(1);
      if (sub == "D_n") out.push_back("D" + n);
    }
  }
  return out;
}

ArrangementMatrix gamma0_A(int n) { return ArrangementMatrix::uniform(n, ExactNumber(1)); }

ArrangementMatrix gamma0_D(int n) {
  ArrangementMatrix b = gamma0_A(n);
  b.set(0, n - 1, ExactNumber(0));
  return b;
}

ArrangementMatrix gamma0_B(int n) {
  Mat m(n, n);
  ExactNumber s2 = two_cos(1, 4);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = i == j ? ExactNumber(2) : (i == n - 1 || j == n - 1 ? s2 : ExactNumber(1));
  return ArrangementMatrix(std::move(m));
}

std::vector<int> a1_vector(int m, int p, int q) {
  if (p < 0 || q < 0 || p + q > m) throw std::invalid_argument("a1 needs p, q >= 0 and p + q <= length");
  std::vector<int> a(m - p - q, 0);
  a.insert(a.end(), q, -1);
  a.insert(a.end(), p, 1);
  return a;
}

namespace {

// [[B, cols...],[cols^T, corner]]
ArrangementMatrix bordered(const ArrangementMatrix &b, const std::vector<Vec> &cols, const std::vector<Vec> &corner) {
  std::size_t m = b.n(), k = cols.size();
  Mat out(m + k, m + k);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) out(i, j) = b(i, j);
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t i = 0; i < m; ++i) out(i, m + c) = out(m + c, i) = cols[c][i];
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t c = 0; c < k; ++c) out(m + a, m + c) = corner[a][c];
  return ArrangementMatrix(std::move(out));
}

Vec ints(const std::vector<int> &v) {
  Vec out;
  for (int x : v) out.emplace_back((long)x);
  return out;
}

Vec fill(std::size_t n, const ExactNumber &x) { return Vec(n, x); }

} // namespace

ArrangementMatrix extension_matrix(const ExtensionSpec &s) {
  int n = s.n;
  ExactNumber s2 = two_cos(1, 4), z(0), two(2), one(1);
  const std::string &f = s.family;
  if (f == "AK") { // B(A_n, k): last k vertices joined
    if (n < 1 || s.k < 0 || s.k > n) throw std::invalid_argument("B(A_n,k) needs 0 <= k <= n");
    Vec col(n, z);
    for (int j = n - s.k; j < n; ++j) col[j] = 1;
    return bordered(gamma0_A(n), {col}, {{two}});
  }
  if (f == "A1") // Gamma0(A_n) bordered by a_1
    return bordered(gamma0_A(n), {ints(a1_vector(n, s.p, s.q))}, {{two}});
  if (f == "E1" || f == "E2") { // Gamma0(D_n) plus v' on k middle vertices (and vertex n for E2)
    if (n < 3 || s.k < 0 || s.k > n - 2) throw std::invalid_argument("D_n extension needs 0 <= k <= n-2");
    Vec col(n, z);
    for (int j = n - 1 - s.k; j < n - 1; ++j) col[j] = 1;
    if (f == "E2") col[n - 1] = 1;
    return bordered(gamma0_D(n), {col}, {{two}});
  }
  if (f == "B1" || f == "B2" || f == "B3") {
    int m = n - 1; // B_1 is Gamma0(A_{n-1}); [[B_1,b_1],[b_1^T,2]] = Gamma0(B_n)
    if (m < 1) throw std::invalid_argument("B_n extension needs n >= 2");
    ArrangementMatrix b1 = gamma0_A(m);
    Vec bb = fill(m, s2);
    if (f == "B1") return bordered(b1, {bb, ints(a1_vector(m, s.p, s.q))}, {{two, z}, {z, two}});
    if (f == "B2") {
      if (s.p < 0 || s.p > m) throw std::invalid_argument("b_2 needs 0 <= p <= n-1");
      Vec b2(m, z);
      for (int j = 0; j < s.p; ++j) b2[j] = s2;
      return bordered(b1, {bb, b2}, {{two, one}, {one, two}});
    }
    return bordered(b1, {bb, fill(m, one)}, {{two, s2}, {s2, two}});
  }
  if (f.rfind("Dext", 0) == 0 && f.size() == 5) {
    int c = f[4] - '0';
    if (c < 1 || c > 6) throw std::invalid_argument("unknown extension family " + f);
    if (n < 4) throw std::invalid_argument("D_n extension needs n >= 4");
    static const int xy[7][2] = {{0, 0}, {0, 0}, {0, 1}, {1, 0}, {1, 1}, {-1, 1}, {-1, -1}};
    int m = n - 2;
    auto a = a1_vector(m, s.p, s.q);
    // order: v_0, the B_1 block, v_n, v_{n+1}
    Mat out(n + 1, n + 1);
    for (int i = 0; i <= n; ++i) out(i, i) = 2;
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j)
        if (i != j) out(1 + i, 1 + j) = 1;
      out(0, 1 + i) = out(1 + i, 0) = 1;
      out(n - 1, 1 + i) = out(1 + i, n - 1) = 1;
      out(n, 1 + i) = out(1 + i, n) = (long)a[i];
    }
    out(0, n) = out(n, 0) = (long)xy[c][0];
    out(n - 1, n) = out(n, n - 1) = (long)xy[c][1];
    return ArrangementMatrix(std::move(out));
  }
  throw std::invalid_argument("unknown extension family " + f);
}

ExactNumber extension_det_formula(const ExtensionSpec &s) {
  long n = s.n, k = s.k, p = s.p, q = s.q;
  const std::string &f = s.family;
  if (f == "AK") return 2 * (n + 1) - k * (n - k + 1);
  if (f == "A1") return (p - q) * (p - q) - (p + q) * (n + 1) + 2 * (n + 1);
  if (f == "E1") return 8 - 4 * k;
  if (f == "E2") return 8 - n;
  if (f == "B1") return 2 * (2 - p - q);
  if (f == "B2") return 4 - n;
  if (f == "B3") return 2;
  if (f == "Dext1") return 4 * (2 - p - q);
  if (f == "Dext2") return 8 - n - 8 * q;
  if (f == "Dext3") return 8 - n - 8 * p;
  if (f == "Dext4") return 4 * (3 + p - n - 3 * q);
  if (f == "Dext5") return 4 * (1 - p - q);
  if (f == "Dext6") return 4 * (3 + q - n - 3 * p);
  throw std::invalid_argument("unknown extension family " + f);
}

std::vector<ExtensionSpec> extension_sweep(const std::string &f, int nmax) {
  std::vector<ExtensionSpec> out;
  if (f == "AK") {
    for (int n = 1; n <= nmax; ++n)
      for (int k = 0; k <= n; ++k) out.push_back({f, n, k, 0, 0});
  } else if (f == "A1") {
    for (int n = 1; n <= nmax; ++n)
      for (int p = 0; p <= n; ++p)
        for (int q = 0; p + q <= n; ++q) out.push_back({f, n, 0, p, q});
  } else if (f == "E1" || f == "E2") {
    for (int n = 4; n <= nmax; ++n)
      for (int k = 0; k <= n - 2; ++k) out.push_back({f, n, k, 0, 0});
  } else if (f == "B1") {
    for (int n = 2; n <= nmax; ++n)
      for (int p = 0; p <= n - 1; ++p)
        for (int q = 0; p + q <= n - 1; ++q) out.push_back({f, n, 0, p, q});
  } else if (f == "B2") {
    for (int n = 2; n <= nmax; ++n)
      for (int p = 0; p <= n - 1; ++p) out.push_back({f, n, 0, p, 0});
  } else if (f == "B3") {
    for (int n = 2; n <= nmax; ++n) out.push_back({f, n, 0, 0, 0});
  } else if (f.rfind("Dext", 0) == 0) {
    for (int n = 4; n <= nmax; ++n)
      for (int p = 0; p <= n - 2; ++p)
        for (int q = 0; p + q <= n - 2; ++q) out.push_back({f, n, 0, p, q});
  } else {
    throw std::invalid_argument("unknown extension family " + f);
  }
  return out;
}

const std::vector<Fixture> &fixtures() {
  static const std::vector<Fixture> all = [] {
    std::vector<Fixture> v;
    auto j = nlohmann::json::parse(kFixturesJson);
    for (auto &e : j.at("fixtures")) {
      Fixture f;
      f.group = e.at("group").get<std::string>();
      f.bucket = e.at("bucket").get<std::string>();
      f.reflections = e.at("reflections").get<std::vector<int>>();
      f.note = e.value("note", "");
      v.push_back(std::move(f));
    }
    return v;
  }();
  return all;
}

std::vector<Fixture> fixtures_for(const std::string &group) {
  std::vector<Fixture> out;
  for (auto &f : fixtures())
    if (f.group == group) out.push_back(f);
  return out;
}

ArrangementMatrix universal_matrix(const std::string &type) {
  std::string t = type;
  int bucket = 1;
  if (auto c = type.find(':'); c != std::string::npos) {
    t = type.substr(0, c);
    bucket = std::stoi(type.substr(c + 1));
  }
  auto [f, n] = parse_type(t);
  if (type.find(':') == std::string::npos) {
    if (f == 'A') return gamma0_A(n);
    if (f == 'D') return gamma0_D(n);
    if (f == 'B') return gamma0_B(n);
  }
  auto fx = fixtures_for(t);
  if (fx.empty()) throw std::invalid_argument("no pinned representative for " + t);
  if (bucket < 1 || bucket > (int)fx.size()) throw std::out_of_range("bucket index out of range for " + t);
  return root_system(t).arrangement(fx[bucket - 1].reflections);
}

} // namespace hw
