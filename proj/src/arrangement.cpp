#include "hurwitz/arrangement.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hw {

ArrangementMatrix::ArrangementMatrix(Mat m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw std::invalid_argument("arrangement matrix must be square");
  for (std::size_t i = 0; i < m_.rows(); ++i) {
    if (m_(i, i) != ExactNumber(2)) throw std::invalid_argument("arrangement matrix diagonal must be 2");
    for (std::size_t j = i + 1; j < m_.rows(); ++j)
      if (m_(i, j) != m_(j, i)) throw std::invalid_argument("arrangement matrix must be symmetric");
  }
}

ArrangementMatrix ArrangementMatrix::uniform(std::size_t n, const ExactNumber &v) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = i == j ? ExactNumber(2) : v;
  return unchecked(std::move(m));
}

void ArrangementMatrix::set(std::size_t i, std::size_t j, const ExactNumber &v) {
  if (i == j) throw std::invalid_argument("diagonal of an arrangement matrix is fixed");
  m_(i, j) = v;
  m_(j, i) = v;
}

std::string ArrangementMatrix::encode() const {
  std::string out;
  out.push_back((char)n());
  for (std::size_t i = 0; i < n(); ++i)
    for (std::size_t j = i + 1; j < n(); ++j) out += m_(i, j).encode();
  return out;
}

ArrangementMatrix apply_signs(const ArrangementMatrix &b, const SignVector &lambda) {
  Mat m = b.mat();
  for (std::size_t i = 0; i < b.n(); ++i)
    for (std::size_t j = 0; j < b.n(); ++j)
      if (i != j && lambda[i] * lambda[j] < 0) m(i, j) = -m(i, j);
  return ArrangementMatrix::unchecked(std::move(m));
}

namespace {

int lex_compare(const ArrangementMatrix &a, const ArrangementMatrix &b) {
  for (std::size_t i = 0; i < a.n(); ++i)
    for (std::size_t j = i + 1; j < a.n(); ++j)
      if (int c = compare(a(i, j), b(i, j))) return c;
  return 0;
}

} // namespace

ArrangementMatrix sign_canonical_exhaustive(const ArrangementMatrix &b) {
  std::size_t n = b.n();
  if (n > 20) throw std::invalid_argument("exhaustive sign search too large");
  ArrangementMatrix best = b;
  SignVector lam(n, 1);
  for (unsigned long mask = 1; mask < (1ul << (n ? n - 1 : 0)); ++mask) {
    for (std::size_t i = 1; i < n; ++i) lam[i] = (mask >> (i - 1)) & 1 ? -1 : 1;
    ArrangementMatrix c = apply_signs(b, lam);
    if (lex_compare(c, best) < 0) best = std::move(c);
  }
  return best;
}

// Greedy over upper-triangle entries in row-major order. An entry joining two
// sign components is free, so picking its smaller sign is lexicographically optimal.
ArrangementMatrix sign_canonical(const ArrangementMatrix &b) {
  std::size_t n = b.n();
  std::vector<int> parent(n), parity(n, 0);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    int p = 0;
    while (parent[x] != x) {
      p ^= parity[x];
      x = parent[x];
    }
    return std::pair<int, int>(x, p);
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const ExactNumber &v = b(i, j);
      if (v.is_zero()) continue;
      auto [ri, pi] = find((int)i);
      auto [rj, pj] = find((int)j);
      if (ri == rj) continue;
      int flip = compare(-v, v) < 0 ? 1 : 0; // wanted lambda_i * lambda_j parity
      // keep the component holding the smaller index as root so vertex 0 stays fixed
      if (ri < rj) {
        parent[rj] = ri;
        parity[rj] = pi ^ pj ^ flip;
      } else {
        parent[ri] = rj;
        parity[ri] = pi ^ pj ^ flip;
      }
    }
  SignVector lam(n);
  for (std::size_t i = 0; i < n; ++i) lam[i] = find((int)i).second ? -1 : 1;
  return apply_signs(b, lam);
}

ArrangementMatrix permute(const ArrangementMatrix &b, const std::vector<int> &perm) {
  std::size_t n = b.n();
  if (perm.size() != n) throw std::invalid_argument("permutation size mismatch");
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = b(perm[i], perm[j]);
  return ArrangementMatrix::unchecked(std::move(m));
}

std::string GraphEdge::label() const {
  std::string s = sign < 0 ? "-" : "";
  if (raw) return format_expr(*raw);
  if (n == 3 && k == 1) return s;
  if (n == 5 && k == 2) return s + "5'";
  if (k == 1) return s + std::to_string(n);
  return s + std::to_string(n) + "/" + std::to_string(k);
}

std::optional<GraphEdge> match_cos_label(const ExactNumber &v) {
  if (v.is_zero() || !v.is_real()) return std::nullopt;
  double x = v.to_double();
  double ax = std::fabs(x);
  if (ax >= 2.0) return std::nullopt;
  double t = std::acos(ax / 2) / M_PI; // in (0, 1/2]
  ExactNumber av = x < 0 ? -v : v;
  long bound = std::max<long>(8, 4 * v.conductor());
  for (long n = 3; n <= bound; ++n) {
    long k = std::lround(t * n);
    if (k <= 0 || 2 * k >= n || std::gcd(k, n) != 1) continue;
    if (std::fabs(2 * std::cos(M_PI * k / n) - ax) > 1e-9) continue;
    if (two_cos(k, n) == av) return GraphEdge{0, 0, x < 0 ? -1 : 1, n, k, std::nullopt};
  }
  return std::nullopt;
}

LabeledGraph to_graph(const ArrangementMatrix &b) {
  LabeledGraph g;
  g.vertices = (int)b.n();
  for (std::size_t i = 0; i < b.n(); ++i)
    for (std::size_t j = i + 1; j < b.n(); ++j) {
      const ExactNumber &v = b(i, j);
      if (v.is_zero()) continue;
      GraphEdge e;
      if (auto m = match_cos_label(v)) e = *m;
      else e = GraphEdge{0, 0, 1, 0, 0, v};
      e.i = (int)i;
      e.j = (int)j;
      g.edges.push_back(e);
    }
  return g;
}

ArrangementMatrix from_graph(const LabeledGraph &g) {
  Mat m(g.vertices, g.vertices);
  for (int i = 0; i < g.vertices; ++i) m(i, i) = 2;
  for (auto &e : g.edges) {
    if (e.i < 0 || e.j < 0 || e.i >= g.vertices || e.j >= g.vertices || e.i == e.j)
      throw std::invalid_argument("graph edge endpoints out of range");
    ExactNumber v;
    if (e.raw) v = *e.raw;
    else {
      if (e.n <= 0 || e.k <= 0 || 2 * e.k >= e.n)
        throw std::invalid_argument("edge label must satisfy 0 < k/n < 1/2");
      v = two_cos(e.k, e.n);
      if (e.sign < 0) v = -v;
    }
    m(e.i, e.j) = v;
    m(e.j, e.i) = v;
  }
  return ArrangementMatrix(std::move(m));
}

std::string to_dot(const LabeledGraph &g, const std::string &name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (int v = 0; v < g.vertices; ++v) os << "  " << v + 1 << ";\n";
  for (auto &e : g.edges) {
    os << "  " << e.i + 1 << " -- " << e.j + 1;
    std::string l = e.label();
    if (!l.empty()) os << " [label=\"" << l << "\"]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

Decomposition is_decomposable(const ArrangementMatrix &b) {
  std::size_t n = b.n();
  std::vector<int> comp(n, -1);
  Decomposition d;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> part{(int)s}, stack{(int)s};
    comp[s] = (int)d.parts.size();
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (std::size_t v = 0; v < n; ++v)
        if (comp[v] < 0 && !b(u, v).is_zero()) {
          comp[v] = comp[s];
          part.push_back((int)v);
          stack.push_back((int)v);
        }
    }
    std::sort(part.begin(), part.end());
    d.parts.push_back(part);
  }
  d.decomposable = d.parts.size() > 1;
  return d;
}

// For symmetric matrices the largest non-singular principal minor has size rank.
MinorChain minor_chain(const ArrangementMatrix &b) {
  MinorChain mc;
  std::vector<int> idx(b.n());
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<int> s_rev;
  while (!idx.empty()) {
    long r = rank(b.mat().principal(idx));
    mc.index_sets.push_back(idx);
    s_rev.push_back((int)r);
    if (idx.size() == 1) break;
    long best = -1;
    std::size_t drop = 0;
    for (std::size_t d = 0; d < idx.size(); ++d) {
      std::vector<int> sub = idx;
      sub.erase(sub.begin() + d);
      long rr = rank(b.mat().principal(sub));
      if (rr > best) {
        best = rr;
        drop = d;
      }
    }
    idx.erase(idx.begin() + drop);
  }
  mc.s.assign(s_rev.rbegin(), s_rev.rend());
  return mc;
}

} // namespace hw
