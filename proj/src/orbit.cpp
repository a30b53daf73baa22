#include "hurwitz/orbit.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <unordered_set>

namespace hw {

namespace {

// Runs fn(begin, end) on contiguous chunks. Chunk boundaries do not affect results.
template <class F>
void parallel_for(std::size_t count, int threads, F fn) {
  if (threads <= 1 || count < 256) {
    fn(std::size_t(0), count);
    return;
  }
  std::vector<std::thread> pool;
  std::size_t chunk = (count + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    std::size_t b = t * chunk, e = std::min(count, b + chunk);
    if (b >= e) break;
    pool.emplace_back([=] { fn(b, e); });
  }
  for (auto &th : pool) th.join();
}

std::string key_of(const std::vector<std::uint16_t> &t) {
  return std::string(reinterpret_cast<const char *>(t.data()), t.size() * sizeof(std::uint16_t));
}

std::vector<Perm> perm_closure(const std::vector<Perm> &gens, std::size_t degree, std::size_t limit) {
  std::set<Perm> seen{perm_identity(degree)};
  std::vector<Perm> out{perm_identity(degree)};
  for (std::size_t h = 0; h < out.size(); ++h)
    for (auto &g : gens) {
      Perm p = perm_mul(g, out[h]);
      if (seen.insert(p).second) {
        if (out.size() >= limit) return {};
        out.push_back(std::move(p));
      }
    }
  return out;
}

ReflectionTables build_tables(const RootSystem &rs) {
  ReflectionTables t;
  t.rs = &rs;
  int N = t.N = (int)rs.num_reflections();
  t.conj.resize((std::size_t)N * N);
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) t.conj[(std::size_t)a * N + b] = (std::uint16_t)rs.refl_of_root[rs.refl_perm[a][rs.positive[b]]];
  std::vector<Perm> conj_by(N); // conjugation by r_a as a permutation of reflections
  for (int a = 0; a < N; ++a) conj_by[a] = Perm(t.conj.begin() + (std::size_t)a * N, t.conj.begin() + (std::size_t)(a + 1) * N);

  t.cls.assign(N, -1);
  t.transporter.resize(N);
  std::vector<Perm> act(N); // act[x](y) = g_x y g_x^-1 with g_x rho g_x^-1 = x
  for (int x = 0; x < N; ++x) {
    if (t.cls[x] >= 0) continue;
    int c = (int)t.rep.size();
    t.rep.push_back(x);
    std::vector<int> members{x};
    t.cls[x] = c;
    act[x] = perm_identity(N);
    for (std::size_t h = 0; h < members.size(); ++h) {
      int y = members[h];
      for (int s : rs.simple) {
        int z = t.c(s, y);
        if (t.cls[z] >= 0) continue;
        t.cls[z] = c;
        act[z] = perm_mul(conj_by[s], act[y]);
        members.push_back(z);
      }
    }
    t.class_size.push_back((long)members.size());
    // Schreier generators of the centralizer of x
    std::set<Perm> gens;
    Perm id = perm_identity(N);
    for (int y : members)
      for (int s : rs.simple) {
        int z = t.c(s, y);
        Perm g = perm_mul(perm_inv(act[z]), perm_mul(conj_by[s], act[y]));
        if (g != id) gens.insert(g);
      }
    std::vector<Perm> all(gens.begin(), gens.end());
    // keep a small generating set when the centralizer image is small enough to enumerate
    std::vector<Perm> full = perm_closure(all, N, 200000);
    if (!full.empty()) {
      std::vector<Perm> chosen;
      std::size_t have = 1;
      for (auto &g : all) {
        std::vector<Perm> trial = chosen;
        trial.push_back(g);
        std::size_t sz = perm_closure(trial, N, 200000).size();
        if (sz > have) {
          chosen = std::move(trial);
          have = sz;
          if (have == full.size()) break;
        }
      }
      all = std::move(chosen);
    }
    t.centralizer_gens.push_back(std::move(all));
  }
  for (int x = 0; x < N; ++x) t.transporter[x] = perm_inv(act[x]);
  return t;
}

} // namespace

std::vector<Perm> ReflectionTables::centralizer(int c, std::size_t limit) const {
  auto out = perm_closure(centralizer_gens.at(c), N, limit);
  if (out.empty()) throw std::runtime_error("centralizer too large to enumerate");
  std::sort(out.begin(), out.end());
  return out;
}

const ReflectionTables &reflection_tables(const std::string &type) {
  static std::mutex mu;
  static std::map<std::string, std::unique_ptr<ReflectionTables>> cache;
  const RootSystem &rs = root_system(type);
  std::lock_guard<std::mutex> lock(mu);
  auto &slot = cache[rs.label];
  if (!slot) slot = std::make_unique<ReflectionTables>(build_tables(rs));
  return *slot;
}

bool is_generating(const RootSystem &r, const std::vector<int> &refls) {
  std::vector<int> seed;
  for (int x : refls) {
    if (x < 0 || (std::size_t)x >= r.num_reflections()) throw std::out_of_range("reflection index out of range");
    seed.push_back(r.positive[x]);
  }
  return closure_roots(r, seed).size() == r.num_roots();
}

Invariants matrix_invariants(const ArrangementMatrix &b) {
  Invariants inv;
  inv.det = det(b.mat());
  Mat m = cox_matrix(b);
  inv.charpoly = cyclo_fingerprint(charpoly(m));
  if (auto o = inv.charpoly.implied_order(); o && power(m, *o).is_identity()) inv.order = o;
  return inv;
}

namespace {

// Level-synchronous BFS on sign classes. check() may veto a new state, which stops the search.
template <class Check>
OrbitReport matrix_bfs(const ArrangementMatrix &b, const OrbitOptions &opt, Check check, bool *vetoed) {
  if (opt.cap <= 0) throw std::invalid_argument("cap must be positive");
  ArrangementMatrix start = sign_canonical(b);
  OrbitReport rep;
  std::unordered_set<std::string> seen;
  std::vector<std::string> keys;
  std::vector<ArrangementMatrix> frontier{start};
  seen.insert(start.encode());
  keys.push_back(start.encode());
  if (vetoed) *vetoed = false;
  if (!check(start)) {
    if (vetoed) *vetoed = true;
    rep.size = 1;
    return rep;
  }
  int n = (int)b.n();
  bool exceeded = false;
  while (!frontier.empty() && !exceeded) {
    std::vector<std::vector<std::pair<std::string, ArrangementMatrix>>> succ(frontier.size());
    parallel_for(frontier.size(), opt.threads, [&](std::size_t lo, std::size_t hi) {
      for (std::size_t f = lo; f < hi; ++f)
        for (int i = 1; i < n; ++i)
          for (int e : {1, -1}) {
            ArrangementMatrix m = sign_canonical(act_sigma(frontier[f], i, e));
            std::string k = m.encode();
            succ[f].emplace_back(std::move(k), std::move(m));
          }
    });
    std::vector<ArrangementMatrix> next;
    for (auto &list : succ) {
      for (auto &[k, m] : list) {
        if (seen.count(k)) continue;
        if ((long)seen.size() >= opt.cap) {
          exceeded = true;
          break;
        }
        if (!check(m)) {
          if (vetoed) *vetoed = true;
          rep.size = (long)seen.size() + 1;
          return rep;
        }
        seen.insert(k);
        keys.push_back(k);
        next.push_back(std::move(m));
      }
      if (exceeded) break;
    }
    frontier = std::move(next);
  }
  rep.finite = !exceeded;
  rep.size = (long)seen.size();
  if (rep.finite) {
    std::sort(keys.begin(), keys.end());
    // regenerate representatives from the smallest keys; keep matrices only for those
    std::unordered_map<std::string, std::size_t> want;
    for (std::size_t k = 0; k < keys.size() && k < opt.max_representatives; ++k) want[keys[k]] = k;
    rep.representatives.resize(want.size());
    // second pass over the orbit to recover the matrices of the chosen keys
    std::unordered_set<std::string> again{start.encode()};
    std::vector<ArrangementMatrix> q{start};
    std::size_t found = 0;
    for (std::size_t h = 0; h < q.size() && found < want.size(); ++h) {
      if (auto it = want.find(q[h].encode()); it != want.end()) {
        rep.representatives[it->second] = q[h];
        ++found;
      }
      for (int i = 1; i < n; ++i)
        for (int e : {1, -1}) {
          ArrangementMatrix m = sign_canonical(act_sigma(q[h], i, e));
          if (again.insert(m.encode()).second) q.push_back(std::move(m));
        }
    }
  } else {
    rep.representatives.push_back(start);
  }
  rep.invariants = matrix_invariants(start);
  return rep;
}

} // namespace

OrbitReport matrix_orbit(const ArrangementMatrix &b, const OrbitOptions &opt) {
  return matrix_bfs(b, opt, [](const ArrangementMatrix &) { return true; }, nullptr);
}

namespace {

template <class G, class Key, class Mul, class Inv>
OrbitReport tuple_bfs(const std::vector<G> &t, const OrbitOptions &opt, Key key, Mul mul, Inv inv) {
  if (opt.cap <= 0) throw std::invalid_argument("cap must be positive");
  if (t.empty()) throw std::invalid_argument("empty tuple");
  std::unordered_set<std::string> seen{key(t)};
  std::vector<std::vector<G>> frontier{t};
  std::vector<std::string> keys{key(t)};
  bool exceeded = false;
  int n = (int)t.size();
  while (!frontier.empty() && !exceeded) {
    std::vector<std::vector<std::vector<G>>> succ(frontier.size());
    parallel_for(frontier.size(), opt.threads, [&](std::size_t lo, std::size_t hi) {
      for (std::size_t f = lo; f < hi; ++f)
        for (int i = 1; i < n; ++i)
          for (int e : {1, -1}) {
            std::vector<G> u = frontier[f];
            G &a = u[i - 1], &b = u[i];
            if (e > 0) {
              G na = mul(mul(a, b), inv(a));
              b = a;
              a = std::move(na);
            } else {
              G nb = mul(mul(inv(b), a), b);
              a = b;
              b = std::move(nb);
            }
            succ[f].push_back(std::move(u));
          }
    });
    std::vector<std::vector<G>> next;
    for (auto &list : succ) {
      for (auto &u : list) {
        std::string k = key(u);
        if (seen.count(k)) continue;
        if ((long)seen.size() >= opt.cap) {
          exceeded = true;
          break;
        }
        seen.insert(k);
        keys.push_back(k);
        next.push_back(std::move(u));
      }
      if (exceeded) break;
    }
    frontier = std::move(next);
  }
  OrbitReport rep;
  rep.finite = !exceeded;
  rep.size = (long)seen.size();
  return rep;
}

} // namespace

OrbitReport hurwitz_orbit(const RootSystem &r, const std::vector<int> &refls, const OrbitOptions &opt) {
  const ReflectionTables &tb = reflection_tables(r.label);
  std::vector<std::uint16_t> t;
  for (int x : refls) {
    if (x < 0 || x >= tb.N) throw std::out_of_range("reflection index out of range");
    t.push_back((std::uint16_t)x);
  }
  if (t.empty()) throw std::invalid_argument("empty tuple");
  if (opt.cap <= 0) throw std::invalid_argument("cap must be positive");
  std::unordered_set<std::string> seen{key_of(t)};
  std::vector<std::vector<std::uint16_t>> all{t};
  bool exceeded = false;
  int n = (int)t.size();
  for (std::size_t h = 0; h < all.size() && !exceeded; ++h)
    for (int i = 1; i < n && !exceeded; ++i)
      for (int e : {1, -1}) {
        std::vector<std::uint16_t> u = all[h];
        std::uint16_t a = u[i - 1], b = u[i];
        if (e > 0) {
          u[i - 1] = (std::uint16_t)tb.c(a, b);
          u[i] = a;
        } else {
          u[i - 1] = b;
          u[i] = (std::uint16_t)tb.c(b, a);
        }
        std::string k = key_of(u);
        if (seen.count(k)) continue;
        if ((long)seen.size() >= opt.cap) {
          exceeded = true;
          break;
        }
        seen.insert(k);
        all.push_back(std::move(u));
      }
  OrbitReport rep;
  rep.finite = !exceeded;
  rep.size = (long)seen.size();
  std::vector<int> smallest(refls);
  if (rep.finite)
    for (auto &u : all) {
      std::vector<int> v(u.begin(), u.end());
      if (v < smallest) smallest = v;
    }
  rep.tuple_representatives.push_back(smallest);
  GroupOrbit inv = tuple_invariants(r, refls);
  rep.invariants.det = inv.det;
  rep.invariants.charpoly = inv.charpoly;
  rep.invariants.order = inv.order;
  return rep;
}

OrbitReport hurwitz_orbit(const std::vector<Perm> &t, const OrbitOptions &opt) {
  auto key = [](const std::vector<Perm> &u) {
    std::string k;
    for (auto &p : u) k += key_of(p);
    return k;
  };
  OrbitReport rep = tuple_bfs(t, opt, key, perm_mul, perm_inv);
  Perm prod = quasicox_of_tuple(t);
  long order = 1;
  std::vector<char> done(prod.size(), 0);
  for (std::size_t x = 0; x < prod.size(); ++x) {
    if (done[x]) continue;
    long len = 0;
    for (std::size_t y = x; !done[y]; y = prod[y]) done[y] = 1, ++len;
    order = std::lcm(order, len);
  }
  rep.invariants.order = order;
  return rep;
}

OrbitReport hurwitz_orbit(const std::vector<Mat> &t, const OrbitOptions &opt) {
  auto key = [](const std::vector<Mat> &u) {
    std::string k;
    for (auto &m : u)
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) k += m(i, j).encode() + '|';
    return k;
  };
  auto mul = [](const Mat &a, const Mat &b) { return a * b; };
  auto inv = [](const Mat &a) {
    auto r = inverse(a);
    if (!r) throw DivisionByZero();
    return *r;
  };
  OrbitReport rep = tuple_bfs(t, opt, key, mul, inv);
  Mat prod = quasicox_of_tuple(t);
  rep.invariants.det = det(prod);
  rep.invariants.charpoly = fingerprint_of(prod);
  if (auto o = rep.invariants.charpoly.implied_order(); o && power(prod, *o).is_identity()) rep.invariants.order = o;
  return rep;
}

std::optional<std::pair<long, long>> two_cos_angle(const ExactNumber &a) {
  if (!a.is_real()) return std::nullopt;
  if (a == ExactNumber(2)) return std::make_pair(0L, 1L);
  if (a == ExactNumber(-2)) return std::make_pair(1L, 1L);
  if (std::abs(a.to_double()) > 2.0 + 1e-9) return std::nullopt;
  // eigenvalues of the companion matrix have degree at most 2 [Q(zeta_m):Q]
  long bound = 2 * euler_phi(a.conductor());
  long top = 0;
  std::vector<char> candidate;
  for (long N = 1; N <= 2 * bound * bound + 2; ++N)
    if (euler_phi(N) <= bound) {
      candidate.resize(N + 1, 0);
      candidate[N] = 1;
      top = N;
    }
  Mat c = Mat::from_rows({{a, ExactNumber(-1)}, {ExactNumber(1), ExactNumber(0)}});
  Mat p = c;
  long order = 0;
  for (long N = 1; N <= top; ++N) {
    if (candidate[N] && p.is_identity()) {
      order = N;
      break;
    }
    p = p * c;
  }
  if (!order) return std::nullopt;
  for (long k = 0; 2 * k <= order; ++k)
    if (std::gcd(k, order) == 1 && two_cos(2 * k, order) == a) {
      long g = std::gcd(2 * k, order);
      return std::make_pair(2 * k / g, order / g);
    }
  return std::nullopt;
}

std::string to_string(Verdict v) {
  switch (v) {
  case Verdict::Finite: return "Finite";
  case Verdict::Infinite: return "Infinite";
  default: return "Unknown";
  }
}

Classification classify_3x3(const ArrangementMatrix &b, const OrbitOptions &opt) {
  if (b.n() != 3) throw std::invalid_argument("classify_3x3 needs a 3x3 matrix");
  Classification res;
  std::unordered_map<std::string, bool> memo;
  std::string bad;
  auto entries_ok = [&](const ArrangementMatrix &m) {
    for (auto [i, j] : {std::pair{0, 1}, {0, 2}, {1, 2}}) {
      std::string k = m(i, j).encode();
      auto it = memo.find(k);
      bool ok = it != memo.end() ? it->second : (memo[k] = two_cos_angle(m(i, j)).has_value());
      if (!ok) {
        bad = format_expr(m(i, j));
        return false;
      }
    }
    return true;
  };
  if (!entries_ok(b)) {
    res.verdict = Verdict::Infinite;
    res.reason = "entry " + bad + " is not 2cos(pi*Q): companion matrix has infinite order";
    return res;
  }
  if (det(b.mat()).is_zero()) {
    res.alpha = two_cos_angle(b(0, 1));
    res.beta = two_cos_angle(b(0, 2));
    res.verdict = Verdict::Finite;
    res.reason = "degenerate: alpha and beta are rational multiples of pi";
    return res;
  }
  bool vetoed = false;
  OrbitReport rep = matrix_bfs(b, opt, entries_ok, &vetoed);
  if (vetoed) {
    res.verdict = Verdict::Infinite;
    res.reason = "orbit reaches entry " + bad + " whose companion matrix has infinite order";
    res.size = rep.size;
  } else if (rep.finite) {
    res.verdict = Verdict::Finite;
    res.reason = "orbit closed";
    res.size = rep.size;
  } else {
    res.verdict = Verdict::Unknown;
    res.reason = "cap reached after " + std::to_string(rep.size) + " states";
    res.size = rep.size;
  }
  return res;
}

GroupOrbit tuple_invariants(const RootSystem &r, const std::vector<int> &refls) {
  GroupOrbit g;
  g.representative = refls;
  g.det = det(r.arrangement(refls).mat());
  Mat m = r.perm_matrix(r.product(refls));
  g.charpoly = fingerprint_of(m);
  if (auto o = g.charpoly.implied_order(); o && power(m, *o).is_identity()) g.order = o;
  return g;
}

namespace {

struct UnionFind {
  std::vector<std::uint32_t> p;
  explicit UnionFind(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  // smaller index becomes the root, so roots are component minima
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a), b = find(b);
    if (a == b) return;
    if (a < b) p[b] = a;
    else p[a] = b;
  }
};

OrbitCount count_exhaustive(const ReflectionTables &tb, int n, const CountOptions &opt) {
  const RootSystem &rs = *tb.rs;
  long N = tb.N;
  long per = 1;
  for (int k = 1; k < n; ++k) per *= N;
  long classes = (long)tb.rep.size();
  long total = per * classes;
  if (total > opt.state_budget || total >= (1L << 31))
    throw std::runtime_error("exhaustive enumeration needs " + std::to_string(total) + " states, above the budget");

  auto decode = [&](long idx, std::vector<std::uint16_t> &t) {
    long c = idx / per, r = idx % per;
    t[0] = (std::uint16_t)tb.rep[c];
    for (int k = n - 1; k >= 1; --k) {
      t[k] = (std::uint16_t)(r % N);
      r /= N;
    }
  };
  auto encode = [&](const std::vector<std::uint16_t> &t) {
    long idx = tb.cls[t[0]];
    for (int k = 1; k < n; ++k) idx = idx * N + t[k];
    return idx;
  };
  auto normalize = [&](std::vector<std::uint16_t> &t) {
    const Perm &tr = tb.transporter[t[0]];
    for (auto &x : t) x = tr[x];
  };

  std::size_t moves = (std::size_t)(n - 1);
  for (auto &g : tb.centralizer_gens) moves = std::max(moves, (std::size_t)(n - 1) + g.size());
  UnionFind uf((std::size_t)total);
  // edges for a block of states are computed in parallel, then merged in index order
  const long block = 1 << 16;
  std::vector<std::uint32_t> edges;
  for (long lo = 0; lo < total; lo += block) {
    long hi = std::min(total, lo + block);
    edges.assign((std::size_t)(hi - lo) * moves, UINT32_MAX);
    parallel_for((std::size_t)(hi - lo), opt.threads, [&](std::size_t b, std::size_t e) {
      std::vector<std::uint16_t> t(n), u(n);
      for (std::size_t s = b; s < e; ++s) {
        long idx = lo + (long)s;
        decode(idx, t);
        std::size_t m = 0;
        for (int i = 1; i < n; ++i) {
          u = t;
          u[i - 1] = (std::uint16_t)tb.c(t[i - 1], t[i]);
          u[i] = t[i - 1];
          normalize(u);
          edges[s * moves + m++] = (std::uint32_t)encode(u);
        }
        for (auto &g : tb.centralizer_gens[tb.cls[t[0]]]) {
          for (int k = 0; k < n; ++k) u[k] = g[t[k]];
          edges[s * moves + m++] = (std::uint32_t)encode(u);
        }
      }
    });
    for (long s = 0; s < hi - lo; ++s)
      for (std::size_t m = 0; m < moves; ++m)
        if (edges[s * moves + m] != UINT32_MAX) uf.unite((std::uint32_t)(lo + s), edges[s * moves + m]);
  }

  OrbitCount out;
  out.group = rs.label;
  out.n = n;
  out.exhaustive = true;
  std::map<std::uint32_t, std::size_t> slot; // component root -> orbit position
  std::vector<std::uint16_t> t(n);
  std::vector<long> states, tuples;
  std::vector<std::uint32_t> roots;
  for (long idx = 0; idx < total; ++idx) {
    std::uint32_t r = uf.find((std::uint32_t)idx);
    auto [it, fresh] = slot.emplace(r, roots.size());
    if (fresh) {
      roots.push_back(r);
      states.push_back(0);
      tuples.push_back(0);
    }
    states[it->second] += 1;
    tuples[it->second] += tb.class_size[idx / per];
  }
  for (std::size_t k = 0; k < roots.size(); ++k) {
    decode(roots[k], t);
    std::vector<int> v(t.begin(), t.end());
    if (!is_generating(rs, v)) continue;
    GroupOrbit g = tuple_invariants(rs, v);
    g.states = states[k];
    g.tuples = tuples[k];
    out.generating_tuples += g.tuples;
    out.orbits.push_back(std::move(g));
  }
  return out;
}

struct Canonicalizer {
  const ReflectionTables &tb;
  std::vector<std::vector<Perm>> cent;
  explicit Canonicalizer(const ReflectionTables &t) : tb(t) {
    for (std::size_t c = 0; c < t.rep.size(); ++c) cent.push_back(t.centralizer((int)c));
  }
  std::vector<std::uint16_t> operator()(const std::vector<std::uint16_t> &t) const {
    std::size_t n = t.size();
    std::vector<std::uint16_t> u(n), best, v(n);
    const Perm &tr = tb.transporter[t[0]];
    for (std::size_t k = 0; k < n; ++k) u[k] = tr[t[k]];
    best = u;
    for (auto &g : cent[tb.cls[t[0]]]) {
      bool less = false;
      for (std::size_t k = 0; k < n; ++k) {
        v[k] = g[u[k]];
        if (!less) {
          if (v[k] > best[k]) break;
          if (v[k] < best[k]) less = true;
        }
      }
      if (less) {
        for (std::size_t k = 0; k < n; ++k) v[k] = g[u[k]];
        best = v;
      }
    }
    return best;
  }
};

OrbitCount count_seeded(const ReflectionTables &tb, int n, const CountOptions &opt) {
  const RootSystem &rs = *tb.rs;
  Canonicalizer canon(tb);
  std::unordered_map<std::string, int> orbit_of;
  OrbitCount out;
  out.group = rs.label;
  out.n = n;
  out.exhaustive = false;
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<int> pick(0, tb.N - 1);
  long misses = 0;
  std::vector<std::uint16_t> t(n);
  while (misses < opt.budget) {
    std::vector<int> v(n);
    for (int k = 0; k < n; ++k) v[k] = pick(rng);
    if (!is_generating(rs, v)) continue;
    ++out.samples;
    for (int k = 0; k < n; ++k) t[k] = (std::uint16_t)v[k];
    std::vector<std::uint16_t> c = canon(t);
    if (orbit_of.count(key_of(c))) {
      ++misses;
      continue;
    }
    misses = 0;
    int id = (int)out.orbits.size();
    std::vector<std::vector<std::uint16_t>> q{c};
    orbit_of[key_of(c)] = id;
    std::vector<std::uint16_t> smallest = c;
    for (std::size_t h = 0; h < q.size(); ++h) {
      for (int i = 1; i < n; ++i)
        for (int e : {1, -1}) {
          std::vector<std::uint16_t> u = q[h];
          std::uint16_t a = u[i - 1], b = u[i];
          if (e > 0) {
            u[i - 1] = (std::uint16_t)tb.c(a, b);
            u[i] = a;
          } else {
            u[i - 1] = b;
            u[i] = (std::uint16_t)tb.c(b, a);
          }
          u = canon(u);
          if (orbit_of.emplace(key_of(u), id).second) {
            if (u < smallest) smallest = u;
            q.push_back(std::move(u));
          }
        }
    }
    GroupOrbit g = tuple_invariants(rs, std::vector<int>(smallest.begin(), smallest.end()));
    g.states = (long)q.size();
    out.orbits.push_back(std::move(g));
  }
  out.consecutive_misses = misses;
  // report orbits in representative order so the output does not depend on discovery order
  std::sort(out.orbits.begin(), out.orbits.end(),
            [](const GroupOrbit &a, const GroupOrbit &b) { return a.representative < b.representative; });
  return out;
}

} // namespace

OrbitCount count_generating_orbits(const std::string &group, int n, const CountOptions &opt) {
  const ReflectionTables &tb = reflection_tables(group);
  if (n <= 0) n = tb.rs->rank;
  if (n < 1) throw std::invalid_argument("tuple length must be positive");
  return opt.exhaustive ? count_exhaustive(tb, n, opt) : count_seeded(tb, n, opt);
}

BucketSearch search_buckets(const std::string &group, long samples, std::uint64_t seed, int threads) {
  const ReflectionTables &tb = reflection_tables(group);
  const RootSystem &rs = *tb.rs;
  int n = rs.rank;
  struct Sample {
    std::vector<int> t;
    long draws = 0;
    std::string fp;
  };
  std::vector<Sample> all((std::size_t)samples);
  parallel_for(all.size(), threads, [&](std::size_t lo, std::size_t hi) {
    std::unordered_map<std::string, std::string> cache; // product permutation -> fingerprint
    for (std::size_t s = lo; s < hi; ++s) {
      // every sample has its own stream, so the result does not depend on the thread split
      std::seed_seq sq{(std::uint32_t)seed, (std::uint32_t)(seed >> 32), (std::uint32_t)s, (std::uint32_t)(s >> 32)};
      std::mt19937_64 rng(sq);
      std::uniform_int_distribution<int> pick(0, tb.N - 1);
      Sample &out = all[s];
      out.t.resize(n);
      do {
        for (int k = 0; k < n; ++k) out.t[k] = pick(rng);
        ++out.draws;
      } while (!is_generating(rs, out.t));
      Perm p = rs.product(out.t);
      std::string pk = key_of(p);
      auto it = cache.find(pk);
      if (it == cache.end()) it = cache.emplace(pk, fingerprint_of(rs.perm_matrix(p)).to_string()).first;
      out.fp = it->second;
    }
  });
  BucketSearch res;
  res.samples = samples;
  std::map<std::string, Bucket> buckets;
  for (auto &s : all) {
    res.draws += s.draws;
    auto [it, fresh] = buckets.try_emplace(s.fp);
    Bucket &b = it->second;
    if (fresh) {
      b.fingerprint = s.fp;
      b.first = s.t;
    }
    ++b.count;
  }
  for (auto &[k, b] : buckets) {
    GroupOrbit g = tuple_invariants(rs, b.first);
    b.det = g.det;
    b.order = g.order;
    res.buckets.push_back(std::move(b));
  }
  return res;
}

} // namespace hw
