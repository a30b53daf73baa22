#include "hurwitz/perm_models.hpp"
#include "hurwitz/orbit.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace hw {

namespace {

int infer_m(const std::vector<Transposition> &t, int m) {
  int top = 0;
  for (auto [i, j] : t) {
    if (i < 1 || j < 1 || i == j) throw std::invalid_argument("transpositions need two distinct positive points");
    top = std::max({top, i, j});
  }
  if (m == 0) m = std::max(top, (int)t.size() + 1);
  if (top > m) throw std::invalid_argument("transposition point out of range");
  return m;
}

Transposition norm(Transposition p) { return p.first < p.second ? p : Transposition{p.second, p.first}; }

// conjugate b by a: a b a
Transposition conj(Transposition a, Transposition b) {
  auto f = [&](int x) { return x == a.first ? a.second : x == a.second ? a.first : x; };
  return norm({f(b.first), f(b.second)});
}

} // namespace

bool generates_full_symmetric(const std::vector<Transposition> &t, int m) {
  m = infer_m(t, m);
  std::vector<int> p(m + 1);
  std::iota(p.begin(), p.end(), 0);
  auto find = [&](int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  };
  int comps = m;
  for (auto [i, j] : t) {
    int a = find(i), b = find(j);
    if (a != b) p[a] = b, --comps;
  }
  return comps == 1;
}

bool product_cycle_check(const std::vector<Transposition> &t, int m) {
  m = infer_m(t, m);
  if (!generates_full_symmetric(t, m)) throw std::invalid_argument("transpositions do not generate the symmetric group");
  std::vector<int> img(m + 1);
  std::iota(img.begin(), img.end(), 0);
  // product t_1 t_2 ... t_k, rightmost applied first
  for (auto it = t.rbegin(); it != t.rend(); ++it)
    for (int x = 1; x <= m; ++x) {
      if (img[x] == it->first) img[x] = it->second;
      else if (img[x] == it->second) img[x] = it->first;
    }
  int len = 0;
  int x = 1;
  do {
    x = img[x];
    ++len;
  } while (x != 1);
  return len == m;
}

std::vector<Transposition> hurwitz_transpositions(std::vector<Transposition> t, const BraidWord &w) {
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    int i = it->first;
    if (i < 1 || (std::size_t)i >= t.size()) throw std::out_of_range("braid generator index out of range");
    Transposition a = t[i - 1], b = t[i];
    if (it->second > 0) {
      t[i - 1] = conj(a, b);
      t[i] = a;
    } else {
      t[i - 1] = b;
      t[i] = conj(b, a);
    }
  }
  return t;
}

bool is_linear_chain(const std::vector<Transposition> &t) {
  for (std::size_t k = 0; k + 1 < t.size(); ++k) {
    auto [a, b] = t[k];
    auto [c, d] = t[k + 1];
    int shared = (a == c) + (a == d) + (b == c) + (b == d);
    if (shared != 1) return false;
  }
  // consecutive edges share one vertex; also no vertex is reused further along
  std::map<int, int> deg;
  for (auto [a, b] : t) ++deg[a], ++deg[b];
  for (auto [v, d] : deg)
    if (d > 2) return false;
  return deg.size() == t.size() + 1;
}

BraidWord canonical_reduce_A(const std::vector<Transposition> &t0, long cap) {
  int m = infer_m(t0, 0);
  if (!generates_full_symmetric(t0, m)) throw std::invalid_argument("transpositions do not generate the symmetric group");
  std::vector<Transposition> t;
  for (auto p : t0) t.push_back(norm(p));
  int n = (int)t.size();
  std::map<std::vector<Transposition>, std::pair<std::size_t, std::pair<int, int>>> from;
  std::vector<std::vector<Transposition>> q{t};
  from[t] = {0, {0, 0}};
  for (std::size_t h = 0; h < q.size(); ++h) {
    if (is_linear_chain(q[h])) {
      BraidWord w;
      for (std::size_t cur = h; cur != 0;) {
        auto &[prev, mv] = from[q[cur]];
        w.letters.push_back(mv); // walking back: later moves go to the left
        cur = prev;
      }
      return w;
    }
    for (int i = 1; i < n; ++i)
      for (int e : {1, -1}) {
        auto u = hurwitz_transpositions(q[h], BraidWord{{{i, e}}});
        if (from.count(u)) continue;
        if ((long)q.size() >= cap) throw std::runtime_error("reduction search exceeded its cap");
        from[u] = {h, {i, e}};
        q.push_back(std::move(u));
      }
  }
  throw std::logic_error("no linear chain in the orbit");
}

SignedPermutation SignedPermutation::identity(int n) {
  SignedPermutation p;
  p.image.resize(n);
  std::iota(p.image.begin(), p.image.end(), 0);
  p.sign.assign(n, 1);
  return p;
}

SignedPermutation SignedPermutation::transposition(int n, int i, int j, int s) {
  if (i < 1 || j < 1 || i > n || j > n || i == j || (s != 1 && s != -1)) throw std::invalid_argument("bad signed transposition");
  SignedPermutation p = identity(n);
  p.image[i - 1] = j - 1;
  p.image[j - 1] = i - 1;
  p.sign[i - 1] = p.sign[j - 1] = s;
  return p;
}

SignedPermutation SignedPermutation::sign_change(int n, int i) {
  if (i < 1 || i > n) throw std::invalid_argument("bad sign change");
  SignedPermutation p = identity(n);
  p.sign[i - 1] = -1;
  return p;
}

SignedPermutation SignedPermutation::operator*(const SignedPermutation &o) const {
  if (o.size() != size()) throw std::invalid_argument("size mismatch");
  SignedPermutation r = identity(size());
  for (int x = 0; x < size(); ++x) {
    r.image[x] = image[o.image[x]];
    r.sign[x] = o.sign[x] * sign[o.image[x]];
  }
  return r;
}

SignedPermutation SignedPermutation::inverse() const {
  SignedPermutation r = identity(size());
  for (int x = 0; x < size(); ++x) {
    r.image[image[x]] = x;
    r.sign[image[x]] = sign[x];
  }
  return r;
}

ReflectionClass reflection_class(const SignedPermutation &p) {
  int moved = 0, flipped = 0;
  for (int x = 0; x < p.size(); ++x) {
    moved += p.image[x] != x;
    flipped += p.image[x] == x && p.sign[x] < 0;
  }
  if (moved == 2 && flipped == 0) {
    int a = -1, b = -1;
    for (int x = 0; x < p.size(); ++x)
      if (p.image[x] != x) (a < 0 ? a : b) = x;
    if (p.image[a] == b && p.image[b] == a && p.sign[a] == p.sign[b]) return ReflectionClass::A;
  }
  if (moved == 0 && flipped == 1) return ReflectionClass::B;
  return ReflectionClass::None;
}

SignedPermutation signed_reflection(const RootSystem &r, int refl) {
  if (r.family != 'B' && r.family != 'D') throw std::invalid_argument("signed model needs a B or D root system");
  const Vec &root = r.roots.at(r.positive.at(refl));
  std::vector<int> nz;
  for (int k = 0; k < r.dim; ++k)
    if (!root[k].is_zero()) nz.push_back(k);
  int n = r.dim;
  if (nz.size() == 1) return SignedPermutation::sign_change(n, nz[0] + 1);
  if (nz.size() != 2) throw std::logic_error("unexpected root shape");
  // reflection in e_i - s e_j swaps e_i and s e_j
  int s = root[nz[0]] == root[nz[1]] ? -1 : 1;
  return SignedPermutation::transposition(n, nz[0] + 1, nz[1] + 1, s);
}

std::vector<Perm> as_root_perms(const RootSystem &r, const std::vector<SignedPermutation> &t) {
  std::vector<Perm> out;
  for (auto &p : t) {
    if (p.size() != r.dim) throw std::invalid_argument("size mismatch");
    Perm q(r.num_roots());
    for (std::size_t x = 0; x < r.num_roots(); ++x) {
      Vec y(r.dim);
      for (int k = 0; k < r.dim; ++k) y[p.image[k]] = r.roots[x][k] * ExactNumber(p.sign[k]);
      int z = r.find_root(y);
      if (z < 0) throw std::invalid_argument("signed permutation does not preserve the root system");
      q[x] = (std::uint16_t)z;
    }
    out.push_back(std::move(q));
  }
  return out;
}

std::vector<int> pair_cycles(const std::vector<SignedPermutation> &t) {
  if (t.empty()) throw std::invalid_argument("empty tuple");
  SignedPermutation p = t[0];
  for (std::size_t k = 1; k < t.size(); ++k) p = p * t[k];
  std::vector<int> out;
  std::vector<char> done(p.size(), 0);
  for (int x = 0; x < p.size(); ++x) {
    if (done[x]) continue;
    int len = 0;
    for (int y = x; !done[y]; y = p.image[y]) done[y] = 1, ++len;
    out.push_back(len);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<int, int> dn_invariant(const std::vector<SignedPermutation> &t) {
  int n = t.at(0).size();
  const RootSystem &r = root_system("D" + std::to_string(n));
  std::vector<int> refls;
  for (auto &p : t) {
    if (reflection_class(p) != ReflectionClass::A) throw std::invalid_argument("D_n model needs signed transpositions");
    Perm q = as_root_perms(r, {p})[0];
    int found = -1;
    for (std::size_t k = 0; k < r.num_reflections(); ++k)
      if (r.refl_perm[k] == q) found = (int)k;
    refls.push_back(found);
  }
  if (!is_generating(r, refls)) throw std::invalid_argument("tuple does not generate W(D_n)");
  auto c = pair_cycles(t);
  if (c.size() != 2) throw std::logic_error("product does not split into two cycles");
  return {c[0], c[1]};
}

} // namespace hw
