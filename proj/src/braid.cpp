#include "hurwitz/braid.hpp"

#include <cctype>
#include <map>
#include <queue>
#include <stdexcept>

namespace hw {

BraidWord BraidWord::parse(std::string_view text) {
  BraidWord w;
  std::size_t p = 0;
  auto skip = [&] {
    while (p < text.size() && std::isspace((unsigned char)text[p])) ++p;
  };
  auto number = [&]() -> long {
    std::size_t s = p;
    while (p < text.size() && std::isdigit((unsigned char)text[p])) ++p;
    if (s == p) throw ParseError("expected digits", s);
    return std::stol(std::string(text.substr(s, p - s)));
  };
  skip();
  while (p < text.size()) {
    if (text[p] != 's' && text[p] != 'S') throw ParseError("expected generator 's<i>'", p);
    ++p;
    long i = number();
    if (i < 1) throw ParseError("generator index must be positive", p);
    int e = 1;
    if (p < text.size() && text[p] == '^') {
      ++p;
      int sign = 1;
      if (p < text.size() && (text[p] == '-' || text[p] == '+')) sign = text[p++] == '-' ? -1 : 1;
      std::size_t at = p;
      long m = number();
      if (m != 1) throw ParseError("exponent must be 1 or -1", at);
      e = sign;
    }
    w.letters.emplace_back((int)i, e);
    skip();
  }
  return w;
}

std::string BraidWord::to_string() const {
  std::string out;
  for (auto [i, e] : letters) {
    if (!out.empty()) out += ' ';
    out += "s" + std::to_string(i) + (e < 0 ? "^-1" : "");
  }
  return out;
}

BraidWord BraidWord::inverse() const {
  BraidWord w;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) w.letters.emplace_back(it->first, -it->second);
  return w;
}

BraidWord BraidWord::operator*(const BraidWord &o) const {
  BraidWord w = *this;
  w.letters.insert(w.letters.end(), o.letters.begin(), o.letters.end());
  return w;
}

int BraidWord::max_index() const {
  int m = 0;
  for (auto [i, e] : letters) m = std::max(m, i);
  return m;
}

namespace {

void check_index(std::size_t n, int i) {
  if (i < 1 || (std::size_t)i >= n) throw std::out_of_range("braid generator index out of range");
}

} // namespace

ArrangementMatrix act_sigma(const ArrangementMatrix &b, int i, int e) {
  std::size_t n = b.n();
  check_index(n, i);
  std::size_t p = i - 1, q = i;
  ExactNumber c = b(p, q);
  Mat m = b.mat();
  for (std::size_t j = 0; j < n; ++j) {
    if (j == p || j == q) continue;
    ExactNumber np, nq;
    if (e > 0) {
      np = b(q, j) - c * b(p, j);
      nq = b(p, j);
    } else {
      np = b(q, j);
      nq = b(p, j) - c * b(q, j);
    }
    m(p, j) = m(j, p) = np;
    m(q, j) = m(j, q) = nq;
  }
  m(p, q) = m(q, p) = -c;
  return ArrangementMatrix::unchecked(std::move(m));
}

Mat k_matrix(const ArrangementMatrix &b, int i, int e) {
  std::size_t n = b.n();
  check_index(n, i);
  std::size_t p = i - 1, q = i;
  Mat k = Mat::identity(n);
  ExactNumber c = b(p, q);
  k(p, q) = k(q, p) = 1;
  if (e > 0) {
    k(p, p) = -c;
    k(q, q) = 0;
  } else {
    k(p, p) = 0;
    k(q, q) = -c;
  }
  return k;
}

ArrangementMatrix act_word(const ArrangementMatrix &b, const BraidWord &w) {
  ArrangementMatrix out = b;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) out = act_sigma(out, it->first, it->second);
  return out;
}

Perm perm_mul(const Perm &a, const Perm &b) {
  Perm c(b.size());
  for (std::size_t x = 0; x < b.size(); ++x) c[x] = a[b[x]];
  return c;
}

Perm perm_inv(const Perm &a) {
  Perm c(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) c[a[x]] = (std::uint16_t)x;
  return c;
}

Perm perm_identity(std::size_t n) {
  Perm p(n);
  for (std::size_t x = 0; x < n; ++x) p[x] = (std::uint16_t)x;
  return p;
}

namespace {

template <class G, class Mul, class Inv>
std::vector<G> hurwitz_impl(std::vector<G> t, int i, int e, Mul mul, Inv inv) {
  check_index(t.size(), i);
  G &a = t[i - 1];
  G &b = t[i];
  if (e > 0) {
    G na = mul(mul(a, b), inv(a));
    b = std::move(a);
    a = std::move(na);
  } else {
    G nb = mul(mul(inv(b), a), b);
    a = std::move(b);
    b = std::move(nb);
  }
  return t;
}

Mat mat_inv(const Mat &m) {
  auto r = inverse(m);
  if (!r) throw DivisionByZero();
  return *r;
}

} // namespace

std::vector<Perm> hurwitz(const std::vector<Perm> &t, int i, int e) {
  return hurwitz_impl(t, i, e, perm_mul, perm_inv);
}

std::vector<Mat> hurwitz(const std::vector<Mat> &t, int i, int e) {
  return hurwitz_impl(t, i, e, [](const Mat &a, const Mat &b) { return a * b; }, mat_inv);
}

std::vector<Perm> hurwitz_word(std::vector<Perm> t, const BraidWord &w) {
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) t = hurwitz(t, it->first, it->second);
  return t;
}

std::vector<Mat> hurwitz_word(std::vector<Mat> t, const BraidWord &w) {
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) t = hurwitz(t, it->first, it->second);
  return t;
}

Mat stokes_act(const Mat &s, int i, int e) {
  std::size_t n = s.rows();
  if (s.cols() != n) throw std::invalid_argument("Stokes matrix must be square");
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c <= r; ++c)
      if (s(r, c) != ExactNumber(r == c ? 1 : 0)) throw std::invalid_argument("Stokes matrix must be upper unitriangular");
  check_index(n, i);
  // K depends only on the (i, i+1) entry, which S and S + S^T share
  Mat k = Mat::identity(n);
  std::size_t p = i - 1, q = i;
  ExactNumber c = s(p, q);
  k(p, q) = k(q, p) = 1;
  if (e > 0) {
    k(p, p) = -c;
    k(q, q) = 0;
  } else {
    k(p, p) = 0;
    k(q, q) = -c;
  }
  return k * s * k;
}

BraidWord cyclic_word(int n) {
  BraidWord w;
  for (int i = n - 1; i >= 1; --i) w.letters.emplace_back(i, 1);
  return w;
}

BraidWord reorder_tree(const ArrangementMatrix &b, const std::vector<int> &target) {
  int n = (int)b.n();
  if ((int)target.size() != n) throw std::invalid_argument("target permutation size mismatch");
  std::vector<int> seen(n, 0);
  for (int v : target) {
    if (v < 0 || v >= n || seen[v]++) throw std::invalid_argument("target is not a permutation");
  }
  int edges = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges += !b(i, j).is_zero();
  if (edges != n - 1 || is_decomposable(b).decomposable) throw std::invalid_argument("arrangement graph is not a tree");
  if (n > 9) throw std::invalid_argument("reorder_tree supports at most 9 vertices");

  using Order = std::vector<int>;
  Order start(n);
  for (int k = 0; k < n; ++k) start[k] = k;
  // parent pointers: state -> (previous state, move word)
  std::map<Order, std::pair<Order, BraidWord>> from;
  std::queue<Order> q;
  from[start] = {start, BraidWord{}};
  q.push(start);
  BraidWord cyc = cyclic_word(n);
  while (!q.empty()) {
    Order cur = q.front();
    q.pop();
    if (cur == target) break;
    auto push = [&](Order next, BraidWord w) {
      if (from.count(next)) return;
      from[next] = {cur, std::move(w)};
      q.push(std::move(next));
    };
    for (int p = 0; p + 1 < n; ++p)
      if (b(cur[p], cur[p + 1]).is_zero()) {
        Order next = cur;
        std::swap(next[p], next[p + 1]);
        push(std::move(next), BraidWord{{{p + 1, 1}}});
      }
    Order next(cur.begin() + 1, cur.end());
    next.push_back(cur[0]);
    push(std::move(next), cyc);
  }
  if (!from.count(target)) throw std::runtime_error("target ordering not reachable");
  BraidWord w;
  for (Order cur = target; cur != start;) {
    auto &[prev, move] = from[cur];
    w = w * move; // later moves act after, so they sit further left
    cur = prev;
  }
  return w;
}

std::pair<int, int> cycle_invariants(const std::vector<int> &idx) {
  int up = 0, down = 0;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    int a = idx[k], b = idx[(k + 1) % idx.size()];
    if (a < b) ++up;
    else if (a > b) ++down;
  }
  return {up, down};
}

} // namespace hw
