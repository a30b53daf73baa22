#include "hurwitz/orbit.hpp"

#include "doctest.h"

#include <map>
#include <numeric>
#include <set>

using namespace hw;

namespace {

// Subgroup order by closing the generated permutation group; independent of is_generating.
std::size_t group_order(const std::vector<Perm> &gens) {
  std::set<Perm> seen{perm_identity(gens[0].size())};
  std::vector<Perm> q(seen.begin(), seen.end());
  for (std::size_t h = 0; h < q.size(); ++h)
    for (auto &g : gens) {
      Perm x = perm_mul(g, q[h]);
      if (seen.insert(x).second) q.push_back(x);
    }
  return seen.size();
}

struct Naive {
  long tuples = 0;
  long orbits = 0;
};

// All generating rank-tuples, orbits by plain BFS under the Hurwitz moves and simultaneous
// conjugation by the simple reflections, on reflection indices.
Naive naive_orbits(const std::string &type) {
  const RootSystem &r = root_system(type);
  int N = (int)r.num_reflections(), n = r.rank;
  std::size_t full = group_order([&] {
    std::vector<Perm> g;
    for (int s : r.simple) g.push_back(r.refl_perm[s]);
    return g;
  }());
  auto refl_of = [&](const Perm &p) {
    for (int k = 0; k < N; ++k)
      if (r.refl_perm[k] == p) return k;
    return -1;
  };
  std::map<std::pair<int, int>, int> conj;
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) conj[{a, b}] = refl_of(perm_mul(perm_mul(r.refl_perm[a], r.refl_perm[b]), r.refl_perm[a]));
  std::set<std::vector<int>> gen;
  std::vector<int> t(n, 0);
  while (true) {
    std::vector<Perm> g;
    for (int x : t) g.push_back(r.refl_perm[x]);
    if (group_order(g) == full) gen.insert(t);
    int k = n - 1;
    while (k >= 0 && ++t[k] == N) t[k--] = 0;
    if (k < 0) break;
  }
  Naive out;
  out.tuples = (long)gen.size();
  std::set<std::vector<int>> seen;
  for (auto &start : gen) {
    if (seen.count(start)) continue;
    ++out.orbits;
    std::vector<std::vector<int>> q{start};
    seen.insert(start);
    for (std::size_t h = 0; h < q.size(); ++h) {
      for (int i = 0; i + 1 < n; ++i)
        for (int e : {1, -1}) {
          auto u = q[h];
          int a = u[i], b = u[i + 1];
          if (e > 0) u[i] = conj[{a, b}], u[i + 1] = a;
          else u[i] = b, u[i + 1] = conj[{b, a}];
          if (seen.insert(u).second) q.push_back(u);
        }
      for (int sref : r.simple) {
        auto u = q[h];
        for (int &x : u) x = conj[{sref, x}];
        if (seen.insert(u).second) q.push_back(u);
      }
    }
  }
  return out;
}

} // namespace

TEST_SUITE("orbit") {

TEST_CASE("orbit counts against plain enumeration") {
  for (std::string g : {"A2", "A3", "B2", "B3", "H3", "D4", "I2(5)"}) {
    CAPTURE(g);
    Naive want = naive_orbits(g);
    OrbitCount c = count_generating_orbits(g);
    CHECK(c.generating_tuples == want.tuples);
    CHECK((long)c.orbits.size() == want.orbits);
    long sum = 0;
    for (auto &o : c.orbits) sum += o.tuples;
    CHECK(sum == c.generating_tuples);
  }
}

TEST_CASE("frozen generating-tuple counts") {
  // values from the plain enumeration above, for the larger groups
  CHECK(count_generating_orbits("A4").generating_tuples == 3000);
  CHECK(count_generating_orbits("B4").generating_tuples == 12288);
  CHECK(count_generating_orbits("F4").generating_tuples == 51840);
}

TEST_CASE("seeded mode agrees with exhaustive mode") {
  CountOptions o;
  o.exhaustive = false;
  o.budget = 2000;
  for (std::string g : {"D4", "D5", "H3", "F4"}) {
    CAPTURE(g);
    OrbitCount a = count_generating_orbits(g), b = count_generating_orbits(g, 0, o);
    std::multiset<std::string> fa, fb;
    for (auto &x : a.orbits) fa.insert(x.charpoly.to_string() + "|" + format_expr(x.det));
    for (auto &x : b.orbits) fb.insert(x.charpoly.to_string() + "|" + format_expr(x.det));
    CHECK(fa == fb);
  }
}

TEST_CASE("tuple orbit of the simple reflections of A3") {
  const RootSystem &r = root_system("A3");
  OrbitReport rep = hurwitz_orbit(r, r.simple);
  CHECK(rep.finite);
  CHECK(rep.size == 16); // reduced reflection factorizations of a 4-cycle: 4^2
  CHECK(rep.invariants.charpoly.to_string() == "Phi2*Phi4");
}

TEST_CASE("matrix orbits") {
  OrbitReport a = matrix_orbit(gamma0_A(3));
  CHECK(a.finite);
  CHECK(a.invariants.det == ExactNumber(4));
  OrbitOptions small;
  small.cap = 50;
  OrbitReport inf = matrix_orbit(ArrangementMatrix::uniform(3, -2), small);
  CHECK(!inf.finite);
}

TEST_CASE("two_cos_angle") {
  CHECK(two_cos_angle(ExactNumber(1)) == std::pair<long, long>{1, 3});
  CHECK(two_cos_angle(ExactNumber(0)) == std::pair<long, long>{1, 2});
  CHECK(two_cos_angle(ExactNumber(2)) == std::pair<long, long>{0, 1});
  CHECK(two_cos_angle(ExactNumber(-2)) == std::pair<long, long>{1, 1});
  CHECK(two_cos_angle(two_cos(3, 7)) == std::pair<long, long>{3, 7});
  CHECK(!two_cos_angle(ExactNumber(mpq_class(1, 2))));
  CHECK(!two_cos_angle(ExactNumber(3)));
}

TEST_CASE("3x3 classification") {
  CHECK(classify_3x3(ArrangementMatrix::uniform(3, 1)).verdict == Verdict::Finite);
  CHECK(classify_3x3(ArrangementMatrix::uniform(3, -2)).verdict == Verdict::Infinite);
  CHECK(classify_3x3(gamma0_A(3)).verdict == Verdict::Finite);
  CHECK(classify_3x3(ArrangementMatrix::uniform(3, 2)).verdict == Verdict::Finite);
  CHECK_THROWS(classify_3x3(gamma0_A(4)));
}

TEST_CASE("bucket search is deterministic across thread counts") {
  BucketSearch a = search_buckets("E6", 300, 5, 1), b = search_buckets("E6", 300, 5, 4);
  REQUIRE(a.buckets.size() == b.buckets.size());
  for (std::size_t k = 0; k < a.buckets.size(); ++k) {
    CHECK(a.buckets[k].fingerprint == b.buckets[k].fingerprint);
    CHECK(a.buckets[k].count == b.buckets[k].count);
    CHECK(a.buckets[k].first == b.buckets[k].first);
  }
}

}
