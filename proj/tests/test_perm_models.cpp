#include "hurwitz/orbit.hpp"
#include "hurwitz/perm_models.hpp"

#include "doctest.h"

#include <random>
#include <set>

using namespace hw;

namespace {

long factorial(int m) { return m <= 1 ? 1 : m * factorial(m - 1); }

// Order of the permutation group generated by the transpositions on {1..m}.
std::size_t generated_order(const std::vector<Transposition> &t, int m) {
  std::vector<Perm> gens;
  for (auto [a, b] : t) {
    Perm p = perm_identity(m);
    std::swap(p[a - 1], p[b - 1]);
    gens.push_back(p);
  }
  std::set<Perm> seen{perm_identity(m)};
  std::vector<Perm> q(seen.begin(), seen.end());
  for (std::size_t h = 0; h < q.size(); ++h)
    for (auto &g : gens) {
      Perm x = perm_mul(g, q[h]);
      if (seen.insert(x).second) q.push_back(x);
    }
  return seen.size();
}

std::vector<Transposition> all_transpositions(int m) {
  std::vector<Transposition> v;
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) v.push_back({i, j});
  return v;
}

std::vector<SignedPermutation> signed_tuple(const RootSystem &r, const std::vector<int> &refls) {
  std::vector<SignedPermutation> t;
  for (int x : refls) t.push_back(signed_reflection(r, x));
  return t;
}

} // namespace

TEST_SUITE("perm_models") {

TEST_CASE("connectivity examples") {
  CHECK(generates_full_symmetric({{1, 2}, {2, 3}, {3, 4}}));
  CHECK(!generates_full_symmetric({{1, 2}, {1, 2}, {3, 4}}, 4));
  CHECK(generates_full_symmetric({{1, 2}, {1, 3}, {1, 4}}));
  CHECK_THROWS(generates_full_symmetric({{1, 1}}));
}

TEST_CASE("connectivity equals generation of the symmetric group") {
  std::mt19937_64 rng(17);
  for (int m = 3; m <= 6; ++m) {
    auto all = all_transpositions(m);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (int t = 0; t < 60; ++t) {
      std::vector<Transposition> tup;
      for (int k = 0; k < m - 1; ++k) tup.push_back(all[pick(rng)]);
      CHECK(generates_full_symmetric(tup, m) == (generated_order(tup, m) == (std::size_t)factorial(m)));
    }
  }
}

TEST_CASE("generating products are full cycles") {
  CHECK(product_cycle_check({{1, 2}, {2, 3}, {3, 4}}));
  auto all = all_transpositions(4);
  for (auto &a : all)
    for (auto &b : all)
      for (auto &c : all) {
        std::vector<Transposition> t{a, b, c};
        if (generates_full_symmetric(t, 4)) CHECK(product_cycle_check(t, 4));
        else CHECK_THROWS_AS(product_cycle_check(t, 4), std::invalid_argument);
      }
}

TEST_CASE("reduction to a chain") {
  CHECK(canonical_reduce_A({{1, 2}, {2, 3}}).empty());
  std::vector<Transposition> t{{2, 3}, {1, 2}};
  CHECK(is_linear_chain(hurwitz_transpositions(t, canonical_reduce_A(t))));
  auto all = all_transpositions(5);
  long checked = 0;
  for (auto &a : all)
    for (auto &b : all)
      for (auto &c : all)
        for (auto &d : all) {
          std::vector<Transposition> u{a, b, c, d};
          if (!generates_full_symmetric(u, 5)) continue;
          ++checked;
          BraidWord w = canonical_reduce_A(u);
          auto v = hurwitz_transpositions(u, w);
          CHECK(is_linear_chain(v));
          CHECK(product_cycle_check(v, 5));
        }
  CHECK(checked == 125 * 24); // labelled trees times edge orders
  std::mt19937_64 rng(19);
  auto six = all_transpositions(6);
  std::uniform_int_distribution<std::size_t> pick(0, six.size() - 1);
  for (int k = 0; k < 30; ++k) {
    std::vector<Transposition> u;
    do {
      u.clear();
      for (int j = 0; j < 5; ++j) u.push_back(six[pick(rng)]);
    } while (!generates_full_symmetric(u, 6));
    CHECK(is_linear_chain(hurwitz_transpositions(u, canonical_reduce_A(u))));
  }
}

TEST_CASE("signed permutations") {
  auto a = SignedPermutation::transposition(3, 1, 2, -1);
  auto b = SignedPermutation::sign_change(3, 3);
  CHECK(a * a == SignedPermutation::identity(3));
  CHECK((a * b).inverse() == b.inverse() * a.inverse());
  CHECK(reflection_class(a) == ReflectionClass::A);
  CHECK(reflection_class(b) == ReflectionClass::B);
  CHECK(reflection_class(a * b) == ReflectionClass::None);
  CHECK_THROWS(SignedPermutation::transposition(3, 1, 1, 1));
}

TEST_CASE("signed model matches the root system action") {
  for (std::string g : {"B3", "D4"}) {
    const RootSystem &r = root_system(g);
    for (std::size_t k = 0; k < r.num_reflections(); ++k) {
      auto p = as_root_perms(r, {signed_reflection(r, (int)k)});
      CHECK(p[0] == r.refl_perm[k]);
    }
  }
}

TEST_CASE("D_n invariant separates the orbits") {
  for (std::string g : {"D4", "D5", "D6"}) {
    CAPTURE(g);
    CountOptions o;
    o.exhaustive = g != "D6";
    OrbitCount c = count_generating_orbits(g, 0, o);
    const RootSystem &r = root_system(g);
    std::set<std::pair<int, int>> values;
    for (auto &orb : c.orbits) values.insert(dn_invariant(signed_tuple(r, orb.representative)));
    CHECK(values.size() == c.orbits.size());
    CHECK((int)values.size() == r.rank / 2);
  }
  const RootSystem &d4 = root_system("D4");
  std::set<std::pair<int, int>> seen;
  for (auto &orb : count_generating_orbits("D4").orbits) seen.insert(dn_invariant(signed_tuple(d4, orb.representative)));
  CHECK(seen == std::set<std::pair<int, int>>{{1, 3}, {2, 2}});
}

TEST_CASE("D_n invariant is constant on orbits") {
  std::mt19937_64 rng(23);
  for (std::string g : {"D4", "D5"}) {
    const RootSystem &r = root_system(g);
    std::uniform_int_distribution<int> refl(0, (int)r.num_reflections() - 1);
    for (int t = 0; t < 20; ++t) {
      std::vector<int> tup;
      do {
        tup.clear();
        for (int k = 0; k < r.rank; ++k) tup.push_back(refl(rng));
      } while (!is_generating(r, tup));
      auto before = dn_invariant(signed_tuple(r, tup));
      std::vector<Perm> perms;
      for (int x : tup) perms.push_back(r.refl_perm[x]);
      BraidWord w;
      for (int k = 0; k < 10; ++k)
        w.letters.push_back({std::uniform_int_distribution<int>(1, r.rank - 1)(rng), k % 3 ? 1 : -1});
      auto moved = hurwitz_word(perms, w);
      std::vector<int> back;
      for (auto &p : moved)
        for (std::size_t k = 0; k < r.num_reflections(); ++k)
          if (r.refl_perm[k] == p) back.push_back((int)k);
      REQUIRE(back.size() == tup.size());
      CHECK(dn_invariant(signed_tuple(r, back)) == before);
    }
  }
}

TEST_CASE("B_n has one orbit") {
  for (std::string g : {"B2", "B3", "B4", "B5"}) {
    CAPTURE(g);
    CHECK(count_generating_orbits(g).orbits.size() == 1);
  }
}

}
