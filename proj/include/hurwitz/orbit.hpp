#pragma once

#include "hurwitz/arrangement.hpp"
#include "hurwitz/braid.hpp"
#include "hurwitz/catalog.hpp"
#include "hurwitz/quasicox.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hw {

// Conjugation data for the reflections of a root system, indexed by reflection.
struct ReflectionTables {
  const RootSystem *rs = nullptr;
  int N = 0;
  std::vector<std::uint16_t> conj; // conj[a*N+b] = index of r_a r_b r_a
  std::vector<int> cls;             // conjugacy class of each reflection
  std::vector<int> rep;             // smallest reflection of each class
  std::vector<long> class_size;
  // transporter[x] acts on reflection indices as conjugation by some w with w x w^-1 = rep[cls[x]]
  std::vector<Perm> transporter;
  // generators of the centralizer image of rep[c], acting on reflection indices
  std::vector<std::vector<Perm>> centralizer_gens;

  int c(int a, int b) const { return conj[(std::size_t)a * N + b]; }
  // Full centralizer image of rep[c] on reflection indices; fine for small groups only.
  std::vector<Perm> centralizer(int c, std::size_t limit = 2000000) const;
};
const ReflectionTables &reflection_tables(const std::string &type);

bool is_generating(const RootSystem &r, const std::vector<int> &refls);

struct Invariants {
  ExactNumber det;
  Fingerprint charpoly;
  std::optional<long> order;
};

struct OrbitReport {
  bool finite = false;
  long size = 0;        // closure size when finite, states seen otherwise
  std::vector<ArrangementMatrix> representatives; // canonical forms, sorted by encoding, capped
  std::vector<std::vector<int>> tuple_representatives; // for tuple orbits
  Invariants invariants;
  std::string product; // tuple orbits: product element rendered as root permutation cycle count
};

struct OrbitOptions {
  long cap = 1000000;
  int threads = 1;
  std::size_t max_representatives = 20;
};

Invariants matrix_invariants(const ArrangementMatrix &b);
OrbitReport matrix_orbit(const ArrangementMatrix &b, const OrbitOptions &opt = {});

// Tuple orbit without any quotient. Reflection indices of a root system, or raw permutations / matrices.
OrbitReport hurwitz_orbit(const RootSystem &r, const std::vector<int> &refls, const OrbitOptions &opt = {});
OrbitReport hurwitz_orbit(const std::vector<Perm> &t, const OrbitOptions &opt = {});
OrbitReport hurwitz_orbit(const std::vector<Mat> &t, const OrbitOptions &opt = {});

// a == 2cos(pi p/q) with 0 <= p/q <= 1, found through the order of [[a,-1],[1,0]].
std::optional<std::pair<long, long>> two_cos_angle(const ExactNumber &a);

enum class Verdict { Finite, Infinite, Unknown };
struct Classification {
  Verdict verdict = Verdict::Unknown;
  std::string reason;
  long size = 0; // orbit size when decided by enumeration
  std::optional<std::pair<long, long>> alpha, beta; // degenerate case, as fractions of pi
};
Classification classify_3x3(const ArrangementMatrix &b, const OrbitOptions &opt = {});
std::string to_string(Verdict v);

struct GroupOrbit {
  std::vector<int> representative; // reflection indices
  long states = 0;                 // tuples up to conjugation
  long tuples = 0;                 // exact tuple count (exhaustive mode only)
  ExactNumber det;
  Fingerprint charpoly;
  std::optional<long> order;
};

struct OrbitCount {
  std::string group;
  int n = 0;
  bool exhaustive = true;
  std::vector<GroupOrbit> orbits;
  long generating_tuples = 0; // exhaustive only
  long samples = 0;           // seeded only
  long consecutive_misses = 0;
};

struct CountOptions {
  bool exhaustive = true;
  long budget = 10000;       // seeded: stop after this many fresh generating samples without a new orbit
  long state_budget = 20000000;
  std::uint64_t seed = 1;
  int threads = 1;
};
// n defaults to the rank of the group.
OrbitCount count_generating_orbits(const std::string &group, int n = 0, const CountOptions &opt = {});

// Invariants of the tuple: arrangement determinant and the product's fingerprint.
GroupOrbit tuple_invariants(const RootSystem &r, const std::vector<int> &refls);

struct Bucket {
  std::string fingerprint;
  long count = 0;
  std::vector<int> first; // first tuple seen
  ExactNumber det;
  std::optional<long> order;
};
struct BucketSearch {
  long samples = 0; // generating samples drawn
  long draws = 0;   // including rejected ones
  std::vector<Bucket> buckets; // sorted by fingerprint string
};
// Random generating tuples of length rank, bucketed by quasicoxeter fingerprint.
BucketSearch search_buckets(const std::string &group, long samples, std::uint64_t seed, int threads = 1);

} // namespace hw
