#pragma once

#include "hurwitz/arrangement.hpp"
#include "hurwitz/braid.hpp"

#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace hw {

struct RootSystem {
  std::string label; // "A3", "E8", "I2(5)"
  char family = 0;   // 'A','B','D','E','F','H','I'
  int n = 0;         // index in the label (m for I2(m))
  int rank = 0;
  int dim = 0;             // ambient coordinate dimension
  std::vector<Vec> roots;  // ambient coordinates, both signs
  std::vector<int> neg;    // index of -root
  std::vector<int> positive;      // one root per reflection
  std::vector<int> refl_of_root;  // reflection index of +-root
  std::vector<Perm> refl_perm;    // per reflection: permutation of root indices
  std::vector<int> simple;        // reflection indices of the simple reflections
  std::vector<ExactNumber> norm2; // (root, root)
  std::vector<Vec> coords;        // coordinates of each root in the simple-root basis

  std::size_t num_roots() const { return roots.size(); }
  std::size_t num_reflections() const { return positive.size(); }
  ExactNumber inner(int a, int b) const; // root indices
  int find_root(const Vec &v) const;     // -1 if absent
  int length_classes() const;

  // Matrices in the simple-root basis (rank x rank).
  Mat reflection_matrix(int refl) const;
  Mat perm_matrix(const Perm &w) const;
  Perm product(const std::vector<int> &refls) const; // r_1 r_2 ... r_k as root permutation
  // B_ij = 2(a_i,a_j)/sqrt(|a_i|^2 |a_j|^2) for the positive roots of the reflections.
  ArrangementMatrix arrangement(const std::vector<int> &refls) const;

  std::unordered_map<std::string, int> index_; // encoded coordinates -> root index
};

// Accepts "A3", "B4", "D5", "E6", "F4", "H3", "I2(5)". Cached, immutable.
const RootSystem &root_system(const std::string &type);

struct ClosureResult {
  std::vector<int> roots;    // root indices of the closed subsystem, sorted
  std::string identification; // e.g. "A8", "A1xA1", "D4"
  int rank = 0;
};
ClosureResult reflection_closure(const RootSystem &r, const std::vector<int> &seed_roots);
// Root indices reachable from the seed under the seed reflections, without identification.
std::vector<int> closure_roots(const RootSystem &r, const std::vector<int> &seed_roots);

// Type label from irreducible data; components joined with 'x'.
std::string identify_irreducible(int rank, std::size_t root_count, int length_classes);

std::vector<std::pair<std::string, std::string>> same_rank_inclusions(); // (sub, super)
std::vector<std::string> inclusions_into(const std::string &super);

ArrangementMatrix gamma0_A(int n);
ArrangementMatrix gamma0_D(int n);
ArrangementMatrix gamma0_B(int n);
// "A3", "B3", "D5" from closed forms; others from pinned fixtures ("E6:1" picks a bucket).
ArrangementMatrix universal_matrix(const std::string &type);

struct ExtensionSpec {
  std::string family; // "AK","A1","E1","E2","B1","B2","B3","Dext1".."Dext6"
  int n = 0, k = 0, p = 0, q = 0;
};
ArrangementMatrix extension_matrix(const ExtensionSpec &s);
// Closed form as printed, and whether params are legal.
ExactNumber extension_det_formula(const ExtensionSpec &s);
std::vector<ExtensionSpec> extension_sweep(const std::string &family, int nmax);
// a_1 = (0,...,0, q x -1, p x 1) of length m
std::vector<int> a1_vector(int m, int p, int q);

// Pinned representatives produced by tools/gen_fixtures.
struct Fixture {
  std::string group;
  std::string bucket; // fingerprint string
  std::vector<int> reflections;
  std::string note;
};
const std::vector<Fixture> &fixtures();
std::vector<Fixture> fixtures_for(const std::string &group);

} // namespace hw
