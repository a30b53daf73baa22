#pragma once

#include "hurwitz/braid.hpp"
#include "hurwitz/catalog.hpp"

#include <utility>
#include <vector>

namespace hw {

// Transpositions (i j) on {1..m}, 1-based as in the permutation graphs.
using Transposition = std::pair<int, int>;

bool generates_full_symmetric(const std::vector<Transposition> &t, int m = 0);
// Throws std::invalid_argument when t does not generate S_m.
bool product_cycle_check(const std::vector<Transposition> &t, int m = 0);
// Word whose action turns t into a chain (v1 v2), (v2 v3), ..., (vn vn+1) with consecutive numbering.
BraidWord canonical_reduce_A(const std::vector<Transposition> &t, long cap = 2000000);
bool is_linear_chain(const std::vector<Transposition> &t);
std::vector<Transposition> hurwitz_transpositions(std::vector<Transposition> t, const BraidWord &w);

// eps_i -> sign[i] * eps_{image[i]}, 0-based.
struct SignedPermutation {
  std::vector<int> image;
  std::vector<int> sign;

  static SignedPermutation identity(int n);
  static SignedPermutation transposition(int n, int i, int j, int s); // eps_i <-> s eps_j, 1-based
  static SignedPermutation sign_change(int n, int i);                 // eps_i -> -eps_i, 1-based
  int size() const { return (int)image.size(); }
  SignedPermutation operator*(const SignedPermutation &o) const; // (a*b)(x) = a(b(x))
  SignedPermutation inverse() const;
  friend bool operator==(const SignedPermutation &a, const SignedPermutation &b) {
    return a.image == b.image && a.sign == b.sign;
  }
};

enum class ReflectionClass { A, B, None }; // A: transposition with or without sign; B: sign change
ReflectionClass reflection_class(const SignedPermutation &p);

// Signed permutation of a B_n or D_n reflection, read off the root coordinates.
SignedPermutation signed_reflection(const RootSystem &r, int refl);
std::vector<Perm> as_root_perms(const RootSystem &r, const std::vector<SignedPermutation> &t);

// Cycle lengths of the ordered product on the n pairs {eps_i, -eps_i}.
std::vector<int> pair_cycles(const std::vector<SignedPermutation> &t);
// {k, n-k} with k <= n-k; the tuple must generate W(D_n).
std::pair<int, int> dn_invariant(const std::vector<SignedPermutation> &t);

} // namespace hw
