#pragma once

#include "hurwitz/arrangement.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hw {

// Letters are (i, e) with 1-based generator index i and exponent e = +-1.
// Words act from the left: the rightmost letter is applied first.
struct BraidWord {
  std::vector<std::pair<int, int>> letters;

  static BraidWord parse(std::string_view text); // "s1 s2^-1 s1"
  std::string to_string() const;
  BraidWord inverse() const;
  BraidWord operator*(const BraidWord &o) const; // concatenation
  bool empty() const { return letters.empty(); }
  std::size_t size() const { return letters.size(); }
  int max_index() const;
};

ArrangementMatrix act_sigma(const ArrangementMatrix &b, int i, int e);
Mat k_matrix(const ArrangementMatrix &b, int i, int e = 1);
ArrangementMatrix act_word(const ArrangementMatrix &b, const BraidWord &w);

using Perm = std::vector<std::uint16_t>;
Perm perm_mul(const Perm &a, const Perm &b); // (a*b)(x) = a(b(x))
Perm perm_inv(const Perm &a);
Perm perm_identity(std::size_t n);

std::vector<Perm> hurwitz(const std::vector<Perm> &t, int i, int e);
std::vector<Mat> hurwitz(const std::vector<Mat> &t, int i, int e);
std::vector<Perm> hurwitz_word(std::vector<Perm> t, const BraidWord &w);
std::vector<Mat> hurwitz_word(std::vector<Mat> t, const BraidWord &w);

// Braid action on upper unitriangular (Stokes) matrices.
Mat stokes_act(const Mat &s, int i, int e);

// Word built from commuting swaps and the cyclic move s_{n-1}...s_1 whose action
// puts original vertex target[k] at position k (up to sign equivalence).
BraidWord reorder_tree(const ArrangementMatrix &b, const std::vector<int> &target);
BraidWord cyclic_word(int n);

// (ascents, descents) of the index function around a closed vertex walk.
std::pair<int, int> cycle_invariants(const std::vector<int> &index_along_cycle);

} // namespace hw
