#pragma once

#include "hurwitz/arrangement.hpp"
#include "hurwitz/braid.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace hw {

// Reflections r_i = I - v_i (x) v_i^vee in some basis of the minimal space.
struct Realization {
  std::size_t dim = 0;
  std::vector<Vec> v;     // vectors, coordinates in the current basis
  std::vector<Vec> vdual; // covectors, coordinates in the dual of the current basis
  // bookkeeping of the construction, 0-based index sets
  std::vector<int> I, Ip, J, Jp;
  Mat a_ext, b_ext; // a', b' extended to all subscripts (n x n)
  // columns: current basis vectors in the coordinates of {u_i}_{I''} u {w_j}_{J'}
  Mat to_construction;

  std::size_t size() const { return v.size(); }
  Mat reflection(std::size_t i) const;
  std::vector<Mat> reflections() const;
  Mat gram() const; // v_i^vee(v_j)
  Mat product() const;
};

Realization unique_realization(const ArrangementMatrix &b);
// Basis {v_i}_{i in I} for the lexicographically first non-degenerate principal minor of size rank(B).
Realization minimal_realization(const ArrangementMatrix &b);

struct RealizationSpec {
  std::vector<int> I, Ip, J, Jp; // 0-based; I, J index a non-degenerate block of size rank(B)
  // free constants a'_{i i1}, i outside I'' ascending, then i1 in I' ascending; likewise b'_{j1 j}
  std::vector<ExactNumber> a, b;
};
// Explicit construction from (I, I', J, J'). The result is expressed in the basis {v_j}_{j in J''} u {u_i}_{i in I'}
// unless construction_basis is set.
Realization general_realization(const ArrangementMatrix &b, const RealizationSpec &spec, bool construction_basis = false);
// Lexicographically first row/column basis with I = J.
std::vector<int> first_basis(const ArrangementMatrix &b);

// Exact kernel checks: every vector killed by all covectors lies in span(v), and dually.
bool is_minimal(const Realization &r);
bool gram_matches(const Realization &r, const ArrangementMatrix &b);

// Quasicoxeter element from the block formula, in the realization's basis.
Mat quasicox_degenerate(const ArrangementMatrix &b, const Realization &r);

// Angles are rational multiples of pi, stored as p/q in [0, 2).
struct Angle {
  long p = 0, q = 1;
  static Angle make(long p, long q);
  ExactNumber two_cos() const;
  friend bool operator==(const Angle &a, const Angle &b) { return a.p == b.p && a.q == b.q; }
};
Angle operator+(Angle a, Angle b);
Angle operator-(Angle a, Angle b);
// Off-diagonals (2cos a, 2cos b, 2cos(a - b)).
ArrangementMatrix degenerate_3x3(Angle alpha, Angle beta);
// Parameter map matching act_sigma up to sign equivalence.
std::pair<Angle, Angle> braid_on_params(Angle alpha, Angle beta, int i, int e);

// Whether r_i lies in the group generated by the other reflections of the minimal realization.
// Decided through the orbit of the other roots, which must stay below budget.
bool is_redundant(const ArrangementMatrix &b, std::size_t i, std::size_t budget = 100000);
// Evaluates a word in the reflections of a realization, e.g. {3,4,1} = r_3 r_4 r_1 (1-based).
Mat reflection_word(const Realization &r, const std::vector<int> &word);

} // namespace hw
