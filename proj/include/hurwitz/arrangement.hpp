#pragma once

#include "hurwitz/linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hw {

// Symmetric matrix with 2 on the diagonal.
class ArrangementMatrix {
public:
  ArrangementMatrix() = default;
  explicit ArrangementMatrix(Mat m); // validates
  static ArrangementMatrix from_rows(const std::vector<Vec> &rows) { return ArrangementMatrix(Mat::from_rows(rows)); }
  // All off-diagonal entries equal to v.
  static ArrangementMatrix uniform(std::size_t n, const ExactNumber &v);
  static ArrangementMatrix unchecked(Mat m) {
    ArrangementMatrix a;
    a.m_ = std::move(m);
    return a;
  }

  std::size_t n() const { return m_.rows(); }
  const ExactNumber &operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  const Mat &mat() const { return m_; }
  // Sets (i,j) and (j,i).
  void set(std::size_t i, std::size_t j, const ExactNumber &v);

  std::string encode() const;
  friend bool operator==(const ArrangementMatrix &a, const ArrangementMatrix &b) { return a.m_ == b.m_; }
  friend bool operator!=(const ArrangementMatrix &a, const ArrangementMatrix &b) { return !(a == b); }

private:
  Mat m_;
};

using SignVector = std::vector<int>;

ArrangementMatrix apply_signs(const ArrangementMatrix &b, const SignVector &lambda);
// Lexicographically minimal sign conjugate, entries ordered by canonical encoding.
ArrangementMatrix sign_canonical(const ArrangementMatrix &b);
ArrangementMatrix sign_canonical_exhaustive(const ArrangementMatrix &b);
// Reorders indices: result(i,j) = b(perm[i], perm[j]).
ArrangementMatrix permute(const ArrangementMatrix &b, const std::vector<int> &perm);

struct GraphEdge {
  int i, j;
  int sign;  // +1 or -1
  long n, k; // entry = sign * 2cos(pi k/n), 0 < k/n < 1/2; n = 0 when raw
  std::optional<ExactNumber> raw;
  std::string label() const; // 3 omitted, 5/2 as 5', sign only when negative
};

struct LabeledGraph {
  int vertices = 0;
  std::vector<GraphEdge> edges;
};

LabeledGraph to_graph(const ArrangementMatrix &b);
ArrangementMatrix from_graph(const LabeledGraph &g);
std::string to_dot(const LabeledGraph &g, const std::string &name = "B");
// Matches an entry against +-2cos(pi k/n) with 0 < k/n < 1/2.
std::optional<GraphEdge> match_cos_label(const ExactNumber &v);

struct Decomposition {
  bool decomposable;
  std::vector<std::vector<int>> parts; // connected components, 0-based
};
Decomposition is_decomposable(const ArrangementMatrix &b);

struct MinorChain {
  std::vector<std::vector<int>> index_sets; // B_n, B_{n-1}, ..., B_1 as index sets
  std::vector<int> s;                       // s_1, ..., s_n
};
MinorChain minor_chain(const ArrangementMatrix &b);

} // namespace hw
