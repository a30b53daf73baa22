#pragma once

#include "hurwitz/arrangement.hpp"
#include "hurwitz/braid.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hw {

struct SplitUV {
  Mat U; // strictly upper part of B
  Mat V; // B - U
};
SplitUV split_UV(const ArrangementMatrix &b);
// (I + U)^{-1} (I - V)
Mat cox_matrix(const ArrangementMatrix &b);

std::optional<long> element_order(const Mat &m, long cap);

struct Fingerprint {
  std::vector<std::pair<long, long>> cyclotomic; // (d, multiplicity), d ascending
  std::vector<std::pair<long, long>> quadratic;  // (p, q): x^2 - 2cos(pi p/q) x + 1, p/q ascending, repeated
  Poly residual;                                  // empty when fully matched

  std::string to_string() const; // "Phi3*Phi12", "Q(1/15)*Q(11/15)"
  Poly reassemble() const;
  // lcm of the root orders implied by the factors, or nullopt with a residual
  std::optional<long> implied_order() const;
  friend bool operator==(const Fingerprint &a, const Fingerprint &b) {
    return a.cyclotomic == b.cyclotomic && a.quadratic == b.quadratic && a.residual == b.residual;
  }
};

struct FingerprintOptions {
  long max_d = 1000;
  long max_q = 120;
};
Fingerprint cyclo_fingerprint(const Poly &p, const FingerprintOptions &opt = {});
Fingerprint fingerprint_of(const Mat &m);

Mat quasicox_of_tuple(const std::vector<Mat> &t);
Perm quasicox_of_tuple(const std::vector<Perm> &t);

} // namespace hw
