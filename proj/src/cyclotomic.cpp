#include "hurwitz/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace hw {

const std::vector<mpz_class> &cyclotomic_poly(long n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_poly: n must be positive");
  static std::recursive_mutex mu;
  static std::map<long, std::vector<mpz_class>> cache;
  std::lock_guard<std::recursive_mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  // x^n - 1 divided by Phi_d for every proper divisor d
  std::vector<mpz_class> p(n + 1);
  p[0] = -1;
  p[n] = 1;
  for (long d = 1; d < n; ++d) {
    if (n % d) continue;
    const auto &q = cyclotomic_poly(d);
    std::vector<mpz_class> quo(p.size() - q.size() + 1);
    for (long k = (long)quo.size() - 1; k >= 0; --k) {
      mpz_class c = p[k + q.size() - 1]; // q is monic
      quo[k] = c;
      if (c != 0)
        for (std::size_t j = 0; j < q.size(); ++j) p[k + j] -= c * q[j];
    }
    p = std::move(quo);
  }
  return cache.emplace(n, std::move(p)).first->second;
}

} // namespace hw
