#pragma once

#include <gmpxx.h>

#include <vector>

namespace hw {

// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
const std::vector<mpz_class> &cyclotomic_poly(long n);

} // namespace hw
