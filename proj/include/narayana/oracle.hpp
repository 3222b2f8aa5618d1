#pragma once

// Exact reference values for tests and cross-checks. This layer uses only
// arbitrary-precision arithmetic and never touches the digit machinery.

#include <cstdint>

#include <gmpxx.h>

#include "narayana/prime.hpp"

namespace narayana::oracle {

using ExactInteger = mpz_class;

/// C(n, k), zero when k > n.
ExactInteger binomial_exact(std::uint64_t n, std::uint64_t k);

/// N(n, k) = C(n,k) C(n,k+1) / n for n >= 1 and k <= n - 1.
/// Throws std::invalid_argument outside that domain and std::logic_error if
/// the division leaves a remainder.
ExactInteger narayana_exact(std::uint64_t n, std::uint64_t k);

/// C_n = C(2n, n) / (n + 1).
ExactInteger catalan_exact(std::uint64_t n);

/// Order of p in x by repeated trial division. Throws std::invalid_argument
/// for x <= 0.
unsigned valuation_exact(const ExactInteger& x, PrimeBase p);

}  // namespace narayana::oracle
