#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "narayana/prime.hpp"

namespace narayana {

/// Digit positions producing a carry when k and n-k are added in base p.
/// The number of carries is the p-adic order of C(n, k).
struct CarryTrace {
  std::vector<std::size_t> carry_positions;  // ascending
  std::size_t padded_length = 0;

  std::size_t count() const noexcept { return carry_positions.size(); }
};

/// Adds Δ_p(k) and Δ_p(n-k) digit by digit and records every carry-out.
/// Throws std::invalid_argument if k > n.
CarryTrace binomial_valuation_by_addition(std::uint64_t n, std::uint64_t k,
                                          PrimeBase p);

/// Counts indices i with k_i > n_i, or reached by a run of equal digits
/// from such an index. This is the borrow chain of n - k read directly off
/// the digits of n and k. Throws std::invalid_argument if k > n.
unsigned binomial_valuation_by_indices(std::uint64_t n, std::uint64_t k,
                                       PrimeBase p);

}  // namespace narayana
