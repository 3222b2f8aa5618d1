#include "narayana/kummer.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "narayana/digits.hpp"

namespace narayana {

namespace {

void require_k_le_n(std::uint64_t n, std::uint64_t k) {
  if (k > n) {
    throw std::invalid_argument("binomial index k=" + std::to_string(k) +
                                " exceeds n=" + std::to_string(n));
  }
}

}  // namespace

CarryTrace binomial_valuation_by_addition(std::uint64_t n, std::uint64_t k,
                                          PrimeBase p) {
  require_k_le_n(n, k);
  const DigitString a = decompose(k, p);
  const DigitString b = decompose(n - k, p);
  CarryTrace trace;
  // One extra position so a carry out of the top digit still has an index.
  trace.padded_length = std::max(a.size(), b.size()) + 1;

  using u128 = unsigned __int128;
  const u128 base = p.value();
  u128 carry = 0;
  for (std::size_t i = 0; i < trace.padded_length; ++i) {
    const u128 sum = static_cast<u128>(a[i]) + b[i] + carry;
    carry = sum >= base ? 1 : 0;
    if (carry != 0) trace.carry_positions.push_back(i);
  }
  return trace;
}

unsigned binomial_valuation_by_indices(std::uint64_t n, std::uint64_t k,
                                       PrimeBase p) {
  require_k_le_n(n, k);
  const DigitString nd = decompose(n, p);
  const DigitString kd = decompose(k, p, nd.size());

  unsigned count = 0;
  // True while the scan sits inside a run k_j > n_j, k_{j+1} = n_{j+1}, ...
  bool in_chain = false;
  for (std::size_t i = 0; i < nd.size(); ++i) {
    if (kd[i] > nd[i]) {
      in_chain = true;
      ++count;
    } else if (kd[i] == nd[i]) {
      if (in_chain) ++count;
    } else {
      in_chain = false;
    }
  }
  return count;
}

}  // namespace narayana
