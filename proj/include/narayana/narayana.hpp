#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "narayana/prime.hpp"

namespace narayana {

/// A point (n, k) of the Narayana triangle together with the prime under
/// test. Requires n >= 1 and k <= n - 1; otherwise the constructor throws
/// std::invalid_argument.
class NarayanaQuery {
 public:
  NarayanaQuery(PrimeBase p, std::uint64_t n, std::uint64_t k);

  PrimeBase p() const noexcept { return p_; }
  std::uint64_t n() const noexcept { return n_; }
  std::uint64_t k() const noexcept { return k_; }

 private:
  PrimeBase p_;
  std::uint64_t n_;
  std::uint64_t k_;
};

/// Which branch of the digit criterion was evaluated.
enum class CriterionCase {
  case1,               // p does not divide n
  case2_p_divides_k,   // p | n and p | k
  case2_p_ndivides_k,  // p | n and p does not divide k
  not_applicable,
};

/// The individual digit conditions of the criterion.
enum class Condition { c1a, c1b, c2a, c2b, c2c };

std::string_view to_string(CriterionCase c) noexcept;
/// "1(a)", "1(b)", "2(a)", "2(b)" or "2(c)".
std::string_view to_string(Condition c) noexcept;

/// The first condition that failed and the digit index where it failed.
struct Violation {
  Condition condition;
  std::size_t digit_index;

  std::string describe() const;
};

struct DivisibilityVerdict {
  bool divisible = false;
  CriterionCase matched_case = CriterionCase::not_applicable;
  std::optional<Violation> witness;  // present iff divisible
};

/// p | N(n,k) decided from the base-p digits of n and k alone, in
/// O(log_p n) digit operations. N(n,k) itself is never formed.
DivisibilityVerdict prime_divides_narayana(const NarayanaQuery& q);

/// p-adic orders of the factors of N(n,k) = C(n,k) C(n,k+1) / n.
struct ValuationReport {
  unsigned omega_binom_k = 0;
  unsigned omega_binom_k1 = 0;
  unsigned omega_n = 0;
  unsigned omega_narayana = 0;
};

/// ω_p(N(n,k)) = ω_p(C(n,k)) + ω_p(C(n,k+1)) - ω_p(n), each term by carry
/// counting. Throws std::logic_error if the difference would be negative.
ValuationReport narayana_valuation(const NarayanaQuery& q);

}  // namespace narayana
