#include "narayana/narayana.hpp"

#include <stdexcept>

#include "narayana/digits.hpp"
#include "narayana/kummer.hpp"

namespace narayana {

NarayanaQuery::NarayanaQuery(PrimeBase p, std::uint64_t n, std::uint64_t k)
    : p_(p), n_(n), k_(k) {
  if (n == 0) throw std::invalid_argument("n must be at least 1");
  if (k >= n) {
    throw std::invalid_argument("k=" + std::to_string(k) +
                                " must be below n=" + std::to_string(n));
  }
}

std::string_view to_string(CriterionCase c) noexcept {
  switch (c) {
    case CriterionCase::case1:
      return "case1";
    case CriterionCase::case2_p_divides_k:
      return "case2_p_divides_k";
    case CriterionCase::case2_p_ndivides_k:
      return "case2_p_ndivides_k";
    case CriterionCase::not_applicable:
      break;
  }
  return "not_applicable";
}

std::string_view to_string(Condition c) noexcept {
  switch (c) {
    case Condition::c1a:
      return "1(a)";
    case Condition::c1b:
      return "1(b)";
    case Condition::c2a:
      return "2(a)";
    case Condition::c2b:
      return "2(b)";
    case Condition::c2c:
      break;
  }
  return "2(c)";
}

std::string Violation::describe() const {
  return "violates " + std::string(to_string(condition)) + " at digit " +
         std::to_string(digit_index);
}

namespace {

DivisibilityVerdict divisible_by(CriterionCase c, Condition cond,
                                 std::size_t index) {
  return {true, c, Violation{cond, index}};
}

DivisibilityVerdict case_not_divisible_by_p(const DigitString& nd,
                                            const DigitString& kd,
                                            std::uint64_t top) {
  constexpr auto kCase = CriterionCase::case1;
  for (std::size_t i = 0; i < nd.size(); ++i) {
    if (kd[i] > nd[i]) return divisible_by(kCase, Condition::c1a, i);
  }
  // When every padded digit of k is p-1 there is no such j and 1(b) holds.
  for (std::size_t j = 0; j < nd.size(); ++j) {
    if (kd[j] != top) {
      if (kd[j] >= nd[j]) return divisible_by(kCase, Condition::c1b, j);
      break;
    }
  }
  return {false, kCase, std::nullopt};
}

DivisibilityVerdict case_divisible_by_p(const DigitString& nd,
                                        const DigitString& kd,
                                        std::size_t omega, std::uint64_t top) {
  const bool p_divides_k = kd[0] == 0;
  const auto kind = p_divides_k ? CriterionCase::case2_p_divides_k
                                : CriterionCase::case2_p_ndivides_k;
  for (std::size_t i = omega + 1; i < nd.size(); ++i) {
    if (kd[i] > nd[i]) return divisible_by(kind, Condition::c2a, i);
  }
  if (kd[omega] >= nd[omega]) {
    return divisible_by(kind, Condition::c2b, omega);
  }
  const std::uint64_t required = p_divides_k ? 0 : top;
  for (std::size_t i = 0; i < omega; ++i) {
    if (kd[i] != required) return divisible_by(kind, Condition::c2c, i);
  }
  return {false, kind, std::nullopt};
}

}  // namespace

DivisibilityVerdict prime_divides_narayana(const NarayanaQuery& q) {
  const DigitString nd = decompose(q.n(), q.p());
  const DigitString kd = decompose(q.k(), q.p(), nd.size());
  const std::uint64_t top = q.p().value() - 1;

  // ω_p(n) is the index of the first nonzero digit of n.
  std::size_t omega = 0;
  while (nd[omega] == 0) ++omega;

  if (omega == 0) return case_not_divisible_by_p(nd, kd, top);
  return case_divisible_by_p(nd, kd, omega, top);
}

ValuationReport narayana_valuation(const NarayanaQuery& q) {
  ValuationReport r;
  r.omega_binom_k = static_cast<unsigned>(
      binomial_valuation_by_addition(q.n(), q.k(), q.p()).count());
  r.omega_binom_k1 = static_cast<unsigned>(
      binomial_valuation_by_addition(q.n(), q.k() + 1, q.p()).count());
  r.omega_n = valuation(q.n(), q.p());
  const unsigned numerator = r.omega_binom_k + r.omega_binom_k1;
  if (numerator < r.omega_n) {
    throw std::logic_error("negative Narayana valuation at n=" +
                           std::to_string(q.n()) +
                           ", k=" + std::to_string(q.k()));
  }
  r.omega_narayana = numerator - r.omega_n;
  return r;
}

}  // namespace narayana
