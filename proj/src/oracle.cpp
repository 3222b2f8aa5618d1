#include "narayana/oracle.hpp"

#include <stdexcept>
#include <string>

namespace narayana::oracle {

namespace {

ExactInteger from_u64(std::uint64_t v) {
  ExactInteger out;
  mpz_import(out.get_mpz_t(), 1, -1, sizeof v, 0, 0, &v);
  return out;
}

ExactInteger exact_quotient(const ExactInteger& num, const ExactInteger& den,
                            const char* what) {
  ExactInteger q;
  ExactInteger r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (r != 0) throw std::logic_error(std::string("inexact division in ") + what);
  return q;
}

}  // namespace

ExactInteger binomial_exact(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  // After step i the accumulator is C(n - k + i, i), so each division is exact.
  ExactInteger acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc *= from_u64(n - k + i);
    mpz_divexact(acc.get_mpz_t(), acc.get_mpz_t(), from_u64(i).get_mpz_t());
  }
  return acc;
}

ExactInteger narayana_exact(std::uint64_t n, std::uint64_t k) {
  if (n == 0 || k >= n) {
    throw std::invalid_argument("N(n,k) requires 0 <= k < n, got n=" +
                                std::to_string(n) + ", k=" + std::to_string(k));
  }
  return exact_quotient(binomial_exact(n, k) * binomial_exact(n, k + 1),
                        from_u64(n), "narayana_exact");
}

ExactInteger catalan_exact(std::uint64_t n) {
  return exact_quotient(binomial_exact(2 * n, n), from_u64(n) + 1,
                        "catalan_exact");
}

unsigned valuation_exact(const ExactInteger& x, PrimeBase p) {
  if (x <= 0) throw std::invalid_argument("valuation of a nonpositive value");
  ExactInteger rest = x;
  const ExactInteger divisor = from_u64(p.value());
  unsigned e = 0;
  while (mpz_divisible_p(rest.get_mpz_t(), divisor.get_mpz_t()) != 0) {
    mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), divisor.get_mpz_t());
    ++e;
  }
  return e;
}

}  // namespace narayana::oracle
