#include "narayana/prime.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace narayana {

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

// Strong probable-prime test to base a; n odd, n > a.
bool strong_probable_prime(std::uint64_t n, std::uint64_t a) {
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  std::uint64_t x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int r = 1; r < s; ++r) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

constexpr std::array<std::uint64_t, 12> kSmallPrimes = {2,  3,  5,  7,  11, 13,
                                                        17, 19, 23, 29, 31, 37};

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t q : kSmallPrimes) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  // The first twelve primes form a deterministic witness set below 3.3e24.
  for (std::uint64_t a : kSmallPrimes) {
    if (!strong_probable_prime(n, a)) return false;
  }
  return true;
}

PrimeBase::PrimeBase(std::uint64_t p) : p_(p) {
  if (!is_prime(p)) {
    throw std::invalid_argument("base " + std::to_string(p) + " is not prime");
  }
}

}  // namespace narayana
