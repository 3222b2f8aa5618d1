#pragma once

#include <cstdint>

namespace narayana {

/// Deterministic primality test valid for every 64-bit input.
bool is_prime(std::uint64_t n) noexcept;

/// A prime modulus. Construction from a composite or from a value below 2
/// throws std::invalid_argument.
class PrimeBase {
 public:
  explicit PrimeBase(std::uint64_t p);

  std::uint64_t value() const noexcept { return p_; }
  operator std::uint64_t() const noexcept { return p_; }

  friend bool operator==(PrimeBase, PrimeBase) = default;

 private:
  std::uint64_t p_;
};

}  // namespace narayana
