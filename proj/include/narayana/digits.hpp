#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "narayana/prime.hpp"

namespace narayana {

/// Little-endian base-p digits: index i holds the coefficient of p^i.
/// Trailing (high-order) zeros are allowed and act as padding.
class DigitString {
 public:
  /// Throws std::invalid_argument if `digits` is empty or a digit is >= p.
  DigitString(PrimeBase base, std::vector<std::uint64_t> digits);

  PrimeBase base() const noexcept { return base_; }
  std::size_t size() const noexcept { return digits_.size(); }
  std::span<const std::uint64_t> digits() const noexcept { return digits_; }

  /// Digit at index i; zero for i >= size(), which is the padding convention.
  std::uint64_t operator[](std::size_t i) const noexcept {
    return i < digits_.size() ? digits_[i] : 0;
  }

  /// Copy extended with zeros to at least `length` digits.
  DigitString padded(std::size_t length) const;

  /// Value equality: same base and equal digits after padding.
  bool value_equal(const DigitString& other) const noexcept;

  /// Exact digit-sequence equality, padding included.
  friend bool operator==(const DigitString&, const DigitString&) = default;

 private:
  PrimeBase base_;
  std::vector<std::uint64_t> digits_;
};

/// Base-p digits of n, zero-padded to at least max(min_length, 1) digits.
DigitString decompose(std::uint64_t n, PrimeBase p, std::size_t min_length = 0);

/// Sum of d_i p^i. Throws std::overflow_error if the value exceeds 64 bits.
std::uint64_t reconstruct(const DigitString& d);

/// Digits of reconstruct(d) + 1. Grows by one digit only when every digit
/// of d is p-1.
DigitString increment(const DigitString& d);

/// Largest e with p^e | n. Throws std::invalid_argument for n == 0.
unsigned valuation(std::uint64_t n, PrimeBase p);

/// p^m, or std::overflow_error if it does not fit in 64 bits.
std::uint64_t checked_power(PrimeBase p, unsigned m);

}  // namespace narayana
