#include "narayana/digits.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace narayana {

DigitString::DigitString(PrimeBase base, std::vector<std::uint64_t> digits)
    : base_(base), digits_(std::move(digits)) {
  if (digits_.empty()) {
    throw std::invalid_argument("digit string must have at least one digit");
  }
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (digits_[i] >= base_.value()) {
      throw std::invalid_argument("digit " + std::to_string(digits_[i]) +
                                  " at index " + std::to_string(i) +
                                  " out of range for base " +
                                  std::to_string(base_.value()));
    }
  }
}

DigitString DigitString::padded(std::size_t length) const {
  std::vector<std::uint64_t> out = digits_;
  if (out.size() < length) out.resize(length, 0);
  return DigitString(base_, std::move(out));
}

bool DigitString::value_equal(const DigitString& other) const noexcept {
  if (base_ != other.base_) return false;
  const std::size_t len = std::max(size(), other.size());
  for (std::size_t i = 0; i < len; ++i) {
    if ((*this)[i] != other[i]) return false;
  }
  return true;
}

DigitString decompose(std::uint64_t n, PrimeBase p, std::size_t min_length) {
  std::vector<std::uint64_t> out;
  const std::uint64_t base = p.value();
  do {
    out.push_back(n % base);
    n /= base;
  } while (n != 0);
  if (out.size() < min_length) out.resize(min_length, 0);
  return DigitString(p, std::move(out));
}

std::uint64_t reconstruct(const DigitString& d) {
  const auto digits = d.digits();
  const std::uint64_t base = d.base().value();
  // Horner from the top digit; leading padding zeros never overflow.
  std::uint64_t value = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    std::uint64_t scaled = 0;
    if (__builtin_mul_overflow(value, base, &scaled) ||
        __builtin_add_overflow(scaled, *it, &value)) {
      throw std::overflow_error("digit string value exceeds 64 bits");
    }
  }
  return value;
}

DigitString increment(const DigitString& d) {
  const std::uint64_t top = d.base().value() - 1;
  std::vector<std::uint64_t> out(d.digits().begin(), d.digits().end());
  // j is the first index whose digit is not p-1; digits below j roll to 0.
  std::size_t j = 0;
  while (j < out.size() && out[j] == top) {
    out[j] = 0;
    ++j;
  }
  if (j == out.size()) {
    out.push_back(1);
  } else {
    ++out[j];
  }
  return DigitString(d.base(), std::move(out));
}

unsigned valuation(std::uint64_t n, PrimeBase p) {
  if (n == 0) throw std::invalid_argument("valuation of 0 is undefined");
  unsigned e = 0;
  while (n % p.value() == 0) {
    n /= p.value();
    ++e;
  }
  return e;
}

std::uint64_t checked_power(PrimeBase p, unsigned m) {
  std::uint64_t result = 1;
  for (unsigned i = 0; i < m; ++i) {
    if (__builtin_mul_overflow(result, p.value(), &result)) {
      throw std::overflow_error(std::to_string(p.value()) + "^" +
                                std::to_string(m) + " exceeds 64 bits");
    }
  }
  return result;
}

}  // namespace narayana
