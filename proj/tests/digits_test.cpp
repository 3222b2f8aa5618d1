#include "narayana/digits.hpp"

#include <gtest/gtest.h>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace narayana {
namespace {

using Digits = std::vector<std::uint64_t>;

Digits as_vector(const DigitString& d) {
  return {d.digits().begin(), d.digits().end()};
}

TEST(PrimeBaseTest, AcceptsPrimes) {
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 13ull, 65537ull,
                          18446744073709551557ull}) {
    EXPECT_NO_THROW(PrimeBase{p}) << p;
  }
}

TEST(PrimeBaseTest, RejectsCompositesAndSmallValues) {
  // 3215031751 is a strong pseudoprime to bases 2, 3, 5 and 7.
  for (std::uint64_t c : {0ull, 1ull, 4ull, 6ull, 9ull, 561ull, 3215031751ull,
                          18446744073709551615ull}) {
    EXPECT_THROW(PrimeBase{c}, std::invalid_argument) << c;
  }
}

TEST(PrimeBaseTest, MatchesSieveBelowOneHundredThousand) {
  constexpr std::uint64_t kLimit = 100000;
  std::vector<bool> composite(kLimit, false);
  for (std::uint64_t i = 2; i * i < kLimit; ++i) {
    if (composite[i]) continue;
    for (std::uint64_t j = i * i; j < kLimit; j += i) composite[j] = true;
  }
  for (std::uint64_t n = 0; n < kLimit; ++n) {
    ASSERT_EQ(is_prime(n), n >= 2 && !composite[n]) << n;
  }
}

TEST(DecomposeTest, Examples) {
  EXPECT_EQ(as_vector(decompose(0, PrimeBase(2), 1)), (Digits{0}));
  EXPECT_EQ(as_vector(decompose(0, PrimeBase(2), 0)), (Digits{0}));
  EXPECT_EQ(as_vector(decompose(7, PrimeBase(2), 0)), (Digits{1, 1, 1}));
  EXPECT_EQ(as_vector(decompose(5, PrimeBase(3), 3)), (Digits{2, 1, 0}));
}

TEST(DigitStringTest, RejectsBadDigits) {
  EXPECT_THROW(DigitString(PrimeBase(3), {}), std::invalid_argument);
  EXPECT_THROW(DigitString(PrimeBase(3), {1, 3}), std::invalid_argument);
}

TEST(DigitStringTest, ValueEqualityIgnoresPadding) {
  const PrimeBase p(5);
  EXPECT_TRUE(decompose(12, p).value_equal(decompose(12, p, 6)));
  EXPECT_FALSE(decompose(12, p) == decompose(12, p, 6));
  EXPECT_FALSE(decompose(12, p).value_equal(decompose(13, p)));
}

TEST(ReconstructTest, Examples) {
  EXPECT_EQ(reconstruct(DigitString(PrimeBase(2), {1, 1, 1})), 7u);
  EXPECT_EQ(reconstruct(DigitString(PrimeBase(5), {0})), 0u);
  EXPECT_EQ(reconstruct(DigitString(PrimeBase(3), {2, 1, 0})), 5u);
}

TEST(ReconstructTest, OverflowIsAnError) {
  EXPECT_EQ(reconstruct(decompose(UINT64_MAX, PrimeBase(2))), UINT64_MAX);
  Digits too_big(65, 0);
  too_big[64] = 1;
  EXPECT_THROW(reconstruct(DigitString(PrimeBase(2), too_big)),
               std::overflow_error);
}

TEST(IncrementTest, Examples) {
  EXPECT_EQ(as_vector(increment(DigitString(PrimeBase(2), {1, 1}))),
            (Digits{0, 0, 1}));
  EXPECT_EQ(as_vector(increment(DigitString(PrimeBase(2), {0, 1}))),
            (Digits{1, 1}));
  EXPECT_EQ(as_vector(increment(DigitString(PrimeBase(3), {2, 2, 1}))),
            (Digits{0, 0, 2}));
}

TEST(ValuationTest, Examples) {
  EXPECT_EQ(valuation(8, PrimeBase(2)), 3u);
  EXPECT_EQ(valuation(7, PrimeBase(2)), 0u);
  EXPECT_EQ(valuation(45, PrimeBase(3)), 2u);
  EXPECT_EQ(valuation(std::uint64_t{1} << 63, PrimeBase(2)), 63u);
  EXPECT_THROW(valuation(0, PrimeBase(3)), std::invalid_argument);
}

TEST(CheckedPowerTest, DetectsOverflow) {
  EXPECT_EQ(checked_power(PrimeBase(3), 0), 1u);
  EXPECT_EQ(checked_power(PrimeBase(2), 63), std::uint64_t{1} << 63);
  EXPECT_THROW(checked_power(PrimeBase(2), 64), std::overflow_error);
}

// Random 64-bit values, skewed toward small magnitudes so short digit
// strings and all-(p-1) patterns show up.
class DigitsPropertyTest : public ::testing::TestWithParam<std::uint64_t> {
 protected:
  std::uint64_t next_value() {
    const unsigned bits = std::uniform_int_distribution<unsigned>(1, 63)(rng_);
    return std::uniform_int_distribution<std::uint64_t>(
        0, (std::uint64_t{1} << bits) - 1)(rng_);
  }
  std::mt19937_64 rng_{GetParam()};
};

TEST_P(DigitsPropertyTest, RoundTripAndDigitBound) {
  const PrimeBase p(GetParam());
  for (int i = 0; i < 2000; ++i) {
    const std::uint64_t n = next_value();
    const std::size_t pad = static_cast<std::size_t>(i % 70);
    const DigitString d = decompose(n, p, pad);
    ASSERT_GE(d.size(), std::max<std::size_t>(pad, 1));
    for (std::uint64_t digit : d.digits()) ASSERT_LT(digit, p.value());
    ASSERT_EQ(reconstruct(d), n);
  }
}

TEST_P(DigitsPropertyTest, IncrementMatchesDecomposeOfSuccessor) {
  const PrimeBase p(GetParam());
  for (int i = 0; i < 2000; ++i) {
    const std::uint64_t n = next_value();
    const DigitString d = decompose(n, p);
    const DigitString up = increment(d);
    ASSERT_EQ(reconstruct(up), n + 1);
    ASSERT_TRUE(up.value_equal(decompose(n + 1, p)));
    bool all_top = true;
    for (std::uint64_t digit : d.digits()) all_top &= digit == p.value() - 1;
    ASSERT_EQ(up.size(), d.size() + (all_top ? 1 : 0));
  }
}

TEST_P(DigitsPropertyTest, ValuationCountsLowZeroDigits) {
  const PrimeBase p(GetParam());
  for (int i = 0; i < 2000; ++i) {
    std::uint64_t n = std::max<std::uint64_t>(next_value() >> 20, 1);
    // Scale by a random power of p while it fits.
    for (int e = i % 8; e > 0 && n <= UINT64_MAX / p.value(); --e) n *= p.value();
    const DigitString d = decompose(n, p);
    unsigned zeros = 0;
    while (d[zeros] == 0) ++zeros;
    ASSERT_EQ(valuation(n, p), zeros) << n;
  }
}

INSTANTIATE_TEST_SUITE_P(Primes, DigitsPropertyTest,
                         ::testing::Values(2, 3, 5, 7, 13, 101,
                                           4294967311ull));

}  // namespace
}  // namespace narayana
