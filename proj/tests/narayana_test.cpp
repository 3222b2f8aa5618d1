#include "narayana/narayana.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "narayana/oracle.hpp"

namespace narayana {
namespace {

DivisibilityVerdict verdict(std::uint64_t p, std::uint64_t n, std::uint64_t k) {
  return prime_divides_narayana({PrimeBase(p), n, k});
}

TEST(NarayanaQueryTest, RejectsMalformedQueries) {
  EXPECT_THROW(NarayanaQuery(PrimeBase(2), 0, 0), std::invalid_argument);
  EXPECT_THROW(NarayanaQuery(PrimeBase(2), 5, 5), std::invalid_argument);
  EXPECT_NO_THROW(NarayanaQuery(PrimeBase(2), 5, 4));
}

TEST(PrimeDividesNarayanaTest, Examples) {
  const auto a = verdict(2, 7, 3);
  EXPECT_FALSE(a.divisible);
  EXPECT_EQ(a.matched_case, CriterionCase::case1);
  EXPECT_FALSE(a.witness.has_value());

  const auto b = verdict(2, 4, 1);
  EXPECT_TRUE(b.divisible);
  EXPECT_EQ(b.matched_case, CriterionCase::case2_p_ndivides_k);
  ASSERT_TRUE(b.witness.has_value());
  EXPECT_EQ(b.witness->condition, Condition::c2c);
  EXPECT_EQ(b.witness->digit_index, 1u);

  const auto c = verdict(5, 5, 2);
  EXPECT_TRUE(c.divisible);
  EXPECT_EQ(c.matched_case, CriterionCase::case2_p_ndivides_k);
  EXPECT_EQ(c.witness->condition, Condition::c2c);
  EXPECT_EQ(c.witness->digit_index, 0u);

  EXPECT_FALSE(verdict(3, 5, 2).divisible);
  EXPECT_FALSE(verdict(7, 1, 0).divisible);
}

TEST(PrimeDividesNarayanaTest, ReportsEachCondition) {
  // p = 3, n = 4 = (1,1), k = 1 = (1,0): first non-2 digit is k_0 = n_0 -> 1(b).
  EXPECT_EQ(verdict(3, 4, 1).witness->condition, Condition::c1b);
  // p = 3, n = 4 = (1,1), k = 2 = (2,0): k_0 > n_0 -> 1(a).
  EXPECT_EQ(verdict(3, 4, 2).witness->condition, Condition::c1a);
  // p = 2, n = 10 = (0,1,0,1), k = 4 = (0,0,1,0): k_2 > n_2 -> 2(a).
  EXPECT_EQ(verdict(2, 10, 4).witness->condition, Condition::c2a);
  // p = 3, n = 3 = (0,1), k = 1 = (1,0): k_0 = 1 is neither 0 nor 2 -> 2(c).
  EXPECT_EQ(verdict(3, 3, 1).witness->condition, Condition::c2c);
  // p = 2, n = 6 = (0,1,1), k = 2 = (0,1,0): k_1 = n_1 -> 2(b).
  EXPECT_EQ(verdict(2, 6, 2).witness->condition, Condition::c2b);
  EXPECT_EQ(verdict(2, 6, 2).matched_case, CriterionCase::case2_p_divides_k);
}

TEST(PrimeDividesNarayanaTest, MatchesOracleOnSmallTriangle) {
  std::set<Condition> seen;
  for (std::uint64_t p : {2, 3, 5, 7, 13}) {
    const oracle::ExactInteger modulus(static_cast<unsigned long>(p));
    for (std::uint64_t n = 1; n <= 120; ++n) {
      for (std::uint64_t k = 0; k < n; ++k) {
        const auto v = verdict(p, n, k);
        const bool exact = oracle::narayana_exact(n, k) % modulus == 0;
        ASSERT_EQ(v.divisible, exact) << "p=" << p << " n=" << n << " k=" << k;
        ASSERT_EQ(v.divisible, v.witness.has_value());
        ASSERT_NE(v.matched_case, CriterionCase::not_applicable);
        if (v.witness) seen.insert(v.witness->condition);
      }
    }
  }
  EXPECT_EQ(seen.size(), 5u) << "every condition should decide some entry";
}

TEST(PrimeDividesNarayanaTest, SymmetryAndEdgesAtLargeN) {
  std::mt19937_64 rng(11);
  for (std::uint64_t p : {2ull, 3ull, 5ull, 1000003ull}) {
    for (int i = 0; i < 2000; ++i) {
      const std::uint64_t n = std::max<std::uint64_t>(rng() >> (i % 60), 2);
      const std::uint64_t k =
          std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng);
      ASSERT_EQ(verdict(p, n, k).divisible, verdict(p, n, n - 1 - k).divisible)
          << "p=" << p << " n=" << n << " k=" << k;
      ASSERT_FALSE(verdict(p, n, 0).divisible);
      ASSERT_FALSE(verdict(p, n, n - 1).divisible);
    }
  }
}

TEST(NarayanaValuationTest, Examples) {
  const auto r = narayana_valuation({PrimeBase(2), 4, 1});
  EXPECT_EQ(r.omega_binom_k, 2u);
  EXPECT_EQ(r.omega_binom_k1, 1u);
  EXPECT_EQ(r.omega_n, 2u);
  EXPECT_EQ(r.omega_narayana, 1u);
  EXPECT_EQ(narayana_valuation({PrimeBase(5), 5, 2}).omega_narayana, 1u);
  EXPECT_EQ(narayana_valuation({PrimeBase(3), 7, 0}).omega_narayana, 0u);
  EXPECT_EQ(narayana_valuation({PrimeBase(7), 7, 3}).omega_narayana, 1u);
}

TEST(NarayanaValuationTest, MatchesOracleOnSmallTriangle) {
  for (std::uint64_t p : {2, 3, 5, 7, 13}) {
    const PrimeBase base(p);
    for (std::uint64_t n = 1; n <= 100; ++n) {
      for (std::uint64_t k = 0; k < n; ++k) {
        const auto r = narayana_valuation({base, n, k});
        ASSERT_EQ(r.omega_narayana,
                  oracle::valuation_exact(oracle::narayana_exact(n, k), base))
            << "p=" << p << " n=" << n << " k=" << k;
      }
    }
  }
}

TEST(NarayanaValuationTest, ZeroOrderIffNondivisibleAtLargeN) {
  // Two independent fast routes: carry counting and the digit criterion.
  std::mt19937_64 rng(13);
  for (std::uint64_t p : {2ull, 3ull, 7ull, 65537ull}) {
    const PrimeBase base(p);
    for (int i = 0; i < 5000; ++i) {
      const std::uint64_t n = std::max<std::uint64_t>(rng() >> (i % 62), 1);
      const std::uint64_t k =
          std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng);
      const NarayanaQuery q{base, n, k};
      ASSERT_EQ(narayana_valuation(q).omega_narayana == 0,
                !prime_divides_narayana(q).divisible)
          << "p=" << p << " n=" << n << " k=" << k;
    }
  }
}

TEST(NarayanaValuationTest, PowerOfTwoRowInterior) {
  const std::uint64_t n = std::uint64_t{1} << 62;
  for (std::uint64_t k : std::vector<std::uint64_t>{1, 2, 12345, n / 2, n - 2}) {
    EXPECT_TRUE(verdict(2, n, k).divisible) << k;
    EXPECT_GE(narayana_valuation({PrimeBase(2), n, k}).omega_narayana, 1u);
  }
}

}  // namespace
}  // namespace narayana
