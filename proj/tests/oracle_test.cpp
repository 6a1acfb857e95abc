#include "lucasbinom/binomials.hpp"
#include "lucasbinom/errors.hpp"
#include "lucasbinom/identities.hpp"
#include "lucasbinom/oracle.hpp"

#include <gtest/gtest.h>

using namespace lucasbinom;
using namespace lucasbinom::oracle;

namespace {
const RingElement kOne(1);
}

TEST(OracleBinomial, Fibonacci) {
  const OracleResult r = oracle_binomial(lucas_u(kOne, kOne), 5, 2);
  EXPECT_EQ(r.numerator, RingElement(30));
  EXPECT_EQ(r.denominator, RingElement(2));
  ASSERT_TRUE(r.reduced);
  EXPECT_EQ(*r.reduced, RingElement(15));
}

TEST(OracleBinomial, KZeroIsOne) {
  for (std::size_t n = 0; n <= 10; ++n) EXPECT_EQ(*oracle_binomial(lucas_u(kOne, kOne), n, 0).reduced, kOne);
}

TEST(OracleBinomial, LucasV) { EXPECT_EQ(*oracle_binomial(lucas_v(kOne, kOne), 3, 1).reduced, RingElement(4)); }

TEST(OracleBinomial, Errors) {
  EXPECT_THROW(oracle_binomial(lucas_u(RingElement(0), kOne), 3, 1), ZeroTerm);
  EXPECT_THROW(oracle_binomial(lucas_u(kOne, kOne), 3, 4), IndexError);
}

TEST(OracleBinomial, PolynomialRemainderLeavesReducedEmpty) {
  const auto [s, t] = gaussian_params();
  const OracleResult r = oracle_binomial(lucas_v(s, t), 2, 1);
  EXPECT_FALSE(r.reduced);
  EXPECT_TRUE(r.matches(binomial_quotient(lucas_v(s, t), 2, 1)));
}

TEST(OracleMixed, Values) {
  EXPECT_EQ(*oracle_mixed(kOne, kOne, 1, 1).reduced, RingElement(3));
  EXPECT_EQ(*oracle_mixed(kOne, kOne, 0, 0).reduced, kOne);
  EXPECT_EQ(*oracle_mixed(kOne, kOne, 2, 1).reduced, RingElement(4));
}

TEST(OracleMixed, ZeroTerm) { EXPECT_THROW(oracle_mixed(RingElement(0), RingElement(3), 1, 1), ZeroTerm); }

TEST(OracleProperties, AgreesWithBinomialsOnSmallGrid) {
  for (const auto& [s, t] : integer_grid()) {
    const SequenceHandle u = lucas_u(s, t), v = lucas_v(s, t);
    for (std::size_t n = 0; n <= 10; ++n) {
      for (std::size_t k = 0; k <= n; ++k) {
        for (const SequenceHandle* h : {&u, &v}) {
          try {
            const RingElement expected = *oracle_binomial(*h, n, k).reduced;
            EXPECT_EQ(binomial(*h, n, k).value, expected);
          } catch (const ZeroTerm&) {
            EXPECT_THROW(binomial(*h, n, k), ZeroTerm);
          }
        }
        try {
          const RingElement expected = *oracle_mixed(s, t, k, n - k).reduced;
          EXPECT_EQ(mixed_binomial(s, t, k, n - k).value, expected);
        } catch (const ZeroTerm&) {
          EXPECT_THROW(mixed_binomial(s, t, k, n - k), ZeroTerm);
        }
      }
    }
  }
}
