#include "lucasbinom/errors.hpp"
#include "lucasbinom/sequences.hpp"

#include <gtest/gtest.h>

#include <thread>
#include <vector>

using namespace lucasbinom;

namespace {

RingElement P(const char* text) { return parse_ring(text); }

std::vector<std::string> printed(const SequenceHandle& h, std::size_t n) {
  std::vector<std::string> out;
  for (const auto& v : h.terms(n)) out.push_back(v.to_string());
  return out;
}

}  // namespace

TEST(SequenceTerm, Fibonacci) {
  SequenceHandle fib({RingElement(1), RingElement(1), RingElement(0), RingElement(1)});
  EXPECT_EQ(fib.term(6), RingElement(8));
}

TEST(SequenceTerm, InitialConditions) {
  SequenceHandle h({P("x"), P("3"), P("5/2"), P("x-7")});
  EXPECT_EQ(h.term(0), P("5/2"));
  EXPECT_EQ(h.term(1), P("x-7"));
}

TEST(SequenceTerm, LucasNumbers) {
  SequenceHandle v({RingElement(1), RingElement(1), RingElement(2), RingElement(1)});
  EXPECT_EQ(v.term(4), RingElement(7));
}

TEST(SequenceTerm, DegenerateRecurrenceRejected) {
  EXPECT_THROW(SequenceHandle({RingElement(1), RingElement(0), RingElement(0), RingElement(1)}),
               DegenerateRecurrence);
  EXPECT_THROW(lucas_u(RingElement(3), P("x-x")), DegenerateRecurrence);
  EXPECT_THROW(lucas_v(RingElement(3), RingElement(0)), DegenerateRecurrence);
}

TEST(LucasU, FibonacciAndPell) {
  EXPECT_EQ(printed(lucas_u(RingElement(1), RingElement(1)), 6),
            (std::vector<std::string>{"0", "1", "1", "2", "3", "5", "8"}));
  EXPECT_EQ(printed(lucas_u(RingElement(2), RingElement(1)), 5),
            (std::vector<std::string>{"0", "1", "2", "5", "12", "29"}));
}

TEST(LucasU, GaussianIntegers) {
  const SequenceHandle u = lucas_u(P("x+1"), P("-x"));
  EXPECT_EQ(u.term(3).to_string(), "x^2+x+1");
  for (std::size_t n = 1; n <= 12; ++n) {
    std::vector<Rational> ones(n, Rational(1));
    EXPECT_EQ(u.term(n), RingElement(Polynomial(ones)));
  }
}

TEST(LucasV, LucasNumbers) {
  EXPECT_EQ(printed(lucas_v(RingElement(1), RingElement(1)), 5),
            (std::vector<std::string>{"2", "1", "3", "4", "7", "11"}));
}

TEST(LucasV, StartsAtTwoAndS) {
  for (const char* s : {"1", "-3", "x+1", "5/2"}) {
    const SequenceHandle v = lucas_v(P(s), P("-2"));
    EXPECT_EQ(v.term(0), RingElement(2));
    EXPECT_EQ(v.term(1), P(s));
  }
}

TEST(LucasV, GaussianCase) {
  const SequenceHandle v = lucas_v(P("x+1"), P("-x"));
  EXPECT_EQ(v.term(2).to_string(), "x^2+1");
  for (unsigned n = 0; n <= 10; ++n) EXPECT_EQ(v.term(n), P("x").pow(n) + RingElement(1));
}

TEST(Binet, MatchesLucasV) {
  const BinetParams bp{RingElement(2), RingElement(1), RingElement(1), RingElement(1)};
  EXPECT_EQ(binet_term(bp, 3), RingElement(9));
  EXPECT_EQ(lucas_v(RingElement(3), RingElement(-2)).term(3), RingElement(9));
}

TEST(Binet, MersenneIsScaledU) {
  const BinetParams bp{RingElement(2), RingElement(1), RingElement(1), RingElement(-1)};
  const SequenceHandle u = lucas_u(RingElement(3), RingElement(-2));
  for (unsigned n = 0; n <= 40; ++n) {
    const RingElement mersenne = RingElement(Integer(2)).pow(n) - RingElement(1);
    EXPECT_EQ(binet_term(bp, n), mersenne);
    EXPECT_EQ(binet_term(bp, n), (bp.p - bp.q) * u.term(n));
  }
}

TEST(Binet, ZeroIndexIsAPlusB) {
  const BinetParams bp{RingElement(3), RingElement(-2), P("5/3"), P("x")};
  EXPECT_EQ(binet_term(bp, 0), P("5/3+x"));
}

TEST(Binet, InvalidRoots) {
  EXPECT_THROW(binet_term({RingElement(2), RingElement(2), RingElement(1), RingElement(1)}, 3), InvalidRoots);
  EXPECT_THROW(binet_term({RingElement(0), RingElement(2), RingElement(1), RingElement(1)}, 3), InvalidRoots);
  EXPECT_THROW(binet_term({RingElement(1), RingElement(2), RingElement(0), RingElement(0)}, 3), InvalidRoots);
}

TEST(Discriminant, Values) {
  EXPECT_EQ(discriminant(RingElement(1), RingElement(1)), RingElement(5));
  // z^2 = 2z - 1 has the double root 1.
  EXPECT_EQ(discriminant(RingElement(2), RingElement(-1)), RingElement(0));
  EXPECT_TRUE(has_repeated_root(RingElement(2), RingElement(-1)));
  EXPECT_EQ(discriminant(RingElement(2), RingElement(1)), RingElement(8));
  EXPECT_EQ(discriminant(P("x+1"), P("-x")).to_string(), "x^2-2*x+1");
  EXPECT_EQ(discriminant(P("x+1"), P("-x")), P("(x-1)^2"));
}

TEST(Discriminant, EqualsSquaredRootDifference) {
  for (int p = -4; p <= 4; ++p) {
    for (int q = -4; q <= 4; ++q) {
      const RingElement s(p + q), t(-p * q);
      EXPECT_EQ(discriminant(s, t), RingElement((p - q) * (p - q))) << p << "," << q;
    }
  }
}

TEST(SequenceProperties, BinetAgreesWithRecurrenceOnRootPairs) {
  for (int p = -3; p <= 3; ++p) {
    for (int q = -3; q <= 3; ++q) {
      if (p == 0 || q == 0 || p == q) continue;
      const SequenceHandle u = lucas_u(RingElement(p + q), RingElement(-p * q));
      const SequenceHandle v = lucas_v(RingElement(p + q), RingElement(-p * q));
      const BinetParams diff{RingElement(p), RingElement(q), RingElement(1), RingElement(-1)};
      const BinetParams sum{RingElement(p), RingElement(q), RingElement(1), RingElement(1)};
      for (std::size_t n = 0; n <= 50; ++n) {
        EXPECT_EQ(exact_div(binet_term(diff, n), RingElement(p - q)), u.term(n));
        EXPECT_EQ(binet_term(sum, n), v.term(n));
      }
    }
  }
}

TEST(SequenceProperties, CacheExtensionIsDeterministic) {
  const SequenceHandle h({P("x"), P("-2"), P("1"), P("x^2")});
  const RingElement early = h.term(5);
  h.term(40);
  EXPECT_EQ(h.term(5), early);
  const SequenceHandle copy = h;
  EXPECT_EQ(copy.term(40), h.term(40));
}

TEST(SequenceProperties, RecurrenceHoldsOnCache) {
  const SequenceHandle h({P("3/2"), P("-x"), P("2"), P("x+1")});
  const auto terms = h.terms(30);
  for (std::size_t n = 0; n + 2 < terms.size(); ++n) {
    EXPECT_EQ(terms[n + 2], P("3/2") * terms[n + 1] + P("-x") * terms[n]);
  }
}

TEST(SequenceProperties, ConcurrentReadsAgree) {
  const SequenceHandle h = lucas_u(RingElement(3), RingElement(2));
  const SequenceHandle reference = h;
  std::vector<std::thread> workers;
  std::vector<int> ok(8, 0);
  for (int w = 0; w < 8; ++w) {
    workers.emplace_back([&, w] {
      bool all = true;
      for (std::size_t n = 200; n-- > 0;) all = all && h.term(n) == reference.term(n);
      ok[static_cast<std::size_t>(w)] = all ? 1 : 0;
    });
  }
  for (auto& t : workers) t.join();
  for (int v : ok) EXPECT_EQ(v, 1);
}
