#include "hypsurf/critical.hpp"
#include "hypsurf/pattern.hpp"

#include <gtest/gtest.h>

#include "test_support.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace hypsurf;
using hypsurf::testing::close_rel;

TEST(Pattern, SortsInput) {
  Pattern p{10, 5, 6};
  EXPECT_EQ(p.str(), "(5,6,10)");
  EXPECT_EQ(p.size(), 3u);
  EXPECT_EQ(p.max_degree(), 10);
  EXPECT_EQ(p, (Pattern{5, 10, 6}));
}

TEST(Pattern, RejectsInvalidDegrees) {
  EXPECT_THROW((Pattern{3, 7}), DomainError);
  EXPECT_THROW((Pattern{2, 7, 43}), DomainError);
}

TEST(Phi, Examples) {
  EXPECT_EQ(phi(Pattern{3, 7, 43}), Rational(-1, 1806));
  EXPECT_EQ(phi(Pattern{9, 10, 11}), Rational(-98, 495));
  EXPECT_EQ(phi(Pattern{6, 6, 6}), Rational(0));
  EXPECT_EQ(phi(Pattern{3, 3, 3, 3, 3, 4}), Rational(-1, 12));
}

TEST(Phi, SignMatchesRational) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> deg(3, 80);
  std::uniform_int_distribution<int> len(3, 8);
  for (int i = 0; i < 5000; ++i) {
    std::vector<int> d(static_cast<std::size_t>(len(rng)));
    for (int& f : d) f = deg(rng);
    Rational v = phi(std::span<const int>(d));
    int expected = v < 0 ? -1 : (v > 0 ? 1 : 0);
    EXPECT_EQ(phi_sign(d), expected);
  }
  // Large coprime degrees take the rational fallback.
  std::vector<int> primes{1009, 1013, 1019, 1021, 1031, 1033, 1039, 1049, 1051, 1061, 1063};
  EXPECT_EQ(phi_sign(primes), -1);
}

TEST(Phi, DecreasesWhenAnyDegreeGrows) {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> deg(3, 60);
  for (int i = 0; i < 2000; ++i) {
    std::vector<int> f{deg(rng), deg(rng), deg(rng), deg(rng)};
    std::vector<int> g = f;
    for (int& x : g) x += std::uniform_int_distribution<int>(0, 5)(rng);
    EXPECT_GE(phi(std::span<const int>(f)), phi(std::span<const int>(g)));
  }
}

TEST(PatternLeq, Examples) {
  EXPECT_TRUE(pattern_leq(Pattern{3, 7, 43}, Pattern{3, 7, 43}));
  EXPECT_TRUE(pattern_leq(Pattern{3, 7, 43}, Pattern{4, 7, 43}));
  EXPECT_FALSE(pattern_leq(Pattern{3, 8, 25}, Pattern{3, 7, 43}));
  EXPECT_FALSE(pattern_leq(Pattern{3, 7, 43}, Pattern{3, 8, 25}));
}

TEST(PatternLeq, TailAligned) {
  EXPECT_TRUE(pattern_leq(Pattern{4, 7, 43}, Pattern{3, 3, 4, 8, 43}));
  EXPECT_FALSE(pattern_leq(Pattern{3, 3, 4, 8}, Pattern{4, 7, 43}));
}

TEST(PatternLeq, IsPartialOrder) {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> deg(3, 9);
  std::uniform_int_distribution<int> len(3, 5);
  auto random_pattern = [&] {
    std::vector<int> d(static_cast<std::size_t>(len(rng)));
    for (int& f : d) f = deg(rng);
    return Pattern(d);
  };
  for (int i = 0; i < 3000; ++i) {
    Pattern a = random_pattern();
    Pattern b = random_pattern();
    Pattern c = random_pattern();
    EXPECT_TRUE(pattern_leq(a, a));
    if (pattern_leq(a, b) && pattern_leq(b, a)) EXPECT_EQ(a, b);
    if (pattern_leq(a, b) && pattern_leq(b, c)) EXPECT_TRUE(pattern_leq(a, c));
  }
}

TEST(IsNegativeCurv, Examples) {
  EXPECT_TRUE(is_negative_curv(Pattern{6, 6, 7}));
  EXPECT_FALSE(is_negative_curv(Pattern{6, 6, 6}));
  EXPECT_FALSE(is_negative_curv(Pattern{3, 7, 42}));
  EXPECT_EQ(phi(Pattern{3, 7, 42}), Rational(0));
}

TEST(IsNegativeCurv, AgreesWithPhiOnAllTriplesUpToSixty) {
  for (int i = 3; i <= 60; ++i) {
    for (int j = i; j <= 60; ++j) {
      for (int k = j; k <= 60; ++k) {
        Triple t{i, j, k};
        ASSERT_EQ(is_negative_curv(std::span<const int>(t)), phi(t) < 0) << triple_str(t);
      }
    }
  }
}

TEST(IsNegativeCurv, AgreesWithPhiOnLongerPatterns) {
  EXPECT_TRUE(is_negative_curv(Pattern{3, 3, 3, 4, 5}));
  EXPECT_TRUE(is_negative_curv(Pattern{3, 3, 4, 4, 4}));
  EXPECT_FALSE(is_negative_curv(Pattern{3, 3, 3, 4, 4}));
  EXPECT_FALSE(is_negative_curv(Pattern{3, 3, 3, 3, 6}));
  EXPECT_FALSE(is_negative_curv(Pattern{3, 3, 3, 3, 3, 3}));
  EXPECT_TRUE(is_negative_curv(Pattern{3, 3, 3, 3, 3, 3, 3}));
  for (int n = 4; n <= 6; ++n) {
    std::vector<int> d(static_cast<std::size_t>(n), 3);
    while (true) {
      ASSERT_EQ(is_negative_curv(std::span<const int>(d)), phi(std::span<const int>(d)) < 0)
          << Pattern(d).str();
      int k = n - 1;
      while (k >= 0 && d[static_cast<std::size_t>(k)] == 20) --k;
      if (k < 0) break;
      const int next = d[static_cast<std::size_t>(k)] + 1;
      for (int i = k; i < n; ++i) d[static_cast<std::size_t>(i)] = next;
    }
  }
}

TEST(IsNegativeCurv, MinimalTriplesAreAtMostTheExtremum) {
  const Rational extremum(-1, 1806);
  for (const Triple& t : detail::kMinimalTriples) {
    Rational v = phi(t);
    EXPECT_LE(v, extremum) << triple_str(t);
    EXPECT_EQ(v == extremum, (t == Triple{3, 7, 43})) << triple_str(t);
  }
  for (const auto& q : detail::kMinimalQuads) EXPECT_LT(phi(std::span<const int>(q)), 0);
  for (const auto& q : detail::kMinimalQuints) EXPECT_LT(phi(std::span<const int>(q)), 0);
}

TEST(RangeTables, Examples) {
  EXPECT_EQ(m2(3), 7);
  EXPECT_EQ(m3(3, 7), 43);
  EXPECT_EQ(m2(7), 7);
  EXPECT_EQ(m3(7, 7), 7);
  EXPECT_EQ(m3(5, 6), 8);
}

TEST(RangeTables, RejectOutOfRange) {
  EXPECT_THROW(m2(2), DomainError);
  EXPECT_THROW(m3(3, 6), DomainError);
  EXPECT_THROW(m3(2, 7), DomainError);
}

TEST(RangeTables, GiveTheSmallestNegativelyCurvedDegrees) {
  for (int i = 3; i <= 80; ++i) {
    int j2 = i;
    while (phi(Triple{i, j2, 100000}) >= 0) ++j2;
    EXPECT_EQ(m2(i), j2) << i;
    for (int j = m2(i); j <= 80; ++j) {
      int k = j;
      while (phi(Triple{i, j, k}) >= 0) ++k;
      EXPECT_EQ(m3(i, j), k) << i << "," << j;
    }
  }
}

TEST(EnumerateAdp, SmallBounds) {
  std::vector<Triple> expected{{5, 7, 7}, {6, 6, 7}, {6, 7, 7}, {7, 7, 7}};
  EXPECT_EQ(enumerate_adp(7), expected);
  EXPECT_TRUE(enumerate_adp(6).empty());
  EXPECT_THROW(enumerate_adp(2), DomainError);
}

TEST(EnumerateAdp, MatchesCurvatureFilterForEveryBound) {
  for (int b = 3; b <= 59; ++b) {
    std::vector<Triple> filtered;
    for (int i = 3; i <= b; ++i) {
      for (int j = i; j <= b; ++j) {
        for (int k = j; k <= b; ++k) {
          if (phi(Triple{i, j, k}) < 0) filtered.push_back({i, j, k});
        }
      }
    }
    const auto adp = enumerate_adp(b);
    ASSERT_EQ(adp, filtered) << "B=" << b;
    EXPECT_TRUE(std::is_sorted(adp.begin(), adp.end()));
  }
  EXPECT_EQ(enumerate_adp(59).size(), 32122u);
}

class Defect : public ::testing::Test {
 protected:
  Precision w{80};
  ScopedPrecision guard{w};
};

TEST_F(Defect, VanishesAtCriticalSide) {
  Pattern p{3, 7, 43};
  EXPECT_TRUE(approx_eq(angle_defect(p, critical_side_length(p)), BigReal(0), w));
}

TEST_F(Defect, SmallSideLimitIsScaledCurvature) {
  for (const Pattern& p : {Pattern{3, 7, 43}, Pattern{5, 6, 7}, Pattern{3, 3, 4, 13}, Pattern{4, 4, 4}}) {
    BigReal limit = two_pi() * BigReal(phi(p).convert_to<BigReal>());
    EXPECT_LT(abs(angle_defect(p, pow10(-8)) - limit), pow10(-4)) << p.str();
  }
}

TEST_F(Defect, IncreasesInSide) {
  Pattern p{3, 7, 43};
  EXPECT_LT(angle_defect(p, BigReal(1) / 2), angle_defect(p, BigReal(1)));
  BigReal prev = angle_defect(p, pow10(-6));
  for (int k = 1; k <= 60; ++k) {
    BigReal v = angle_defect(p, BigReal(k) / 20);
    EXPECT_GT(v, prev);
    prev = v;
  }
}

TEST_F(Defect, RejectsNonPositiveSide) {
  EXPECT_THROW(angle_defect(Pattern{3, 7, 43}, BigReal(0)), DomainError);
}

TEST_F(Defect, CriticalSideExamples) {
  Pattern quad{3, 3, 4, 13};
  BigReal a = critical_side_length(quad);
  EXPECT_GT(a, 0);
  EXPECT_TRUE(close_rel(a, parse_real("0.1626699041762052909951573450308870980515"), 38));
  EXPECT_TRUE(approx_eq(critical_side_length(Pattern{4, 6, 16}),
                        parse_real("0.2695133908496771165205337549965660230803"), Precision(40)));
  EXPECT_TRUE(approx_eq(solve_critical_side_length(Pattern{3, 7, 43}), ac_triple(3, 7, 43), w));
  EXPECT_THROW(critical_side_length(Pattern{6, 6, 6}), DomainError);
  EXPECT_THROW(critical_side_length(Pattern{4, 4, 4, 4}), DomainError);
  EXPECT_THROW(solve_critical_side_length(Pattern{3, 7, 42}), DomainError);
}

TEST_F(Defect, CriticalSideMonotoneUnderOrder) {
  std::mt19937_64 rng(17);
  const auto adp = enumerate_adp(59);
  const BigReal tol = tolerance(w);
  int checked = 0;
  while (checked < 150) {
    Triple p = hypsurf::testing::random_admissible(rng, adp);
    Triple q = p;
    for (int& x : q) x = std::min(59, x + std::uniform_int_distribution<int>(0, 4)(rng));
    std::sort(q.begin(), q.end());
    ASSERT_TRUE(pattern_leq(to_pattern(p), to_pattern(q)));
    EXPECT_LE(ac_triple(p[0], p[1], p[2]), ac_triple(q[0], q[1], q[2]) + tol)
        << triple_str(p) << " " << triple_str(q);
    ++checked;
  }
  // Longer patterns through bisection.
  EXPECT_LE(critical_side_length(Pattern{3, 3, 4, 13}), critical_side_length(Pattern{3, 3, 5, 13}));
  EXPECT_LE(critical_side_length(Pattern{3, 3, 5, 8}), critical_side_length(Pattern{3, 3, 3, 5, 8}));
}
