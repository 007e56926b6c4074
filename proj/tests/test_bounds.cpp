#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "sumfree/bounds.hpp"
#include "sumfree/graph_io.hpp"

using namespace sumfree;

namespace {

Graph union_of(std::vector<Graph> parts) { return disjoint_union(parts); }

BoundValue frac(int a, int b) { return BoundValue::fraction(a, b); }

oracle::SimpleGraph to_simple(const Graph& g) {
  oracle::SimpleGraph s(g.order());
  for (auto [u, v] : g.edges()) s.edge(u, v);
  return s;
}

}  // namespace

TEST(BoundValue, ExactArithmetic) {
  const auto v = frac(32, 14);
  EXPECT_EQ(v.to_string(), "16/7");
  EXPECT_EQ(v.numerator(), 16);
  EXPECT_EQ(v.denominator(), 7);
  EXPECT_FALSE(v.is_integral());
  EXPECT_EQ(v.floor(), 2);
  EXPECT_EQ(frac(-1, 2).floor(), -1);
  EXPECT_EQ(BoundValue(8).to_string(), "8");
  EXPECT_EQ(v * frac(7, 2), BoundValue(8));
  EXPECT_LT(frac(31, 4), BoundValue(8));
  EXPECT_NEAR(v.approx(), 2.2857, 1e-4);
  EXPECT_THROW(frac(1, 0), std::invalid_argument);
  EXPECT_EQ(power(Rational(2, 3), -2), frac(9, 4));
  EXPECT_EQ(power(Rational(5), 0), BoundValue(1));
  EXPECT_THROW(power(Rational(0), -1), std::invalid_argument);
}

TEST(Formulas, Matching) {
  EXPECT_EQ(bound_matching(3, 6), BoundValue(8));
  EXPECT_EQ(bound_matching(2, 6), BoundValue(9));
  EXPECT_EQ(bound_matching(4, 8), BoundValue(16));
  EXPECT_EQ(bound_matching(0, 5), BoundValue(1));
  EXPECT_EQ(bound_matching(2, 5), BoundValue(6));
  EXPECT_THROW(bound_matching(4, 7), std::invalid_argument);
  EXPECT_THROW(bound_matching(-1, 4), std::invalid_argument);
}

TEST(Formulas, StabilityExamples) {
  EXPECT_EQ(bound_c4(1, 0, 4), frac(16, 7));
  EXPECT_EQ(bound_tl(1, 3, 0, 6), frac(31, 4));
  for (int n = 2; n <= 12; ++n) {
    for (int m = (n + 2) / 3; 2 * m <= n; ++m) {
      if (3 * m == n) continue;
      EXPECT_EQ(bound_degree4(0, m, n), bound_matching(m, n)) << m << "," << n;
    }
  }
  EXPECT_EQ(bound_degree4(1, 3, 6), frac(59, 8));
}

TEST(Formulas, MatchingBoundIsContinuousAtBranchPoint) {
  for (int m = 1; m <= 10; ++m) {
    const BoundValue second = power(Rational(2), 0) * power(Rational(3), m);
    EXPECT_EQ(bound_matching(m, 3 * m), second);
  }
}

// k induced C4s, m edges, t triangles.
TEST(Gadgets, C4UnionsWithinBound) {
  for (int k = 0; k <= 3; ++k) {
    for (int m = 0; m <= 3; ++m) {
      for (int t = 0; t <= 3; ++t) {
        std::vector<Graph> parts;
        for (int i = 0; i < k; ++i) parts.push_back(gadgets::cycle(4));
        for (int i = 0; i < m; ++i) parts.push_back(gadgets::complete(2));
        for (int i = 0; i < t; ++i) parts.push_back(gadgets::complete(3));
        const Graph g = union_of(parts);
        const int n = 4 * k + 2 * m + 3 * t;
        const auto mis = mis_count(g);
        EXPECT_EQ(mis, (std::uint64_t{1} << (k + m)) * static_cast<std::uint64_t>(std::pow(3, t)));
        EXPECT_LE(BoundValue(static_cast<std::int64_t>(mis)), bound_c4(k, m, n)) << k << m << t;
      }
    }
  }
  EXPECT_LE(BoundValue(static_cast<std::int64_t>(mis_count(gadgets::cycle(4)))), bound_c4(1, 0, 4));
}

TEST(Gadgets, PrismsWithinTlBound) {
  for (int l = 3; l <= 8; ++l) {
    const auto bound = bound_tl(1, l, 0, 2 * l);
    // 31 * 2^(l-5)
    EXPECT_EQ(bound, frac(31, 32) * power(Rational(2), l));
    const auto t = mis_count(gadgets::prism(l));
    const auto tp = mis_count(gadgets::prism_plus(l));
    EXPECT_EQ(t, oracle::mis_count(to_simple(gadgets::prism(l))));
    EXPECT_EQ(tp, oracle::mis_count(to_simple(gadgets::prism_plus(l))));
    EXPECT_LE(BoundValue(static_cast<std::int64_t>(t)), bound) << "l=" << l;
    EXPECT_LE(BoundValue(static_cast<std::int64_t>(tp)), bound) << "l=" << l;
  }
}

TEST(Gadgets, CyclesBelowOnePointFourPower) {
  for (int l = 4; l <= 16; ++l) {
    const auto mis = mis_count(gadgets::cycle(l));
    EXPECT_LT(BoundValue(static_cast<std::int64_t>(mis)), power(Rational(7, 5), l)) << "l=" << l;
  }
  // Perrin numbers
  EXPECT_EQ(mis_count(gadgets::cycle(10)), 17U);
  EXPECT_EQ(mis_count(gadgets::cycle(16)), 90U);
}

TEST(CheckGraph, Examples) {
  const auto tight = check_graph(parse_graph_literal("K2|K3"));
  EXPECT_EQ(tight.mis, 6U);
  EXPECT_EQ(tight.bound, BoundValue(6));
  EXPECT_TRUE(tight.tight);
  EXPECT_TRUE(tight.satisfied);
  EXPECT_EQ(tight.extremal, ExtremalClass::TypeB);
  EXPECT_EQ(tight.branch, MatchingBranch::Mixed);
  EXPECT_TRUE(tight.ok());

  const auto c5 = check_graph(gadgets::cycle(5));
  EXPECT_EQ(c5.mis, 5U);
  EXPECT_EQ(c5.nu, 2);
  // 3m > n puts C5 in the mixed branch: 2^1 3^1
  EXPECT_EQ(c5.branch, MatchingBranch::Mixed);
  EXPECT_EQ(c5.bound, BoundValue(6));
  EXPECT_LT(BoundValue(5), BoundValue(9));
  EXPECT_FALSE(c5.tight);
  EXPECT_EQ(c5.extremal, ExtremalClass::Neither);

  Graph pendant(7);
  for (auto [u, v] : gadgets::d6().edges()) pendant.add_edge(u, v);
  pendant.add_edge(0, 6);
  const auto p = check_graph(pendant);
  EXPECT_EQ(p.nu, 3);
  EXPECT_EQ(p.bound, BoundValue(12));
  EXPECT_EQ(p.mis, oracle::mis_count(to_simple(pendant)));
  EXPECT_TRUE(p.satisfied);
  EXPECT_FALSE(p.tight);
}

TEST(CheckGraph, LoopedVerticesAreRemoved) {
  Graph g = gadgets::complete(3);
  g.add_loop(0);
  const auto r = check_graph(g);
  EXPECT_EQ(r.looped, 1);
  EXPECT_EQ(r.n, 2);
  EXPECT_EQ(r.mis, 2U);
  EXPECT_TRUE(r.tight);
}

TEST(CheckGraph, PackingBounds) {
  Packing c4;
  c4.c4s.push_back({0, 1, 2, 3});
  const auto r = check_graph(gadgets::cycle(4), c4);
  ASSERT_EQ(r.stability.size(), 1U);
  EXPECT_EQ(r.stability[0].name, "c4");
  EXPECT_EQ(r.stability[0].value, frac(16, 7));
  EXPECT_EQ(r.bound, frac(16, 7));
  EXPECT_TRUE(r.satisfied);
  EXPECT_FALSE(r.tight);

  Packing tl;
  tl.tls.push_back({3, {0, 1, 2, 3, 4, 5}});
  const auto t = check_graph(gadgets::prism(3), tl);
  EXPECT_EQ(t.bound, frac(31, 4));
  EXPECT_EQ(t.mis, 6U);

  Graph chord = gadgets::cycle(4);
  chord.add_edge(0, 2);
  EXPECT_THROW(check_graph(chord, c4), std::invalid_argument);
  Graph looped = gadgets::cycle(4);
  looped.add_loop(2);
  EXPECT_THROW(check_graph(looped, c4), std::invalid_argument);
}

TEST(CheckGraph, TightImpliesSatisfied) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 14);
    const auto s = oracle::random_graph(rng, n, 0.1 + static_cast<double>(rng() % 50) / 100.0, 0.05);
    Graph g(n);
    for (int u = 0; u < n; ++u) {
      if (s.loop[u]) g.add_loop(u);
      for (int v = u + 1; v < n; ++v) {
        if (s.adj[u][v]) g.add_edge(u, v);
      }
    }
    const auto r = check_graph(g);
    if (r.tight) { EXPECT_TRUE(r.satisfied); }
    EXPECT_TRUE(r.ok()) << emit_graph(g, GraphFormat::EdgeList);
    EXPECT_LE(BoundValue(static_cast<std::int64_t>(r.mis)), r.matching_bound);
  }
}

TEST(PowerLess, ExactComparisons) {
  // 2^(1/2) < 3^(1/3)? 8 < 9
  EXPECT_TRUE(power_less({{2, Rational(1, 2)}}, {{3, Rational(1, 3)}}));
  EXPECT_FALSE(power_less({{3, Rational(1, 3)}}, {{2, Rational(1, 2)}}));
  EXPECT_FALSE(power_less({{4, 1}}, {{2, 2}}));
  EXPECT_TRUE(power_less({{Rational(59, 64), 1}, {2, 3}}, {{Rational(31, 4), 1}}));
  EXPECT_TRUE(power_less({}, {{Rational(3, 2), Rational(1, 100)}}));
  EXPECT_THROW(power_less({{0, 1}}, {}), std::invalid_argument);
  EXPECT_THROW(power_less({{2, Rational(1, 1 << 23)}}, {{3, Rational(1, 3)}}), std::invalid_argument);
}

TEST(Constants, DefaultPoint) {
  const auto checks = constant_checks({});
  ASSERT_EQ(checks.size(), 11U);
  for (const auto& c : checks) {
    EXPECT_FALSE(c.name.empty());
    EXPECT_FALSE(c.relation.empty());
  }
  // exponent bookkeeping is deterministic
  const auto again = constant_checks({});
  for (std::size_t i = 0; i < checks.size(); ++i) EXPECT_EQ(checks[i].holds, again[i].holds);
}

TEST(Rationals, Parse) {
  EXPECT_EQ(parse_rational("16/7"), Rational(16, 7));
  EXPECT_EQ(parse_rational("-3"), Rational(-3));
  EXPECT_EQ(parse_rational("0.96"), Rational(24, 25));
  EXPECT_EQ(parse_rational("0.0001"), Rational(1, 10000));
  EXPECT_EQ(to_string(Rational(6, 4)), "3/2");
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
}
