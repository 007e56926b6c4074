#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "sumfree/sets.hpp"

using namespace sumfree;

namespace {

ElementSet subset(const GroupSpec& g, const char* literal) { return parse_subset(g, literal); }

std::vector<std::uint64_t> masks(const std::vector<ElementSet>& sets) {
  std::vector<std::uint64_t> out;
  for (const auto& s : sets) out.push_back(s.to_mask());
  return out;
}

std::vector<int> as_ints(const ElementSet& s) {
  std::vector<int> out;
  for (auto x : s.members()) out.push_back(static_cast<int>(x));
  return out;
}

struct TableRow {
  std::vector<int> moduli;
  std::uint64_t mu;
  std::uint64_t mu_star;
  std::size_t f_max;
  std::size_t f_star_max;
};

// Brute force over every subset, computed separately from this library.
const std::vector<TableRow> kTable{
    {{2}, 1, 2, 1, 1},         {{3}, 1, 2, 2, 3},         {{2, 2}, 2, 3, 3, 3},     {{4}, 2, 3, 2, 3},
    {{5}, 2, 3, 2, 6},         {{2, 3}, 3, 3, 5, 12},     {{6}, 3, 3, 5, 12},       {{7}, 2, 4, 9, 14},
    {{2, 2, 2}, 4, 5, 7, 7},   {{2, 4}, 4, 4, 5, 19},     {{8}, 4, 4, 8, 19},       {{3, 3}, 3, 4, 8, 14},
    {{9}, 3, 4, 8, 23},        {{2, 5}, 5, 5, 9, 43},     {{10}, 5, 5, 9, 43},      {{11}, 4, 4, 15, 75},
    {{2, 2, 3}, 6, 6, 14, 60}, {{2, 6}, 6, 6, 14, 60},    {{3, 4}, 6, 6, 19, 78},   {{12}, 6, 6, 19, 78},
    {{13}, 4, 5, 37, 103},     {{2, 7}, 7, 7, 31, 128},   {{14}, 7, 7, 31, 128},    {{3, 5}, 6, 6, 32, 170},
    {{15}, 6, 6, 32, 170},     {{2, 2, 2, 2}, 8, 9, 183, 183}, {{2, 2, 4}, 8, 8, 27, 191}, {{2, 8}, 8, 8, 49, 199},
    {{4, 4}, 8, 8, 37, 303},   {{16}, 8, 8, 56, 251},
};

}  // namespace

TEST(Schur, Triples) {
  const auto z4 = make_group({4});
  EXPECT_TRUE(is_schur(z4, {{1}}, {{1}}, {{2}}));
  EXPECT_FALSE(is_distinct_schur(z4, {{1}}, {{1}}, {{2}}));
  EXPECT_TRUE(is_schur(z4, {{1}}, {{2}}, {{3}}));
  EXPECT_TRUE(is_distinct_schur(z4, {{1}}, {{2}}, {{3}}));
  const auto z7 = make_group({7});
  EXPECT_FALSE(is_schur(z7, {{2}}, {{3}}, {{4}}));
  EXPECT_FALSE(is_distinct_schur(z7, {{2}}, {{3}}, {{4}}));
}

TEST(SumFree, Examples) {
  const auto z4 = make_group({4});
  EXPECT_TRUE(is_sum_free(z4, subset(z4, "{1,3}")));
  EXPECT_FALSE(is_sum_free(z4, subset(z4, "1,2")));
  const auto z3 = make_group({3});
  EXPECT_TRUE(is_distinct_sum_free(z3, subset(z3, "1,2")));
  EXPECT_FALSE(is_sum_free(z3, subset(z3, "1,2")));
  EXPECT_FALSE(is_sum_free(z3, subset(z3, "0")));
  EXPECT_TRUE(is_distinct_sum_free(z3, subset(z3, "0")));
}

TEST(SumFree, TripleWitness) {
  const auto z4 = make_group({4});
  const auto t = find_schur_triple(z4, subset(z4, "1,2"), SumFreeMode::SumFree);
  ASSERT_TRUE(t);
  EXPECT_EQ(z4.add_index((*t)[0], (*t)[1]), (*t)[2]);
  EXPECT_FALSE(find_schur_triple(z4, subset(z4, "1,3"), SumFreeMode::SumFree));
  const auto d = find_schur_triple(z4, subset(z4, "1,2,3"), SumFreeMode::Distinct);
  ASSERT_TRUE(d);
  EXPECT_NE((*d)[0], (*d)[1]);
}

TEST(SumFree, AgreesWithCoordinateOracle) {
  std::mt19937_64 rng(31);
  const std::vector<std::vector<int>> shapes{{7}, {2, 4}, {3, 3}, {2, 2, 2, 2}, {4, 5}, {2, 3, 5}, {6, 6}};
  for (const auto& mods : shapes) {
    const auto g = make_group(mods);
    const oracle::CoordGroup o(mods);
    for (int trial = 0; trial < 300; ++trial) {
      const std::uint64_t mask = oracle::random_mask(rng, o.order(), 0.15);
      const auto s = ElementSet::from_mask(g.order(), mask);
      ASSERT_EQ(is_sum_free(g, s), oracle::free_set(o, oracle::members(mask), false));
      ASSERT_EQ(is_distinct_sum_free(g, s), oracle::free_set(o, oracle::members(mask), true));
    }
  }
}

TEST(Subsets, ParseAndFormat) {
  const auto g = make_group({2, 3});
  const auto s = subset(g, "{(1,0),(0,2)}");
  EXPECT_EQ(s.size(), 2U);
  EXPECT_EQ(format_subset(g, s), "{(0,2),(1,0)}");
  const auto z4 = make_group({4});
  EXPECT_EQ(format_subset(z4, subset(z4, "3,1")), "{1,3}");
  EXPECT_EQ(format_subset(z4, subset(z4, "{}")), "{}");
  EXPECT_EQ(subset(z4, "").size(), 0U);
  EXPECT_THROW(subset(g, "(1,0"), std::invalid_argument);
}

TEST(Mu, Examples) {
  EXPECT_EQ(mu_brute(make_group({4})), 2U);
  EXPECT_EQ(mu_brute(make_group({7})), 2U);
  EXPECT_EQ(mu_brute(make_group({2, 3})), 3U);
  EXPECT_THROW(mu_brute(make_group({25})), std::invalid_argument);
}

TEST(Mu, EqualsFormulaUpToTwenty) {
  for (std::uint64_t n = 2; n <= 20; ++n) {
    for (const auto& g : groups_of_order(n)) EXPECT_EQ(mu_brute(g), mu_formula(g)) << g.to_string();
  }
}

TEST(Msf, Examples) {
  const auto z2 = make_group({2});
  EXPECT_EQ(masks(enumerate_msf(z2, SumFreeMode::SumFree)), (std::vector<std::uint64_t>{0b10}));
  const auto z4 = make_group({4});
  const auto sets = enumerate_msf(z4, SumFreeMode::SumFree);
  ASSERT_EQ(sets.size(), 2U);
  EXPECT_EQ(format_subset(z4, sets[0]), "{2}");
  EXPECT_EQ(format_subset(z4, sets[1]), "{1,3}");
  EXPECT_EQ(enumerate_msf(make_group({2, 2}), SumFreeMode::SumFree).size(), 3U);
  EXPECT_THROW(enumerate_msf(make_group({21}), SumFreeMode::SumFree), std::invalid_argument);
}

TEST(Msf, FrozenTable) {
  for (const auto& row : kTable) {
    const auto g = make_group(row.moduli);
    EXPECT_EQ(mu_brute(g), row.mu) << g.to_string();
    EXPECT_EQ(mu_star_brute(g), row.mu_star) << g.to_string();
    EXPECT_EQ(enumerate_msf(g, SumFreeMode::SumFree).size(), row.f_max) << g.to_string();
    EXPECT_EQ(enumerate_msf(g, SumFreeMode::Distinct).size(), row.f_star_max) << g.to_string();
  }
}

TEST(Msf, MatchesSubsetOracle) {
  for (const auto& mods : std::vector<std::vector<int>>{{5}, {2, 4}, {3, 3}, {2, 6}, {13}, {2, 2, 2, 2}}) {
    const auto g = make_group(mods);
    const oracle::CoordGroup o(mods);
    const std::uint64_t all = (std::uint64_t{1} << o.order()) - 1;
    for (bool distinct : {false, true}) {
      const auto got = masks(enumerate_msf(g, distinct ? SumFreeMode::Distinct : SumFreeMode::SumFree));
      EXPECT_EQ(got, oracle::maximal_free(o, all, 0, distinct)) << g.to_string() << " distinct=" << distinct;
    }
  }
}

TEST(Msf, OutputInvariants) {
  for (std::uint64_t n = 2; n <= 16; ++n) {
    for (const auto& g : groups_of_order(n)) {
      for (auto mode : {SumFreeMode::SumFree, SumFreeMode::Distinct}) {
        const auto sets = enumerate_msf(g, mode);
        for (std::size_t i = 0; i < sets.size(); ++i) {
          ASSERT_TRUE(is_free(g, sets[i], mode));
          if (mode == SumFreeMode::SumFree) { ASSERT_FALSE(sets[i].contains(0)); }
          for (std::uint64_t x = 0; x < g.order(); ++x) {
            if (sets[i].contains(x)) continue;
            auto bigger = sets[i];
            bigger.insert(x);
            ASSERT_FALSE(is_free(g, bigger, mode)) << g.to_string() << " " << format_subset(g, sets[i]);
          }
          for (std::size_t j = i + 1; j < sets.size(); ++j) {
            ASSERT_FALSE(sets[i].is_subset_of(sets[j]) || sets[j].is_subset_of(sets[i]));
            ASSERT_LT(sets[i], sets[j]);
          }
        }
      }
    }
  }
}

// f*_max(Z2^k x Z3) >= 3^(2^(k-1)) from the explicit family.
TEST(Msf, ExceptionalFamilyLowerBound) {
  EXPECT_GE(enumerate_msf(make_group({2, 3}), SumFreeMode::Distinct).size(), 3U);
  EXPECT_GE(enumerate_msf(make_group({2, 2, 3}), SumFreeMode::Distinct).size(), 9U);
}

TEST(MsfWithin, Examples) {
  const auto z4 = make_group({4});
  const auto a = subset(z4, "1,3");
  const auto s = subset(z4, "2");
  const auto full = enumerate_msf_within(z4, a, s, SumFreeMode::SumFree);
  ASSERT_EQ(full.size(), 1U);
  EXPECT_EQ(format_subset(z4, full[0]), "{2}");
  const auto none = enumerate_msf_within(z4, a, ElementSet(4), SumFreeMode::SumFree);
  ASSERT_EQ(none.size(), 1U);
  EXPECT_EQ(format_subset(z4, none[0]), "{1,3}");
  const auto distinct = enumerate_msf_within(z4, a, s, SumFreeMode::Distinct);
  ASSERT_EQ(distinct.size(), 2U);
  EXPECT_EQ(format_subset(z4, distinct[0]), "{1,2}");
  EXPECT_EQ(format_subset(z4, distinct[1]), "{2,3}");
  EXPECT_THROW(enumerate_msf_within(z4, a, subset(z4, "1"), SumFreeMode::SumFree), std::invalid_argument);
  EXPECT_THROW(enumerate_msf_within(z4, subset(z4, "2"), subset(z4, "1,3,2"), SumFreeMode::SumFree),
               std::invalid_argument);
}

TEST(MsfWithin, MatchesSubsetOracle) {
  std::mt19937_64 rng(32);
  for (const auto& mods : std::vector<std::vector<int>>{{9}, {2, 6}, {4, 4}, {2, 2, 2, 2}, {3, 5}}) {
    const auto g = make_group(mods);
    const oracle::CoordGroup o(mods);
    for (int trial = 0; trial < 60; ++trial) {
      const std::uint64_t a = oracle::random_mask(rng, o.order(), 0.5);
      std::uint64_t s = oracle::random_mask(rng, o.order(), 0.15) & ~a;
      const bool distinct = trial % 2 == 1;
      if (!oracle::free_set(o, oracle::members(s), distinct)) s = 0;
      const auto got = masks(enumerate_msf_within(g, ElementSet::from_mask(g.order(), a),
                                                  ElementSet::from_mask(g.order(), s),
                                                  distinct ? SumFreeMode::Distinct : SumFreeMode::SumFree));
      ASSERT_EQ(got, oracle::maximal_free(o, a | s, s, distinct)) << g.to_string();
    }
  }
}

TEST(FreeSubsets, CountsEverySubset) {
  const auto z4 = make_group({4});
  // {}, {1}, {2}, {3}, {1,3}
  EXPECT_EQ(enumerate_free_subsets(z4, subset(z4, "0,1,2,3"), SumFreeMode::SumFree).size(), 5U);
  const auto g = make_group({2, 4});
  const oracle::CoordGroup o({2, 4});
  std::size_t expected = 0;
  for (std::uint64_t s = 0; s < 256; ++s) expected += oracle::free_set(o, oracle::members(s), true);
  const auto all = ElementSet::from_mask(8, 0xFF);
  EXPECT_EQ(enumerate_free_subsets(g, all, SumFreeMode::Distinct).size(), expected);
}

TEST(LinkGraph, Examples) {
  const auto z4 = make_group({4});
  const auto a = subset(z4, "1,3");
  const auto s = subset(z4, "2");
  const auto full = link_graph(z4, a, s, LinkKind::Full);
  EXPECT_EQ(full.vertex_map, (std::vector<std::uint64_t>{1, 3}));
  EXPECT_TRUE(full.graph.adjacent(0, 1));
  EXPECT_TRUE(full.graph.has_loop(0));
  EXPECT_TRUE(full.graph.has_loop(1));
  EXPECT_EQ(mis_count(full.graph), 1U);
  const auto distinct = link_graph(z4, a, s, LinkKind::Distinct);
  EXPECT_TRUE(distinct.graph.adjacent(0, 1));
  EXPECT_EQ(distinct.graph.loops(), 0U);
  EXPECT_EQ(mis_count(distinct.graph), 2U);

  const auto g = make_group({2, 6});
  const auto empty = link_graph(g, subset(g, "(1,1),(0,3),(1,5)"), ElementSet(12), LinkKind::Full);
  EXPECT_EQ(empty.graph.edge_count(), 0U);
  EXPECT_EQ(empty.graph.loops(), 0U);
  EXPECT_THROW(link_graph(z4, a, subset(z4, "1"), LinkKind::Full), std::invalid_argument);
}

TEST(LinkGraph, MatchesRuleOracle) {
  std::mt19937_64 rng(33);
  for (const auto& mods : std::vector<std::vector<int>>{{8}, {2, 2, 3}, {3, 5}, {2, 2, 2, 2}, {5, 5}}) {
    const auto g = make_group(mods);
    const oracle::CoordGroup o(mods);
    for (int trial = 0; trial < 80; ++trial) {
      const std::uint64_t a = oracle::random_mask(rng, o.order(), 0.4);
      const std::uint64_t s = oracle::random_mask(rng, o.order(), 0.2) & ~a;
      for (bool full : {true, false}) {
        const auto got = link_graph(g, ElementSet::from_mask(g.order(), a), ElementSet::from_mask(g.order(), s),
                                    full ? LinkKind::Full : LinkKind::Distinct);
        const auto want = oracle::link_graph(o, oracle::members(a), oracle::members(s), full);
        ASSERT_EQ(got.graph.order(), want.n);
        for (int u = 0; u < want.n; ++u) {
          ASSERT_EQ(got.graph.has_loop(u), static_cast<bool>(want.loop[u])) << g.to_string();
          for (int v = 0; v < want.n; ++v) {
            if (u != v) { ASSERT_EQ(got.graph.adjacent(u, v), static_cast<bool>(want.adj[u][v])) << g.to_string(); }
          }
        }
      }
    }
  }
}

// msf(A u S; S) <= mis(L_S[A]) for every maximal A and free S disjoint from it.
TEST(LinkReduction, SmallGroups) {
  for (std::uint64_t n = 2; n <= 10; ++n) {
    for (const auto& g : groups_of_order(n)) {
      const auto r = verify_link_reduction(g);
      EXPECT_TRUE(r.ok()) << g.to_string() << ": " << r.first_violation.value_or("");
      EXPECT_GT(r.pairs, 0U);
      EXPECT_LE(r.equal_full, r.pairs);
    }
  }
}

TEST(LinkReduction, RandomPairsAgainstOracle) {
  std::mt19937_64 rng(34);
  for (const auto& mods : std::vector<std::vector<int>>{{11}, {2, 6}, {4, 4}, {3, 5}}) {
    const auto g = make_group(mods);
    const oracle::CoordGroup o(mods);
    const auto maximal = enumerate_msf(g, SumFreeMode::SumFree);
    for (int trial = 0; trial < 40; ++trial) {
      const auto& a = maximal[rng() % maximal.size()];
      std::uint64_t s = oracle::random_mask(rng, o.order(), 0.2) & ~a.to_mask();
      if (!oracle::free_set(o, oracle::members(s), false)) s = 0;
      const auto count = oracle::maximal_free(o, a.to_mask() | s, s, false).size();
      const auto link = oracle::link_graph(o, as_ints(a), oracle::members(s), true);
      EXPECT_LE(count, oracle::mis_count(link)) << g.to_string();
    }
  }
}

TEST(LinkReduction, RejectsLargeGroups) {
  EXPECT_THROW(verify_link_reduction(make_group({17})), std::invalid_argument);
}
