#include <gtest/gtest.h>

#include <algorithm>
#include <stdexcept>

#include "oracles.hpp"
#include "sumfree/bounds.hpp"
#include "sumfree/report.hpp"

using namespace sumfree;

namespace {

oracle::SimpleGraph to_simple(const Graph& g) {
  oracle::SimpleGraph s(g.order());
  for (auto [u, v] : g.edges()) s.edge(u, v);
  return s;
}

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

TEST(Sweep, SmallCounts) {
  const auto s = exhaustive_sweep({.n_max = 4, .jobs = 1});
  EXPECT_TRUE(s.ok());
  ASSERT_EQ(s.levels.size(), 4U);
  EXPECT_EQ(s.levels[3].graphs, 64U);
  EXPECT_EQ(s.graphs, 1U + 2U + 8U + 64U);
  EXPECT_TRUE(s.recorded.empty());
}

// Tight counts per level from the subset oracles.
TEST(Sweep, TightCensusMatchesOracle) {
  const auto s = exhaustive_sweep({.n_max = 5, .jobs = 1});
  ASSERT_TRUE(s.ok());
  for (int n = 1; n <= 5; ++n) {
    std::uint64_t tight = 0;
    std::uint64_t triangle_free = 0;
    std::vector<std::uint64_t> best(n / 2 + 1, 0);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * (n - 1) / 2)); ++mask) {
      const auto g = to_simple(graph_from_slots(n, mask));
      const auto mis = oracle::mis_count(g);
      const int nu = oracle::matching_number(g);
      const auto bound = 3 * nu <= n ? ipow(3, nu) : ipow(2, 3 * nu - n) * ipow(3, n - 2 * nu);
      tight += mis == bound;
      best[nu] = std::max(best[nu], mis);
      bool tf = true;
      for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
          for (int c = b + 1; c < n; ++c) tf = tf && !(g.adj[a][b] && g.adj[b][c] && g.adj[a][c]);
        }
      }
      triangle_free += tf;
    }
    const auto& level = s.levels[static_cast<std::size_t>(n - 1)];
    EXPECT_EQ(level.matching_tight, tight) << "n=" << n;
    EXPECT_EQ(level.triangle_free, triangle_free) << "n=" << n;
    EXPECT_EQ(level.max_mis_by_nu, best) << "n=" << n;
  }
}

TEST(Sweep, FrozenCensusToSix) {
  const auto s = exhaustive_sweep({.n_max = 6, .jobs = 2});
  ASSERT_TRUE(s.ok());
  const std::vector<std::uint64_t> tight{1, 2, 2, 9, 21, 151};
  for (std::size_t i = 0; i < tight.size(); ++i) {
    EXPECT_EQ(s.levels[i].matching_tight, tight[i]) << "n=" << i + 1;
    EXPECT_EQ(s.levels[i].type_a_tight + s.levels[i].type_b_tight, tight[i]);
  }
  EXPECT_EQ(s.levels[5].graphs, 32768U);
  // triangle factors: one on 3 vertices, ten labeled on 6
  EXPECT_EQ(s.levels[2].moon_moser_tight, 1U);
  EXPECT_EQ(s.levels[5].moon_moser_tight, 10U);
  // perfect matchings of K_n
  EXPECT_EQ(s.levels[1].hujter_tuza_tight, 1U);
  EXPECT_EQ(s.levels[3].hujter_tuza_tight, 3U);
  EXPECT_EQ(s.levels[5].hujter_tuza_tight, 15U);
  for (const auto& l : s.levels) EXPECT_GT(l.identities_checked, 0U);
}

TEST(Sweep, IndependentOfWorkerCount) {
  const auto one = to_json(exhaustive_sweep({.n_max = 5, .jobs = 1}));
  for (unsigned jobs : {2U, 3U, 7U}) EXPECT_EQ(to_json(exhaustive_sweep({.n_max = 5, .jobs = jobs})), one);
}

TEST(Sweep, RejectsOrders) {
  EXPECT_THROW(exhaustive_sweep({.n_max = 0}), std::invalid_argument);
  EXPECT_THROW(exhaustive_sweep({.n_max = 9}), std::invalid_argument);
}

TEST(Sweep, SlotOrder) {
  EXPECT_EQ(graph_from_slots(3, 0b001).edges(), (std::vector<std::pair<int, int>>{{0, 1}}));
  EXPECT_EQ(graph_from_slots(3, 0b010).edges(), (std::vector<std::pair<int, int>>{{0, 2}}));
  EXPECT_EQ(graph_from_slots(3, 0b100).edges(), (std::vector<std::pair<int, int>>{{1, 2}}));
  EXPECT_EQ(graph_from_slots(4, 0b001000).edges(), (std::vector<std::pair<int, int>>{{0, 3}}));
}

TEST(Sweep, CsvLayout) {
  const auto csv = to_csv(exhaustive_sweep({.n_max = 3, .jobs = 1}));
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "n,graphs,matching_tight,type_a_tight,type_b_tight,moon_moser_tight,triangle_free,hujter_tuza_tight,"
            "identities_checked,violations");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 4);
}
