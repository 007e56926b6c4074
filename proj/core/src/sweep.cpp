#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>
#include <thread>

#include "sumfree/bounds.hpp"
#include "sumfree/graph_io.hpp"

namespace sumfree {

Graph graph_from_slots(int n, std::uint64_t mask) {
  Graph g(n);
  int k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if ((mask >> k) & 1U) g.add_edge(i, j);
    }
  }
  return g;
}

namespace {

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

struct Tally {
  std::uint64_t total = 0;
  std::array<std::uint64_t, kSweepMaxOrder> with{};
};

Tally tally(const Graph& g, VertexMask alive) {
  Tally t;
  for_each_mis(g, alive, [&](VertexMask s) {
    ++t.total;
    for (; s != 0; s &= s - 1) ++t.with[static_cast<std::size_t>(std::countr_zero(s))];
  });
  return t;
}

class Worker {
 public:
  Worker(int n, std::size_t max_recorded) : n_(n), max_recorded_(max_recorded) {
    level_.n = n;
    level_.max_mis_by_nu.assign(static_cast<std::size_t>(n / 2 + 1), 0);
  }

  void run(std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t mask = lo; mask < hi; ++mask) check(mask);
  }

  SweepLevel& level() { return level_; }
  std::vector<SweepViolation>& recorded() { return recorded_; }

 private:
  void fail(std::uint64_t mask, const Graph& g, const char* check, std::string detail) {
    ++level_.violations;
    if (recorded_.size() < max_recorded_) {
      recorded_.push_back({n_, mask, check, std::move(detail), emit_graph(g, GraphFormat::Graph6)});
    }
  }

  void check(std::uint64_t mask) {
    const Graph g = graph_from_slots(n_, mask);
    const VertexMask all = g.vertices();
    ++level_.graphs;

    const Tally whole = tally(g, all);
    const auto mis = whole.total;
    const int nu = matching_number(g);
    const bool first_branch = 3 * nu <= n_;
    const auto bound = first_branch ? ipow(3, nu) : ipow(2, 3 * nu - n_) * ipow(3, n_ - 2 * nu);
    auto& best = level_.max_mis_by_nu[static_cast<std::size_t>(nu)];
    best = std::max(best, mis);

    if (mis > bound) {
      fail(mask, g, "matching_bound", "mis=" + std::to_string(mis) + " bound=" + std::to_string(bound));
    }
    const bool type_a = is_type_a(g);
    const bool extremal = first_branch ? type_a : is_type_b(g);
    if ((mis == bound) != extremal) {
      fail(mask, g, "matching_equality",
           "mis=" + std::to_string(mis) + " bound=" + std::to_string(bound) + " extremal=" + (extremal ? "1" : "0"));
    }
    if (mis == bound) {
      ++level_.matching_tight;
      ++(first_branch ? level_.type_a_tight : level_.type_b_tight);
    }

    // mis^3 <= 3^n, equality exactly for a triangle factor
    const auto cube = mis * mis * mis;
    const auto mm = ipow(3, n_);
    const bool triangle_factor = type_a && 3 * nu == n_;
    if (cube > mm) fail(mask, g, "moon_moser", "mis=" + std::to_string(mis));
    if ((cube == mm) != triangle_factor) fail(mask, g, "moon_moser_equality", "mis=" + std::to_string(mis));
    if (cube == mm) ++level_.moon_moser_tight;

    if (is_triangle_free(g)) {
      ++level_.triangle_free;
      const auto square = mis * mis;
      const auto ht = ipow(2, n_);
      if (square > ht) fail(mask, g, "hujter_tuza", "mis=" + std::to_string(mis));
      if (square == ht) ++level_.hujter_tuza_tight;
    }

    std::array<Tally, kSweepMaxOrder> minus{};
    std::array<std::uint64_t, kSweepMaxOrder> closed{};
    for (int v = 0; v < n_; ++v) {
      minus[v] = tally(g, all & ~bit(v));
      closed[v] = mis_count(g, all & ~(g.neighbors(v) | bit(v)));
    }
    auto identity = [&](bool holds, const char* name, int v, int u) {
      ++level_.identities_checked;
      if (!holds) {
        fail(mask, g, name, "v=" + std::to_string(v) + (u >= 0 ? " u=" + std::to_string(u) : std::string()));
      }
    };
    for (int v = 0; v < n_; ++v) {
      const auto with = whole.with[v];
      const auto without = mis - with;
      std::uint64_t neighbour_sum = 0;
      for (VertexMask nb = g.neighbors(v); nb != 0; nb &= nb - 1) neighbour_sum += whole.with[std::countr_zero(nb)];
      identity(minus[v].total <= mis, "induced_monotone", v, -1);
      identity(with == closed[v], "with_equals_closed_deletion", v, -1);
      identity(without <= minus[v].total, "without_le_deletion", v, -1);
      identity(without <= neighbour_sum, "without_le_neighbour_with", v, -1);
      for (VertexMask nb = g.neighbors(v); nb != 0; nb &= nb - 1) {
        const int u = std::countr_zero(nb);
        const auto u_absent = minus[v].total - minus[v].with[u];
        identity(mis <= closed[v] + closed[u] + u_absent, "edge_split", v, u);
      }
    }
  }

  int n_;
  std::size_t max_recorded_;
  SweepLevel level_;
  std::vector<SweepViolation> recorded_;
};

}  // namespace

SweepSummary exhaustive_sweep(const SweepOptions& options) {
  if (options.n_max < 1 || options.n_max > kSweepMaxOrder) {
    throw std::invalid_argument("sweep order must lie in [1, 8], got " + std::to_string(options.n_max));
  }
  unsigned jobs = options.jobs == 0 ? std::max(1U, std::thread::hardware_concurrency()) : options.jobs;

  SweepSummary summary;
  summary.n_max = options.n_max;
  for (int n = 1; n <= options.n_max; ++n) {
    const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
    const auto workers = static_cast<unsigned>(std::min<std::uint64_t>(jobs, total));
    std::vector<Worker> pool(workers, Worker(n, options.max_recorded));
    auto range = [&](unsigned w) { return total * w / workers; };
    if (workers == 1) {
      pool[0].run(0, total);
    } else {
      std::vector<std::jthread> threads;
      for (unsigned w = 0; w < workers; ++w) {
        threads.emplace_back([&, w] { pool[w].run(range(w), range(w + 1)); });
      }
    }

    SweepLevel level;
    level.n = n;
    level.max_mis_by_nu.assign(static_cast<std::size_t>(n / 2 + 1), 0);
    for (auto& w : pool) {
      const auto& part = w.level();
      level.graphs += part.graphs;
      level.matching_tight += part.matching_tight;
      level.type_a_tight += part.type_a_tight;
      level.type_b_tight += part.type_b_tight;
      level.moon_moser_tight += part.moon_moser_tight;
      level.triangle_free += part.triangle_free;
      level.hujter_tuza_tight += part.hujter_tuza_tight;
      level.identities_checked += part.identities_checked;
      level.violations += part.violations;
      for (std::size_t i = 0; i < level.max_mis_by_nu.size(); ++i) {
        level.max_mis_by_nu[i] = std::max(level.max_mis_by_nu[i], part.max_mis_by_nu[i]);
      }
      for (auto& v : w.recorded()) {
        if (summary.recorded.size() < options.max_recorded) summary.recorded.push_back(std::move(v));
      }
    }
    // The matching bound must be attained for every matching number.
    for (int nu = 0; nu <= n / 2; ++nu) {
      const auto bound = bound_matching(nu, n);
      if (Integer(level.max_mis_by_nu[static_cast<std::size_t>(nu)]) != bound.numerator()) {
        ++level.violations;
        if (summary.recorded.size() < options.max_recorded) {
          summary.recorded.push_back({n, 0, "matching_bound_attained",
                                      "nu=" + std::to_string(nu) + " max_mis=" +
                                          std::to_string(level.max_mis_by_nu[static_cast<std::size_t>(nu)]),
                                      ""});
        }
      }
    }
    summary.graphs += level.graphs;
    summary.violations += level.violations;
    summary.levels.push_back(std::move(level));
  }
  return summary;
}

}  // namespace sumfree
