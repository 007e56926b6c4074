#include <stdexcept>

#include "sumfree/bounds.hpp"
#include "sumfree/sets.hpp"

namespace sumfree {

bool PipelineReport::ok() const noexcept {
  const bool structure = half_sets_structured == half_sets && order_two_matching_failures == 0;
  const bool bounds = exceptional || (pairs_above_quarter == 0 && half_cases_within == half_cases);
  return structure && bounds && full_exceeds_distinct == 0;
}

namespace {

ElementSet complement(const GroupSpec& g, const ElementSet& a) {
  ElementSet rest(g.order());
  for (std::uint64_t x = 0; x < g.order(); ++x) {
    if (!a.contains(x)) rest.insert(x);
  }
  return rest;
}

Integer pow2(std::uint64_t e) { return Integer(1) << static_cast<unsigned>(e); }

}  // namespace

PipelineReport check_even_order_pipeline(const GroupSpec& g, std::uint64_t cap) {
  const auto n = g.order();
  if (n % 2 != 0) throw std::invalid_argument("pipeline needs an even-order group, got order " + std::to_string(n));
  if (n > cap) {
    throw std::invalid_argument("pipeline: group order " + std::to_string(n) + " exceeds the cap of " +
                                std::to_string(cap));
  }
  PipelineReport r;
  r.group = g.to_string();
  r.order = n;
  r.two_rank = g.two_rank();
  r.exceptional = is_elementary_two_by_three(g);
  auto failure = [&](std::string what) {
    if (!r.first_failure) r.first_failure = std::move(what);
  };

  for (const auto& a : enumerate_msf(g, SumFreeMode::SumFree, cap)) {
    if (a.size() == n / 2) {
      ++r.half_sets;
      if (stability_form_check(g, 2, a)) {
        ++r.half_sets_structured;
      } else {
        failure("half-size maximal sum-free " + format_subset(g, a) + " is not an odd coset");
      }
    }
    for (const auto& s : enumerate_free_subsets(g, complement(g, a), SumFreeMode::SumFree)) {
      ++r.full_pairs;
      const auto full = mis_count(link_graph(g, a, s, LinkKind::Full).graph);
      const auto distinct = mis_count(link_graph(g, a, s, LinkKind::Distinct).graph);
      if (full > distinct) {
        ++r.full_exceeds_distinct;
        failure("A=" + format_subset(g, a) + " S=" + format_subset(g, s) + ": full link mis " +
                std::to_string(full) + " > distinct " + std::to_string(distinct));
      }
    }
  }

  for (const auto& a : enumerate_msf(g, SumFreeMode::Distinct, cap)) {
    const bool half = a.size() == n / 2;
    bool structured = false;
    if (half) {
      ++r.distinct_half_sets;
      structured = stability_form_check(g, 2, a).has_value();
      if (structured) ++r.distinct_half_sets_structured;
    }
    if (a.size() > n / 2) ++r.distinct_oversize_sets;

    for (const auto& s : enumerate_free_subsets(g, complement(g, a), SumFreeMode::Distinct)) {
      ++r.distinct_pairs;
      const auto link = link_graph(g, a, s, LinkKind::Distinct);
      const auto mis = mis_count(link.graph);
      r.max_mis = std::max(r.max_mis, mis);
      if (Integer(mis) * mis * mis * mis > pow2(n)) ++r.pairs_above_quarter;
      if (!structured) continue;

      ++r.half_cases;
      if (Integer(mis) * mis <= pow2(a.size())) ++r.half_cases_within;

      std::vector<int> position(n, -1);
      for (std::size_t i = 0; i < link.vertex_map.size(); ++i) position[link.vertex_map[i]] = static_cast<int>(i);
      for (auto t : s.members()) {
        if (g.order_of(g.element_at(t)) != 2) continue;
        ++r.order_two_cases;
        for (auto x : link.vertex_map) {
          const auto y = g.add_index(x, t);
          if (position[y] < 0 || !link.graph.adjacent(position[x], position[y])) {
            ++r.order_two_matching_failures;
            failure("A=" + format_subset(g, a) + " S=" + format_subset(g, s) + ": no matching edge at " +
                    g.format(g.element_at(x)));
            break;
          }
        }
      }
    }
  }
  return r;
}

}  // namespace sumfree
