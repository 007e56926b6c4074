#include <stdexcept>
#include <string>

#include "sumfree/sets.hpp"

namespace sumfree {

std::string to_string(LinkKind kind) { return kind == LinkKind::Full ? "full" : "distinct"; }

LinkGraphResult link_graph(const GroupSpec& g, const ElementSet& a, const ElementSet& s, LinkKind kind) {
  if (a.universe() != g.order() || s.universe() != g.order()) {
    throw std::invalid_argument("subset does not belong to the group");
  }
  if (a.intersects(s)) throw std::invalid_argument("A and S overlap");
  if (a.size() > static_cast<std::size_t>(kMaxVertices)) {
    throw std::invalid_argument("link graph needs |A| <= 64, got " + std::to_string(a.size()));
  }

  LinkGraphResult out{Graph(static_cast<int>(a.size())), a.members(), kind};
  const auto& vm = out.vertex_map;
  const auto sm = s.members();
  const int n = static_cast<int>(vm.size());

  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const auto x = vm[i];
      const auto y = vm[j];
      if (s.contains(g.add_index(x, y)) || s.contains(g.sub_index(x, y)) || s.contains(g.sub_index(y, x))) {
        out.graph.add_edge(i, j);
      }
    }
  }

  for (int i = 0; i < n; ++i) {
    const auto x = vm[i];
    bool loop = false;
    for (auto t : sm) {
      // x = t + u or x + t = u with u in S, u != t
      const auto u = g.sub_index(x, t);
      if (u != t && s.contains(u)) loop = true;
      const auto w = g.add_index(x, t);
      if (w != t && s.contains(w)) loop = true;
      if (kind == LinkKind::Full && g.double_index(t) == x) loop = true;
      if (loop) break;
    }
    if (kind == LinkKind::Full && s.contains(g.double_index(x))) loop = true;
    if (loop) out.graph.add_loop(i);
  }
  return out;
}

LinkReductionSummary verify_link_reduction(const GroupSpec& g, std::uint64_t cap) {
  if (g.order() > cap) {
    throw std::invalid_argument("verify_link_reduction: group order " + std::to_string(g.order()) +
                                " exceeds the cap of " + std::to_string(cap));
  }
  LinkReductionSummary summary;
  const ElementSet everything = ElementSet::from_mask(g.order(), ~std::uint64_t{0});

  for (auto mode : {SumFreeMode::SumFree, SumFreeMode::Distinct}) {
    const auto kind = mode == SumFreeMode::SumFree ? LinkKind::Full : LinkKind::Distinct;
    const auto maximal = enumerate_msf(g, mode, cap);
    summary.maximal_sets += maximal.size();
    for (const auto& a : maximal) {
      ElementSet rest = everything;
      for (auto x : a.members()) rest.erase(x);
      for (const auto& s : enumerate_free_subsets(g, rest, mode)) {
        ++summary.pairs;
        const auto count = enumerate_msf_within(g, a, s, mode).size();
        const auto mis = mis_count(link_graph(g, a, s, kind).graph);
        if (count == mis) {
          ++(kind == LinkKind::Full ? summary.equal_full : summary.equal_distinct);
        }
        if (count > mis) {
          ++(kind == LinkKind::Full ? summary.violations_full : summary.violations_distinct);
          if (!summary.first_violation) {
            summary.first_violation = g.to_string() + " A=" + format_subset(g, a) + " S=" + format_subset(g, s) +
                                      " " + to_string(kind) + ": msf=" + std::to_string(count) +
                                      " mis=" + std::to_string(mis);
          }
        }
      }
    }
  }
  return summary;
}

}  // namespace sumfree
