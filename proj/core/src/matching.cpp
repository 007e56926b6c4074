#include <algorithm>

#include "sumfree/graph.hpp"

namespace sumfree {

namespace {

// Exact maximum matching by branching on a minimum-degree vertex u: either u
// stays unmatched or it is matched to one of its neighbours. A pendant vertex
// is always matched, since some maximum matching covers its only edge.
class MatchingSearch {
 public:
  explicit MatchingSearch(const Graph& g) : g_(g) {}

  std::vector<std::pair<int, int>> run(VertexMask alive) {
    best_.clear();
    current_.clear();
    best_ = greedy(alive);
    search(alive);
    std::sort(best_.begin(), best_.end());
    return best_;
  }

 private:
  VertexMask drop_isolated(VertexMask active) const {
    VertexMask keep = 0;
    for (VertexMask a = active; a != 0; a &= a - 1) {
      const int v = std::countr_zero(a);
      if (g_.neighbors(v) & active) keep |= bit(v);
    }
    return keep;
  }

  std::vector<std::pair<int, int>> greedy(VertexMask active) const {
    std::vector<std::pair<int, int>> m;
    active = drop_isolated(active);
    while (active != 0) {
      // Cheapest endpoint first keeps high-degree vertices available.
      int u = -1;
      int du = kMaxVertices + 1;
      for (VertexMask a = active; a != 0; a &= a - 1) {
        const int v = std::countr_zero(a);
        const int d = std::popcount(g_.neighbors(v) & active);
        if (d < du) {
          du = d;
          u = v;
        }
      }
      int w = -1;
      int dw = kMaxVertices + 1;
      for (VertexMask nb = g_.neighbors(u) & active; nb != 0; nb &= nb - 1) {
        const int v = std::countr_zero(nb);
        const int d = std::popcount(g_.neighbors(v) & active);
        if (d < dw) {
          dw = d;
          w = v;
        }
      }
      m.emplace_back(std::min(u, w), std::max(u, w));
      active = drop_isolated(active & ~(bit(u) | bit(w)));
    }
    return m;
  }

  // Size of a greedy vertex cover; any cover bounds the matching number.
  int cover_bound(VertexMask active) const {
    int size = 0;
    while (true) {
      int pick = -1;
      int best = 0;
      for (VertexMask a = active; a != 0; a &= a - 1) {
        const int v = std::countr_zero(a);
        const int d = std::popcount(g_.neighbors(v) & active);
        if (d > best) {
          best = d;
          pick = v;
        }
      }
      if (pick < 0) return size;
      ++size;
      active &= ~bit(pick);
    }
  }

  void search(VertexMask active) {
    active = drop_isolated(active);
    const auto have = current_.size();
    if (active == 0) {
      if (have > best_.size()) best_ = current_;
      return;
    }
    const auto upper = std::min(std::popcount(active) / 2, cover_bound(active));
    if (have + static_cast<std::size_t>(upper) <= best_.size()) return;

    const auto lower = greedy(active);
    if (have + lower.size() > best_.size()) {
      best_ = current_;
      best_.insert(best_.end(), lower.begin(), lower.end());
    }
    if (lower.size() == static_cast<std::size_t>(upper)) return;

    int u = -1;
    int du = kMaxVertices + 1;
    for (VertexMask a = active; a != 0; a &= a - 1) {
      const int v = std::countr_zero(a);
      const int d = std::popcount(g_.neighbors(v) & active);
      if (d < du) {
        du = d;
        u = v;
      }
    }
    for (VertexMask nb = g_.neighbors(u) & active; nb != 0; nb &= nb - 1) {
      const int w = std::countr_zero(nb);
      current_.emplace_back(std::min(u, w), std::max(u, w));
      search(active & ~(bit(u) | bit(w)));
      current_.pop_back();
    }
    if (du > 1) search(active & ~bit(u));
  }

  const Graph& g_;
  std::vector<std::pair<int, int>> best_;
  std::vector<std::pair<int, int>> current_;
};

}  // namespace

int matching_number(const Graph& g) { return matching_number(g, g.vertices()); }

int matching_number(const Graph& g, VertexMask alive) {
  return static_cast<int>(MatchingSearch(g).run(alive & g.vertices()).size());
}

std::vector<std::pair<int, int>> maximum_matching(const Graph& g) { return MatchingSearch(g).run(g.vertices()); }

}  // namespace sumfree
