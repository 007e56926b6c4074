#include "sumfree/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace sumfree {

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) {
    throw std::invalid_argument("graph order " + std::to_string(n) + " outside [0, 64]");
  }
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range for " + std::to_string(n_) +
                            "-vertex graph");
  }
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) {
    loops_ |= bit(u);
    return;
  }
  adj_[u] |= bit(v);
  adj_[v] |= bit(u);
}

void Graph::add_loop(int v) {
  check_vertex(v);
  loops_ |= bit(v);
}

std::size_t Graph::edge_count() const noexcept {
  std::size_t twice = 0;
  for (int v = 0; v < n_; ++v) twice += static_cast<std::size_t>(std::popcount(adj_[v]));
  return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u) {
    for (VertexMask rest = adj_[u] & ~prefix_mask(u + 1); rest != 0; rest &= rest - 1) {
      out.emplace_back(u, std::countr_zero(rest));
    }
  }
  return out;
}

Graph Graph::induced(VertexMask keep) const {
  keep &= vertices();
  std::array<int, kMaxVertices> relabel{};
  int next = 0;
  for (int v = 0; v < n_; ++v) relabel[v] = (keep >> v) & 1U ? next++ : -1;
  Graph h(next);
  for (int v = 0; v < n_; ++v) {
    if (relabel[v] < 0) continue;
    if (has_loop(v)) h.loops_ |= bit(relabel[v]);
    for (VertexMask rest = adj_[v] & keep; rest != 0; rest &= rest - 1) {
      h.adj_[relabel[v]] |= bit(relabel[std::countr_zero(rest)]);
    }
  }
  return h;
}

Graph disjoint_union(std::span<const Graph> parts) {
  int total = 0;
  for (const auto& p : parts) total += p.order();
  Graph g(total);
  int offset = 0;
  for (const auto& p : parts) {
    for (auto [u, v] : p.edges()) g.add_edge(u + offset, v + offset);
    for (int v = 0; v < p.order(); ++v) {
      if (p.has_loop(v)) g.add_loop(v + offset);
    }
    offset += p.order();
  }
  return g;
}

namespace gadgets {

Graph edgeless(int n) { return Graph(n); }

Graph complete(int k) {
  if (k < 1) throw std::invalid_argument("complete graph needs k >= 1");
  Graph g(k);
  for (int u = 0; u < k; ++u) {
    for (int v = u + 1; v < k; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph cycle(int l) {
  if (l < 3) throw std::invalid_argument("cycle needs l >= 3");
  Graph g(l);
  for (int i = 0; i < l; ++i) g.add_edge(i, (i + 1) % l);
  return g;
}

Graph path(int l) {
  if (l < 1) throw std::invalid_argument("path needs at least one vertex");
  Graph g(l);
  for (int i = 0; i + 1 < l; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph d6() {
  Graph g(6);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(0, 2);
  g.add_edge(3, 4);
  g.add_edge(4, 5);
  g.add_edge(3, 5);
  g.add_edge(2, 3);
  return g;
}

namespace {

Graph two_cycles(int l) {
  if (l < 3) throw std::invalid_argument("T_l needs l >= 3");
  if (2 * l > kMaxVertices) throw std::invalid_argument("T_l needs 2l <= 64");
  Graph g(2 * l);
  for (int i = 0; i < l; ++i) {
    g.add_edge(i, (i + 1) % l);
    g.add_edge(l + i, l + (i + 1) % l);
  }
  return g;
}

}  // namespace

Graph prism(int l) {
  Graph g = two_cycles(l);
  for (int i = 0; i < l; ++i) g.add_edge(i, l + i);
  return g;
}

Graph prism_plus(int l) {
  Graph g = two_cycles(l);
  // 1-based u_i ~ v_{l-i+1}, v_{l-i+3}; 0-based u_i ~ v_{(l-1-i) mod l}, v_{(l+1-i) mod l}.
  for (int i = 0; i < l; ++i) {
    g.add_edge(i, l + ((l - 1 - i) % l + l) % l);
    g.add_edge(i, l + ((l + 1 - i) % l + l) % l);
  }
  return g;
}

}  // namespace gadgets

// ---------------------------------------------------------------------------

std::vector<VertexMask> mis_enumerate(const Graph& g) {
  std::vector<VertexMask> out;
  for_each_mis(g, [&](VertexMask s) { out.push_back(s); });
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t mis_count(const Graph& g) { return mis_count(g, g.vertices()); }

std::uint64_t mis_count(const Graph& g, VertexMask alive) {
  std::uint64_t count = 0;
  for_each_mis(g, alive, [&](VertexMask) { ++count; });
  return count;
}

MisSplit mis_split(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
  if (g.has_loop(v)) throw std::invalid_argument("vertex " + std::to_string(v) + " carries a loop");
  MisSplit split;
  for_each_mis(g, [&](VertexMask s) {
    if ((s >> v) & 1U) {
      ++split.with;
    } else {
      ++split.without;
    }
  });
  return split;
}

}  // namespace sumfree
