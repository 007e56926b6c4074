#ifndef SUMFREE_GRAPH_HPP
#define SUMFREE_GRAPH_HPP

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace sumfree {

using VertexMask = std::uint64_t;

inline constexpr int kMaxVertices = 64;

constexpr VertexMask bit(int v) noexcept { return VertexMask{1} << v; }
constexpr VertexMask prefix_mask(int n) noexcept { return n >= 64 ? ~VertexMask{0} : bit(n) - 1; }

/// Undirected graph on at most 64 vertices with single-word adjacency rows.
/// Loops are kept in a separate mask; a vertex never appears in its own row.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int order() const noexcept { return n_; }
  VertexMask vertices() const noexcept { return prefix_mask(n_); }

  /// u == v records a loop.
  void add_edge(int u, int v);
  void add_loop(int v);

  bool adjacent(int u, int v) const noexcept { return (adj_[u] >> v) & 1U; }
  bool has_loop(int v) const noexcept { return (loops_ >> v) & 1U; }
  VertexMask neighbors(int v) const noexcept { return adj_[v]; }
  VertexMask loops() const noexcept { return loops_; }
  int degree(int v) const noexcept { return std::popcount(adj_[v]); }

  /// Non-loop edges.
  std::size_t edge_count() const noexcept;
  /// Non-loop edges as (u, v) with u < v, sorted.
  std::vector<std::pair<int, int>> edges() const;

  /// Subgraph induced on `keep`, relabeled in increasing vertex order.
  Graph induced(VertexMask keep) const;
  /// Removes every looped vertex.
  Graph without_looped_vertices() const { return induced(vertices() & ~loops_); }

  friend bool operator==(const Graph& a, const Graph& b) noexcept {
    return a.n_ == b.n_ && a.loops_ == b.loops_ && a.adj_ == b.adj_;
  }

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::array<VertexMask, kMaxVertices> adj_{};
  VertexMask loops_ = 0;
};

Graph disjoint_union(std::span<const Graph> parts);

// ---------------------------------------------------------------------------
// Gadgets. Vertex numbering is canonical: for T and T+, the first cycle is
// 0..l-1 and the second l..2l-1.

namespace gadgets {
Graph edgeless(int n);
Graph complete(int k);
Graph cycle(int l);
/// Path on l vertices.
Graph path(int l);
/// Two triangles {0,1,2}, {3,4,5} joined by the edge 2-3.
Graph d6();
/// Two l-cycles u_1..u_l and v_1..v_l with the matching u_i v_i.
Graph prism(int l);
/// Two l-cycles with the matchings u_i v_{l-i+1} and u_i v_{l-i+3} (indices mod l).
Graph prism_plus(int l);
}  // namespace gadgets

// ---------------------------------------------------------------------------
// Maximal independent sets
//
// Looped vertices are self-conflicting: they never enter a set and do not
// need to be dominated. `alive` restricts everything to an induced subgraph.

namespace detail {

template <class Visit>
void mis_branch(const Graph& g, VertexMask chosen, VertexMask undecided, VertexMask pending, Visit& visit) {
  // `pending`: excluded vertices with no chosen neighbour yet. Each needs an
  // undecided neighbour or the branch can never become maximal.
  for (VertexMask p = pending; p != 0; p &= p - 1) {
    const int x = std::countr_zero(p);
    if ((g.neighbors(x) & undecided) == 0) return;
  }
  if (undecided == 0) {
    visit(chosen);
    return;
  }
  int pick = -1;
  int best = -1;
  for (VertexMask u = undecided; u != 0; u &= u - 1) {
    const int v = std::countr_zero(u);
    const int d = std::popcount(g.neighbors(v) & undecided);
    if (d > best) {
      best = d;
      pick = v;
    }
  }
  const VertexMask nb = g.neighbors(pick);
  mis_branch(g, chosen | bit(pick), undecided & ~(nb | bit(pick)), pending & ~nb, visit);
  mis_branch(g, chosen, undecided & ~bit(pick), pending | bit(pick), visit);
}

}  // namespace detail

template <class Visit>
void for_each_mis(const Graph& g, VertexMask alive, Visit&& visit) {
  const VertexMask start = alive & g.vertices() & ~g.loops();
  detail::mis_branch(g, VertexMask{0}, start, VertexMask{0}, visit);
}

template <class Visit>
void for_each_mis(const Graph& g, Visit&& visit) {
  for_each_mis(g, g.vertices(), std::forward<Visit>(visit));
}

/// Sorted by bitset value. Throws std::invalid_argument for n > 64.
std::vector<VertexMask> mis_enumerate(const Graph& g);
std::uint64_t mis_count(const Graph& g);
std::uint64_t mis_count(const Graph& g, VertexMask alive);

struct MisSplit {
  std::uint64_t with = 0;
  std::uint64_t without = 0;
};

/// Counts maximal independent sets containing / avoiding v. Throws
/// std::invalid_argument if v is out of range or looped.
MisSplit mis_split(const Graph& g, int v);

// ---------------------------------------------------------------------------
// Matchings (loops ignored)

int matching_number(const Graph& g);
int matching_number(const Graph& g, VertexMask alive);
/// One maximum matching, edges (u, v) with u < v, sorted.
std::vector<std::pair<int, int>> maximum_matching(const Graph& g);

// ---------------------------------------------------------------------------
// Components and the extremal families

enum class ComponentLabel { Isolated, K2, K3, K4, D6, Cycle, Other };

std::string to_string(ComponentLabel label);

struct ComponentInfo {
  VertexMask vertices = 0;
  int size = 0;
  ComponentLabel label = ComponentLabel::Other;
};

/// Components in order of their smallest vertex.
std::vector<VertexMask> components(const Graph& g);
std::vector<ComponentInfo> classify_components(const Graph& g);

/// Every component is a K3 or an isolated vertex (no loops).
bool is_type_a(const Graph& g);
/// Every component is a K2, K3, K4 or D6 (no loops).
bool is_type_b(const Graph& g);
bool is_triangle_free(const Graph& g);

// ---------------------------------------------------------------------------
// Certified packings for the stability bounds

struct TlCopy {
  int l = 3;
  /// u_1..u_l followed by v_1..v_l.
  std::vector<int> vertices;
};

struct Packing {
  std::vector<std::pair<int, int>> matching;
  /// Each entry lists a 4-cycle in cyclic order a-b-c-d-a.
  std::vector<std::array<int, 4>> c4s;
  std::vector<TlCopy> tls;
  std::vector<std::vector<int>> deg4sets;

  bool empty() const noexcept { return matching.empty() && c4s.empty() && tls.empty() && deg4sets.empty(); }
};

struct PackingViolation {
  std::string message;
  std::vector<int> vertices;
};

/// std::nullopt when every packing condition holds in g.
std::optional<PackingViolation> validate_packing(const Graph& g, const Packing& p);

}  // namespace sumfree

#endif  // SUMFREE_GRAPH_HPP
