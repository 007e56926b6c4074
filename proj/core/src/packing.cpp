#include <string>

#include "sumfree/graph.hpp"

namespace sumfree {

namespace {

std::optional<PackingViolation> fail(std::string message, std::vector<int> vertices) {
  return PackingViolation{std::move(message), std::move(vertices)};
}

std::string edge_name(int u, int v) { return std::to_string(u) + "-" + std::to_string(v); }

}  // namespace

std::optional<PackingViolation> validate_packing(const Graph& g, const Packing& p) {
  const int n = g.order();
  auto in_range = [&](int v) { return v >= 0 && v < n; };

  // Matching edges, C4s and T_l copies share one disjointness budget.
  VertexMask used = 0;
  auto claim = [&](const std::vector<int>& vs, const std::string& what) -> std::optional<PackingViolation> {
    for (int v : vs) {
      if (!in_range(v)) return fail(what + ": vertex " + std::to_string(v) + " out of range", {v});
    }
    VertexMask local = 0;
    for (int v : vs) {
      if (local & bit(v)) return fail(what + ": vertex " + std::to_string(v) + " repeated", {v});
      local |= bit(v);
    }
    if (used & local) {
      std::vector<int> clash;
      for (int v : vs) {
        if (used & bit(v)) clash.push_back(v);
      }
      return fail(what + ": not vertex-disjoint from earlier structures", clash);
    }
    used |= local;
    return std::nullopt;
  };

  for (auto [u, v] : p.matching) {
    if (auto bad = claim({u, v}, "matching edge " + edge_name(u, v))) return bad;
    if (!g.adjacent(u, v)) return fail("matching edge " + edge_name(u, v) + " is not an edge", {u, v});
  }

  for (const auto& c : p.c4s) {
    std::vector<int> vs(c.begin(), c.end());
    const std::string what = "C4 (" + std::to_string(c[0]) + "," + std::to_string(c[1]) + "," +
                             std::to_string(c[2]) + "," + std::to_string(c[3]) + ")";
    if (auto bad = claim(vs, what)) return bad;
    for (int i = 0; i < 4; ++i) {
      const int a = c[i];
      const int b = c[(i + 1) % 4];
      if (!g.adjacent(a, b)) return fail(what + ": missing cycle edge " + edge_name(a, b), {a, b});
      if (g.has_loop(a)) return fail(what + ": C4 not induced (loop at " + std::to_string(a) + ")", {a});
    }
    if (g.adjacent(c[0], c[2])) return fail(what + ": C4 not induced (chord " + edge_name(c[0], c[2]) + ")", {c[0], c[2]});
    if (g.adjacent(c[1], c[3])) return fail(what + ": C4 not induced (chord " + edge_name(c[1], c[3]) + ")", {c[1], c[3]});
  }

  std::optional<int> tl_length;
  for (const auto& t : p.tls) {
    const std::string what = "T_" + std::to_string(t.l) + " copy";
    if (t.l < 3) return fail(what + ": l must be >= 3", {});
    if (tl_length && *tl_length != t.l) return fail("T_l copies with different l in one packing", {});
    tl_length = t.l;
    if (t.vertices.size() != static_cast<std::size_t>(2 * t.l)) {
      return fail(what + ": expected " + std::to_string(2 * t.l) + " vertices", {});
    }
    if (auto bad = claim(t.vertices, what)) return bad;
    const int l = t.l;
    for (int i = 0; i < l; ++i) {
      const int ui = t.vertices[i];
      const int un = t.vertices[(i + 1) % l];
      const int vi = t.vertices[l + i];
      const int vn = t.vertices[l + (i + 1) % l];
      if (!g.adjacent(ui, un)) return fail(what + ": missing first-cycle edge " + edge_name(ui, un), {ui, un});
      if (!g.adjacent(vi, vn)) return fail(what + ": missing second-cycle edge " + edge_name(vi, vn), {vi, vn});
      if (!g.adjacent(ui, vi)) return fail(what + ": missing matching edge " + edge_name(ui, vi), {ui, vi});
    }
  }

  VertexMask matched = 0;
  for (auto [u, v] : p.matching) matched |= bit(u) | bit(v);

  VertexMask deg4_used = 0;
  for (std::size_t i = 0; i < p.deg4sets.size(); ++i) {
    const auto& set = p.deg4sets[i];
    const std::string what = "degree-4 set #" + std::to_string(i);
    VertexMask mask = 0;
    for (int v : set) {
      if (!in_range(v)) return fail(what + ": vertex " + std::to_string(v) + " out of range", {v});
      if (mask & bit(v)) return fail(what + ": vertex " + std::to_string(v) + " repeated", {v});
      mask |= bit(v);
    }
    if (deg4_used & mask) return fail(what + ": overlaps an earlier degree-4 set", {});
    deg4_used |= mask;

    bool holds_edge = false;
    for (auto [u, v] : p.matching) holds_edge |= ((mask >> u) & 1U) && ((mask >> v) & 1U);
    if (!holds_edge) return fail(what + ": contains no matching edge", set);

    for (VertexMask m = mask & matched; m != 0; m &= m - 1) {
      const int v = std::countr_zero(m);
      const int d = std::popcount(g.neighbors(v) & mask);
      if (d < 4) {
        return fail(what + ": matched vertex " + std::to_string(v) + " has degree " + std::to_string(d) +
                        " < 4 within the set",
                    {v});
      }
    }
  }
  return std::nullopt;
}

}  // namespace sumfree
