#include <algorithm>

#include "sumfree/graph.hpp"

namespace sumfree {

namespace {

int degree_in(const Graph& g, int v, VertexMask within) { return std::popcount(g.neighbors(v) & within); }

int edges_in(const Graph& g, VertexMask within) {
  int twice = 0;
  for (VertexMask a = within; a != 0; a &= a - 1) twice += degree_in(g, std::countr_zero(a), within);
  return twice / 2;
}

bool is_clique(const Graph& g, VertexMask set) {
  for (VertexMask a = set; a != 0; a &= a - 1) {
    const int v = std::countr_zero(a);
    if ((g.neighbors(v) & set) != (set & ~bit(v))) return false;
  }
  return true;
}

// Two triangles joined by one edge: exactly two degree-3 vertices, adjacent,
// each closing a triangle with its two remaining neighbours.
bool is_d6(const Graph& g, VertexMask comp) {
  if (std::popcount(comp) != 6 || edges_in(g, comp) != 7) return false;
  std::vector<int> hubs;
  for (VertexMask a = comp; a != 0; a &= a - 1) {
    const int v = std::countr_zero(a);
    const int d = degree_in(g, v, comp);
    if (d == 3) {
      hubs.push_back(v);
    } else if (d != 2) {
      return false;
    }
  }
  if (hubs.size() != 2 || !g.adjacent(hubs[0], hubs[1])) return false;
  const VertexMask side_a = (g.neighbors(hubs[0]) & comp & ~bit(hubs[1])) | bit(hubs[0]);
  const VertexMask side_b = (g.neighbors(hubs[1]) & comp & ~bit(hubs[0])) | bit(hubs[1]);
  return (side_a & side_b) == 0 && std::popcount(side_a) == 3 && is_clique(g, side_a) && is_clique(g, side_b);
}

ComponentLabel label_of(const Graph& g, VertexMask comp) {
  if (comp & g.loops()) return ComponentLabel::Other;
  const int size = std::popcount(comp);
  if (size == 1) return ComponentLabel::Isolated;
  if (size <= 4 && is_clique(g, comp)) {
    switch (size) {
      case 2: return ComponentLabel::K2;
      case 3: return ComponentLabel::K3;
      default: return ComponentLabel::K4;
    }
  }
  if (is_d6(g, comp)) return ComponentLabel::D6;
  bool two_regular = true;
  for (VertexMask a = comp; a != 0 && two_regular; a &= a - 1) {
    two_regular = degree_in(g, std::countr_zero(a), comp) == 2;
  }
  if (two_regular) return ComponentLabel::Cycle;
  return ComponentLabel::Other;
}

}  // namespace

std::string to_string(ComponentLabel label) {
  switch (label) {
    case ComponentLabel::Isolated: return "isolated";
    case ComponentLabel::K2: return "K2";
    case ComponentLabel::K3: return "K3";
    case ComponentLabel::K4: return "K4";
    case ComponentLabel::D6: return "D6";
    case ComponentLabel::Cycle: return "cycle";
    case ComponentLabel::Other: return "other";
  }
  return "other";
}

std::vector<VertexMask> components(const Graph& g) {
  std::vector<VertexMask> out;
  VertexMask unseen = g.vertices();
  while (unseen != 0) {
    VertexMask comp = bit(std::countr_zero(unseen));
    VertexMask frontier = comp;
    while (frontier != 0) {
      VertexMask next = 0;
      for (VertexMask f = frontier; f != 0; f &= f - 1) next |= g.neighbors(std::countr_zero(f));
      frontier = next & ~comp;
      comp |= next;
    }
    out.push_back(comp);
    unseen &= ~comp;
  }
  return out;
}

std::vector<ComponentInfo> classify_components(const Graph& g) {
  std::vector<ComponentInfo> out;
  for (VertexMask comp : components(g)) {
    out.push_back(ComponentInfo{comp, std::popcount(comp), label_of(g, comp)});
  }
  return out;
}

bool is_type_a(const Graph& g) {
  if (g.loops() != 0) return false;
  const auto comps = classify_components(g);
  return std::all_of(comps.begin(), comps.end(), [](const ComponentInfo& c) {
    return c.label == ComponentLabel::Isolated || c.label == ComponentLabel::K3;
  });
}

bool is_type_b(const Graph& g) {
  if (g.loops() != 0) return false;
  const auto comps = classify_components(g);
  return std::all_of(comps.begin(), comps.end(), [](const ComponentInfo& c) {
    return c.label == ComponentLabel::K2 || c.label == ComponentLabel::K3 || c.label == ComponentLabel::K4 ||
           c.label == ComponentLabel::D6;
  });
}

bool is_triangle_free(const Graph& g) {
  for (auto [u, v] : g.edges()) {
    if (g.neighbors(u) & g.neighbors(v)) return false;
  }
  return true;
}

}  // namespace sumfree
