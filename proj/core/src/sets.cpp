#include "sumfree/sets.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "small_table.hpp"

namespace sumfree {

namespace detail {

SmallTable::SmallTable(const GroupSpec& g) {
  if (g.order() > kTableCap) {
    throw std::invalid_argument("group order " + std::to_string(g.order()) + " exceeds the table limit of 64");
  }
  n_ = static_cast<int>(g.order());
  add_.resize(static_cast<std::size_t>(n_ * n_));
  sub_.resize(static_cast<std::size_t>(n_ * n_));
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b) {
      add_[static_cast<std::size_t>(a * n_ + b)] = static_cast<std::uint8_t>(g.add_index(a, b));
      sub_[static_cast<std::size_t>(a * n_ + b)] = static_cast<std::uint8_t>(g.sub_index(a, b));
    }
  }
}

}  // namespace detail

namespace {

using detail::SmallTable;

void require_cap(const GroupSpec& g, std::uint64_t cap, const char* what) {
  if (g.order() > cap) {
    throw std::invalid_argument(std::string(what) + ": group order " + std::to_string(g.order()) +
                                " exceeds the cap of " + std::to_string(cap));
  }
}

void require_universe(const GroupSpec& g, const ElementSet& s) {
  if (s.universe() != g.order()) throw std::invalid_argument("subset does not belong to the group");
}

std::uint64_t mu_search(const GroupSpec& g, SumFreeMode mode) {
  const SmallTable t(g);
  const int n = t.order();
  int best = 0;
  std::function<void(int, std::uint64_t, int)> rec = [&](int i, std::uint64_t s, int size) {
    if (size > best) best = size;
    int room = 0;
    for (int j = i; j < n; ++j) {
      if (t.extends(s, j, mode)) ++room;
    }
    if (size + room <= best) return;
    for (int j = i; j < n; ++j) {
      if (!t.extends(s, j, mode)) continue;
      rec(j + 1, s | (std::uint64_t{1} << j), size + 1);
      if (size + (--room) <= best) return;
    }
  };
  rec(0, 0, 0);
  return static_cast<std::uint64_t>(best);
}

/// Maximal free subsets of `ambient` containing `base` (masks over G).
std::vector<std::uint64_t> maximal_within(const SmallTable& t, std::uint64_t ambient, std::uint64_t base,
                                          SumFreeMode mode) {
  std::vector<int> order;
  for (std::uint64_t rest = ambient & ~base; rest != 0; rest &= rest - 1) order.push_back(std::countr_zero(rest));
  std::vector<std::uint64_t> out;
  std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t i, std::uint64_t s) {
    if (i == order.size()) {
      for (int x : order) {
        if (!((s >> x) & 1U) && t.extends(s, x, mode)) return;
      }
      out.push_back(s);
      return;
    }
    const int x = order[i];
    if (t.extends(s, x, mode)) rec(i + 1, s | (std::uint64_t{1} << x));
    rec(i + 1, s);
  };
  rec(0, base);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ElementSet> to_sets(const GroupSpec& g, const std::vector<std::uint64_t>& masks) {
  std::vector<ElementSet> out;
  out.reserve(masks.size());
  for (auto m : masks) out.push_back(ElementSet::from_mask(g.order(), m));
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

std::string to_string(SumFreeMode mode) { return mode == SumFreeMode::SumFree ? "sum_free" : "distinct"; }

bool is_schur(const GroupSpec& g, const Element& x, const Element& y, const Element& z) {
  return g.add(x, y) == z || g.add(x, z) == y || g.add(y, z) == x;
}

bool is_distinct_schur(const GroupSpec& g, const Element& x, const Element& y, const Element& z) {
  return x != y && y != z && x != z && is_schur(g, x, y, z);
}

std::optional<std::array<std::uint64_t, 3>> find_schur_triple(const GroupSpec& g, const ElementSet& s,
                                                              SumFreeMode mode) {
  require_universe(g, s);
  const auto m = s.members();
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i; j < m.size(); ++j) {
      const auto c = g.add_index(m[i], m[j]);
      if (!s.contains(c)) continue;
      if (mode == SumFreeMode::Distinct && (i == j || c == m[i] || c == m[j])) continue;
      return std::array<std::uint64_t, 3>{m[i], m[j], c};
    }
  }
  return std::nullopt;
}

bool is_sum_free(const GroupSpec& g, const ElementSet& s) { return is_free(g, s, SumFreeMode::SumFree); }

bool is_distinct_sum_free(const GroupSpec& g, const ElementSet& s) { return is_free(g, s, SumFreeMode::Distinct); }

bool is_free(const GroupSpec& g, const ElementSet& s, SumFreeMode mode) {
  return !find_schur_triple(g, s, mode).has_value();
}

ElementSet parse_subset(const GroupSpec& g, std::string_view literal) {
  literal = trim(literal);
  if (literal.starts_with('{') && literal.ends_with('}')) literal = trim(literal.substr(1, literal.size() - 2));
  ElementSet out(g.order());
  if (literal.empty()) return out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= literal.size(); ++i) {
    const char c = i < literal.size() ? literal[i] : ',';
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth < 0) throw std::invalid_argument("unbalanced parentheses in subset literal");
    if (c == ',' && depth == 0) {
      const auto token = trim(literal.substr(start, i - start));
      if (token.empty()) throw std::invalid_argument("empty element in subset literal");
      out.insert(g.index_of(parse_element(g, token)));
      start = i + 1;
    }
  }
  if (depth != 0) throw std::invalid_argument("unbalanced parentheses in subset literal");
  return out;
}

std::string format_subset(const GroupSpec& g, const ElementSet& s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (auto i : s.members()) {
    if (!first) os << ',';
    first = false;
    os << g.format(g.element_at(i));
  }
  os << '}';
  return os.str();
}

std::uint64_t mu_brute(const GroupSpec& g, std::uint64_t cap) {
  require_cap(g, std::min(cap, kTableCap), "mu_brute");
  return mu_search(g, SumFreeMode::SumFree);
}

std::uint64_t mu_star_brute(const GroupSpec& g, std::uint64_t cap) {
  require_cap(g, std::min(cap, kTableCap), "mu_star_brute");
  return mu_search(g, SumFreeMode::Distinct);
}

std::vector<ElementSet> enumerate_msf(const GroupSpec& g, SumFreeMode mode, std::uint64_t cap) {
  require_cap(g, std::min(cap, kTableCap), "enumerate_msf");
  const SmallTable t(g);
  return to_sets(g, maximal_within(t, t.all(), 0, mode));
}

std::vector<ElementSet> enumerate_msf_within(const GroupSpec& g, const ElementSet& a, const ElementSet& s,
                                             SumFreeMode mode) {
  require_universe(g, a);
  require_universe(g, s);
  if (a.intersects(s)) throw std::invalid_argument("A and S overlap");
  const SmallTable t(g);
  const auto base = s.to_mask();
  if (!t.is_free(base, mode)) throw std::invalid_argument("S is not " + to_string(mode));
  return to_sets(g, maximal_within(t, a.to_mask() | base, base, mode));
}

std::vector<ElementSet> enumerate_free_subsets(const GroupSpec& g, const ElementSet& within, SumFreeMode mode) {
  require_universe(g, within);
  const SmallTable t(g);
  std::vector<int> order;
  for (auto i : within.members()) order.push_back(static_cast<int>(i));
  std::vector<std::uint64_t> out;
  std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t i, std::uint64_t s) {
    if (i == order.size()) {
      out.push_back(s);
      return;
    }
    const int x = order[i];
    if (t.extends(s, x, mode)) rec(i + 1, s | (std::uint64_t{1} << x));
    rec(i + 1, s);
  };
  rec(0, 0);
  std::sort(out.begin(), out.end());
  return to_sets(g, out);
}

}  // namespace sumfree
