#include <algorithm>
#include <atomic>
#include <functional>
#include <limits>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>

#include "sumfree/sets.hpp"

namespace sumfree {

namespace {

struct Shape {
  /// Coordinates of the index set inside an element.
  std::vector<std::size_t> index_coords;
  std::size_t value_coord = 0;
  std::vector<int> special;
};

Shape shape_of(const GroupSpec& g, AfPattern pattern) {
  const auto& m = g.moduli();
  auto mismatch = [&](const char* wanted) {
    return std::invalid_argument("group " + g.to_string() + " does not have the shape " + wanted);
  };
  Shape shape;
  switch (pattern) {
    case AfPattern::Thm31:
      if (m.size() != 4 || m[0] != 3 || m[1] != 3 || m[2] != 23 || !is_prime(static_cast<std::uint64_t>(m[3]))) {
        throw mismatch("Z3^2 x Z23 x Zp");
      }
      shape.index_coords = {2, 3};
      shape.value_coord = 1;
      shape.special = {0, 1, 0, 0};
      break;
    case AfPattern::Prop42: {
      const bool ok = m.size() >= 2 && m.back() == 3 &&
                      std::all_of(m.begin(), m.end() - 1, [](int q) { return q == 2; });
      if (!ok) throw mismatch("Z2^k x Z3");
      for (std::size_t i = 1; i + 1 < m.size(); ++i) shape.index_coords.push_back(i);
      shape.value_coord = m.size() - 1;
      shape.special.assign(m.size(), 0);
      shape.special.back() = 1;
      break;
    }
    case AfPattern::Prop43:
      if (m.size() != 3 || m[0] != 3 || m[1] != 3 || !is_prime(static_cast<std::uint64_t>(m[2]))) {
        throw mismatch("Z3^2 x Zp");
      }
      shape.index_coords = {2};
      shape.value_coord = 1;
      shape.special = {0, 1, 0};
      break;
  }
  return shape;
}

/// Index-set points in lexicographic order, as element coordinates with
/// the leading coordinate set to 1.
std::vector<Element> index_points(const GroupSpec& g, const Shape& shape) {
  std::vector<Element> out;
  Element e{std::vector<int>(g.rank(), 0)};
  e.coords[0] = 1;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == shape.index_coords.size()) {
      out.push_back(e);
      return;
    }
    const auto c = shape.index_coords[k];
    for (int v = 0; v < g.moduli()[c]; ++v) {
      e.coords[c] = v;
      rec(k + 1);
    }
    e.coords[c] = 0;
  };
  rec(0);
  return out;
}

ElementSet build(const GroupSpec& g, const Shape& shape, std::vector<Element>& points,
                 const std::vector<int>& values, std::uint64_t special) {
  ElementSet s(g.order());
  for (std::size_t i = 0; i < points.size(); ++i) {
    points[i].coords[shape.value_coord] = values[i];
    s.insert(g.index_of(points[i]));
  }
  s.insert(special);
  return s;
}

/// Minimum-row result of `scan(row)` over rows [0, rows), rows split across
/// `jobs` workers by residue. Rows beyond the best hit so far are skipped.
template <class Hit, class Scan>
std::optional<Hit> first_hit(std::size_t rows, unsigned jobs, Scan scan) {
  if (jobs == 0) jobs = std::max(1U, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(rows, 1)));
  std::atomic<std::size_t> best_row{std::numeric_limits<std::size_t>::max()};
  std::vector<std::optional<Hit>> found(jobs);
  auto work = [&](unsigned w) {
    for (std::size_t r = w; r < rows; r += jobs) {
      if (r > best_row.load(std::memory_order_relaxed)) break;
      if (auto hit = scan(r)) {
        found[w] = hit;
        auto cur = best_row.load();
        while (r < cur && !best_row.compare_exchange_weak(cur, r)) {
        }
        break;
      }
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(work, w);
  }
  std::optional<Hit> best;
  for (auto& f : found) {
    if (f && (!best || f->first < best->first || (f->first == best->first && f->second < best->second))) best = f;
  }
  return best;
}

}  // namespace

std::string to_string(AfPattern pattern) {
  switch (pattern) {
    case AfPattern::Thm31: return "thm31";
    case AfPattern::Prop42: return "prop42";
    case AfPattern::Prop43: return "prop43";
  }
  return "?";
}

AfPattern parse_af_pattern(std::string_view name) {
  if (name == "thm31") return AfPattern::Thm31;
  if (name == "prop42") return AfPattern::Prop42;
  if (name == "prop43") return AfPattern::Prop43;
  throw std::invalid_argument("unknown construction pattern '" + std::string(name) + "'");
}

AfFamily construct_af_family(const GroupSpec& g, AfPattern pattern, const AfFamilyOptions& options) {
  const auto shape = shape_of(g, pattern);
  auto points = index_points(g, shape);
  const auto m = points.size();

  AfFamily family;
  family.pattern = pattern;
  family.index_size = m;
  family.special = g.index_of(Element{shape.special});
  family.exhaustive = m <= kExhaustiveIndexCap;

  std::vector<int> values(m, 0);
  if (family.exhaustive) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < m; ++i) total *= 3;
    family.sets.reserve(total);
    for (std::uint64_t f = 0; f < total; ++f) {
      auto rest = f;
      for (std::size_t i = m; i-- > 0;) {
        values[i] = static_cast<int>(rest % 3);
        rest /= 3;
      }
      family.sets.push_back(build(g, shape, points, values, family.special));
    }
    return family;
  }

  std::mt19937_64 rng(options.seed);
  std::set<std::vector<int>> seen;
  family.sets.reserve(options.sample_size);
  while (family.sets.size() < options.sample_size) {
    for (auto& v : values) v = static_cast<int>(rng() % 3);
    if (!seen.insert(values).second) continue;
    family.sets.push_back(build(g, shape, points, values, family.special));
  }
  return family;
}

std::string FamilyVerdict::describe(const GroupSpec& g) const {
  auto triple = [&]() {
    if (!witness) return std::string();
    const auto& w = *witness;
    return ": " + g.format(g.element_at(w[0])) + " + " + g.format(g.element_at(w[1])) + " = " +
           g.format(g.element_at(w[2]));
  };
  switch (kind) {
    case Kind::Ok: return "ok";
    case Kind::MemberNotFree: return "member " + std::to_string(first) + " is not free" + triple();
    case Kind::UnionFree:
      return "union of members " + std::to_string(first) + " and " + std::to_string(second) + " is free";
  }
  return "?";
}

FamilyVerdict verify_family(const GroupSpec& g, std::span<const ElementSet> family, SumFreeMode mode,
                            unsigned jobs) {
  using Hit = std::pair<std::size_t, std::size_t>;
  struct MemberHit {
    std::size_t first;
    std::size_t second;
    std::array<std::uint64_t, 3> triple;
  };

  auto bad_member = first_hit<MemberHit>(family.size(), jobs, [&](std::size_t i) -> std::optional<MemberHit> {
    if (auto t = find_schur_triple(g, family[i], mode)) return MemberHit{i, 0, *t};
    return std::nullopt;
  });
  if (bad_member) {
    FamilyVerdict v;
    v.kind = FamilyVerdict::Kind::MemberNotFree;
    v.first = bad_member->first;
    v.witness = bad_member->triple;
    return v;
  }

  auto free_union = first_hit<Hit>(family.size(), jobs, [&](std::size_t i) -> std::optional<Hit> {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      if (is_free(g, family[i] | family[j], mode)) return Hit{i, j};
    }
    return std::nullopt;
  });
  FamilyVerdict v;
  if (free_union) {
    v.kind = FamilyVerdict::Kind::UnionFree;
    v.first = free_union->first;
    v.second = free_union->second;
  }
  return v;
}

std::optional<Homomorphism> stability_form_check(const GroupSpec& g, std::uint64_t p, const ElementSet& a) {
  if (p < 2 || p % 3 != 2) throw std::invalid_argument("p must be 2 mod 3, got " + std::to_string(p));
  if (a.universe() != g.order()) throw std::invalid_argument("subset does not belong to the group");
  const auto k = (p - 2) / 3;
  for (const auto& phi : homomorphisms_to_cyclic(g, p)) {
    bool match = true;
    for (std::uint64_t x = 0; x < g.order() && match; ++x) {
      const auto v = phi.apply_index(g, x);
      match = (v >= k + 1 && v <= 2 * k + 1) == a.contains(x);
    }
    if (match) return phi;
  }
  return std::nullopt;
}

}  // namespace sumfree
