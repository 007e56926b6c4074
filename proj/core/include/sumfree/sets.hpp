#ifndef SUMFREE_SETS_HPP
#define SUMFREE_SETS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sumfree/element_set.hpp"
#include "sumfree/graph.hpp"
#include "sumfree/group.hpp"

namespace sumfree {

enum class SumFreeMode { SumFree, Distinct };

std::string to_string(SumFreeMode mode);

inline constexpr std::uint64_t kMuBruteCap = 24;
inline constexpr std::uint64_t kMsfCap = 20;
/// Largest order handled by the word-sized table searches.
inline constexpr std::uint64_t kTableCap = 64;

// ---------------------------------------------------------------------------
// Schur triples

/// Some ordering of {x, y, z} satisfies a + b = c; x = y is allowed.
bool is_schur(const GroupSpec& g, const Element& x, const Element& y, const Element& z);
/// Schur triple with x, y, z pairwise distinct.
bool is_distinct_schur(const GroupSpec& g, const Element& x, const Element& y, const Element& z);

/// Indices (a, b, a + b) of a forbidden triple inside S, if any. In distinct
/// mode a, b, a + b are pairwise different.
std::optional<std::array<std::uint64_t, 3>> find_schur_triple(const GroupSpec& g, const ElementSet& s,
                                                              SumFreeMode mode);

bool is_sum_free(const GroupSpec& g, const ElementSet& s);
bool is_distinct_sum_free(const GroupSpec& g, const ElementSet& s);
bool is_free(const GroupSpec& g, const ElementSet& s, SumFreeMode mode);

/// Builds a set from element literals such as "(1,0,3),(1,1,5)" or "1,3".
ElementSet parse_subset(const GroupSpec& g, std::string_view literal);
/// "{1,3}" or "{(0,1),(1,1)}".
std::string format_subset(const GroupSpec& g, const ElementSet& s);

// ---------------------------------------------------------------------------
// Exhaustive searches (group order <= 64)

/// Largest sum-free / distinct sum-free subset size by branch and bound.
/// Throws std::invalid_argument above `cap`.
std::uint64_t mu_brute(const GroupSpec& g, std::uint64_t cap = kMuBruteCap);
std::uint64_t mu_star_brute(const GroupSpec& g, std::uint64_t cap = kMuBruteCap);

/// Maximal (distinct) sum-free subsets of G, sorted by bitset value.
std::vector<ElementSet> enumerate_msf(const GroupSpec& g, SumFreeMode mode, std::uint64_t cap = kMsfCap);

/// Maximal (distinct) sum-free subsets of A u S containing S, maximal with
/// respect to single-element extension inside A u S. Throws if A and S meet
/// or S itself is not (distinct) sum-free.
std::vector<ElementSet> enumerate_msf_within(const GroupSpec& g, const ElementSet& a, const ElementSet& s,
                                             SumFreeMode mode);

/// Every (distinct) sum-free subset of `within`, sorted by bitset value.
std::vector<ElementSet> enumerate_free_subsets(const GroupSpec& g, const ElementSet& within, SumFreeMode mode);

// ---------------------------------------------------------------------------
// Link graphs

enum class LinkKind { Full, Distinct };

std::string to_string(LinkKind kind);

struct LinkGraphResult {
  Graph graph;
  /// Vertex i of `graph` is the group element with index vertex_map[i].
  std::vector<std::uint64_t> vertex_map;
  LinkKind kind = LinkKind::Full;
};

/// Link graph of S on A. Vertices are A in lexicographic order.
///   edge x~y : x + y, x - y or y - x lies in S
///   loop at x: x = s + t, x = t - s for distinct s, t in S
///   loop at x: 2x in S or x = 2s for some s in S (full kind only)
/// Throws if A meets S or |A| > 64.
LinkGraphResult link_graph(const GroupSpec& g, const ElementSet& a, const ElementSet& s, LinkKind kind);

/// Exhaustive comparison msf(A u S; S) <= mis(L_S[A]) over every maximal
/// sum-free A and every sum-free S disjoint from it, for both kinds.
struct LinkReductionSummary {
  std::uint64_t maximal_sets = 0;
  std::uint64_t pairs = 0;
  std::uint64_t violations_full = 0;
  std::uint64_t violations_distinct = 0;
  /// Pairs where the count equals the MIS count (reported, never asserted).
  std::uint64_t equal_full = 0;
  std::uint64_t equal_distinct = 0;
  std::optional<std::string> first_violation;

  bool ok() const noexcept { return violations_full == 0 && violations_distinct == 0; }
};

LinkReductionSummary verify_link_reduction(const GroupSpec& g, std::uint64_t cap = 16);

// ---------------------------------------------------------------------------
// Explicit constructions A_f = {lifted f-graph} u {s}

enum class AfPattern {
  /// Z3^2 x Z23 x Zp: A_f = {(1, f(x), x) : x in Z23 x Zp} u {(0,1,0,0)}.
  Thm31,
  /// Z2^k x Z3: A_f = {(1, x, f(x)) : x in Z2^(k-1)} u {(0,...,0,1)}.
  Prop42,
  /// Z3^2 x Zp: A_f = {(1, f(x), x) : x in Zp} u {(0,1,0)}.
  Prop43,
};

std::string to_string(AfPattern pattern);
AfPattern parse_af_pattern(std::string_view name);

inline constexpr std::uint64_t kExhaustiveIndexCap = 12;

struct AfFamilyOptions {
  /// Used only when the index set is larger than kExhaustiveIndexCap.
  std::size_t sample_size = 200;
  std::uint64_t seed = 0;
};

struct AfFamily {
  AfPattern pattern = AfPattern::Prop42;
  std::uint64_t index_size = 0;
  bool exhaustive = true;
  std::uint64_t special = 0;
  /// Exhaustive families list f in base-3 order (first index element most
  /// significant); samples keep the draw order.
  std::vector<ElementSet> sets;
};

/// Throws std::invalid_argument when the moduli do not match the pattern.
AfFamily construct_af_family(const GroupSpec& g, AfPattern pattern, const AfFamilyOptions& options = {});

struct FamilyVerdict {
  enum class Kind { Ok, MemberNotFree, UnionFree };

  Kind kind = Kind::Ok;
  std::size_t first = 0;
  std::size_t second = 0;
  std::optional<std::array<std::uint64_t, 3>> witness;

  bool ok() const noexcept { return kind == Kind::Ok; }
  std::string describe(const GroupSpec& g) const;
};

/// Ok iff each member is (distinct) sum-free and no pairwise union is.
/// The reported counterexample is the first in (member, pair) row-major order
/// regardless of `jobs` (0 = hardware concurrency).
FamilyVerdict verify_family(const GroupSpec& g, std::span<const ElementSet> family, SumFreeMode mode,
                            unsigned jobs = 0);

/// Searches phi: G -> Z_p with A = phi^{-1}({k+1, ..., 2k+1}) where p = 3k + 2.
/// Throws std::invalid_argument unless p = 2 (mod 3).
std::optional<Homomorphism> stability_form_check(const GroupSpec& g, std::uint64_t p, const ElementSet& a);

}  // namespace sumfree

#endif  // SUMFREE_SETS_HPP
