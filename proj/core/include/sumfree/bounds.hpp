#ifndef SUMFREE_BOUNDS_HPP
#define SUMFREE_BOUNDS_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sumfree/graph.hpp"
#include "sumfree/group.hpp"

namespace sumfree {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact non-float bound value, always in reduced form.
class BoundValue {
 public:
  BoundValue() = default;
  BoundValue(std::int64_t v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  explicit BoundValue(Rational v) : value_(std::move(v)) {}

  /// Throws std::invalid_argument for a zero denominator.
  static BoundValue fraction(const Integer& num, const Integer& den);

  Integer numerator() const;
  Integer denominator() const;
  bool is_integral() const;
  /// Largest integer <= value.
  Integer floor() const;
  const Rational& value() const noexcept { return value_; }
  /// Display only; never used in a verdict.
  double approx() const;
  /// "16/7" or "8".
  std::string to_string() const;

  friend BoundValue operator*(const BoundValue& a, const BoundValue& b) { return BoundValue(a.value_ * b.value_); }
  friend bool operator==(const BoundValue& a, const BoundValue& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const BoundValue& a, const BoundValue& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ > b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  Rational value_{0};
};

/// base^exp for any integer exponent; throws on 0^negative.
BoundValue power(const Rational& base, std::int64_t exp);

/// 3^m when 3m <= n, else 2^(3m - n) 3^(n - 2m). Throws unless 0 <= m <= n/2.
BoundValue bound_matching(int m, int n);
/// (59/64)^k 2^(3m - n) 3^(n - 2m).
BoundValue bound_degree4(int k, int m, int n);
/// (31/32)^k 2^(3(m + l k) - n) 3^(n - 2(m + l k)).
BoundValue bound_tl(int k, int l, int m, int n);
/// (4/7)^k 2^(6k + 3m - n) 3^(n - 2m - 4k).
BoundValue bound_c4(int k, int m, int n);

// ---------------------------------------------------------------------------
// Per-graph report

enum class ExtremalClass { TypeA, TypeB, Neither };
enum class MatchingBranch { Triangles, Mixed };

std::string to_string(ExtremalClass c);
std::string to_string(MatchingBranch b);

struct NamedBound {
  std::string name;
  int k = 0;
  int l = 0;
  int m = 0;
  BoundValue value;
};

struct Report {
  int n = 0;
  std::size_t edges = 0;
  /// Vertices with loops, removed before any count.
  int looped = 0;
  std::uint64_t mis = 0;
  int nu = 0;
  MatchingBranch branch = MatchingBranch::Triangles;
  BoundValue matching_bound;
  /// Bounds derived from a supplied packing.
  std::vector<NamedBound> stability;
  /// Smallest applicable bound.
  BoundValue bound;
  bool satisfied = false;
  bool tight = false;
  ExtremalClass extremal = ExtremalClass::Neither;
  /// Equality with the matching bound happens exactly on type-A graphs
  /// (triangle branch) or type-B graphs (mixed branch).
  bool equality_matches_class = false;

  bool ok() const noexcept { return satisfied && equality_matches_class; }
};

/// Throws std::invalid_argument when the packing is invalid or touches a
/// looped vertex.
Report check_graph(const Graph& g, const std::optional<Packing>& packing = std::nullopt);

// ---------------------------------------------------------------------------
// Exhaustive sweep over labeled graphs

/// Edge slots follow the graph6 column order (0,1), (0,2), (1,2), (0,3), ...
Graph graph_from_slots(int n, std::uint64_t mask);

inline constexpr int kSweepMaxOrder = 8;

struct SweepOptions {
  int n_max = 7;
  /// 0 = hardware concurrency.
  unsigned jobs = 0;
  std::size_t max_recorded = 64;
};

struct SweepViolation {
  int n = 0;
  std::uint64_t mask = 0;
  std::string check;
  std::string detail;
  std::string graph6;
};

struct SweepLevel {
  int n = 0;
  std::uint64_t graphs = 0;
  std::uint64_t matching_tight = 0;
  std::uint64_t type_a_tight = 0;
  std::uint64_t type_b_tight = 0;
  std::uint64_t moon_moser_tight = 0;
  std::uint64_t triangle_free = 0;
  std::uint64_t hujter_tuza_tight = 0;
  std::uint64_t identities_checked = 0;
  /// Largest mis seen for each matching number 0..n/2.
  std::vector<std::uint64_t> max_mis_by_nu;
  std::uint64_t violations = 0;
};

struct SweepSummary {
  int n_max = 0;
  std::uint64_t graphs = 0;
  std::uint64_t violations = 0;
  std::vector<SweepLevel> levels;
  /// First violations in (n, mask) order, capped by max_recorded.
  std::vector<SweepViolation> recorded;

  bool ok() const noexcept { return violations == 0; }
};

/// Checks every labeled simple graph on 1..n_max vertices: the matching
/// bound and its equality cases, Moon-Moser, Hujter-Tuza on triangle-free
/// graphs, and the vertex/edge deletion identities for mis. The result does
/// not depend on the worker count. Throws unless 1 <= n_max <= 8.
SweepSummary exhaustive_sweep(const SweepOptions& options);

// ---------------------------------------------------------------------------
// Even-order link-graph pipeline

inline constexpr std::uint64_t kPipelineCap = 20;

struct PipelineReport {
  std::string group;
  std::uint64_t order = 0;
  int two_rank = 0;
  bool exceptional = false;

  /// Maximal sum-free sets of size n/2 and those equal to phi^{-1}(1).
  std::uint64_t half_sets = 0;
  std::uint64_t half_sets_structured = 0;
  /// Same for maximal distinct sum-free sets.
  std::uint64_t distinct_half_sets = 0;
  std::uint64_t distinct_half_sets_structured = 0;
  /// Maximal distinct sum-free sets larger than n/2.
  std::uint64_t distinct_oversize_sets = 0;

  /// (A maximal distinct sum-free, S distinct sum-free) pairs examined.
  std::uint64_t distinct_pairs = 0;
  /// Structured half-size A together with an S that has an element of order 2.
  std::uint64_t order_two_cases = 0;
  std::uint64_t order_two_matching_failures = 0;
  /// Pairs with a structured half-size A and mis(distinct link) <= 2^{|A|/2}.
  std::uint64_t half_cases = 0;
  std::uint64_t half_cases_within = 0;
  /// Pairs with mis(distinct link)^4 > 2^n.
  std::uint64_t pairs_above_quarter = 0;
  std::uint64_t max_mis = 0;

  /// (A maximal sum-free, S sum-free) pairs, and those where the full link
  /// graph has more maximal independent sets than the distinct one.
  std::uint64_t full_pairs = 0;
  std::uint64_t full_exceeds_distinct = 0;

  std::optional<std::string> first_failure;

  bool ok() const noexcept;
};

/// Throws std::invalid_argument for odd order or order above `cap`.
PipelineReport check_even_order_pipeline(const GroupSpec& g, std::uint64_t cap = kPipelineCap);

// ---------------------------------------------------------------------------
// Exact comparisons of products of rational powers

struct PowerTerm {
  Rational base;
  Rational exponent;
};

using PowerProduct = std::vector<PowerTerm>;

inline constexpr std::uint64_t kPowerBitCap = std::uint64_t{1} << 22;

/// lhs < rhs over exact rationals. Bases must be positive. Throws
/// std::invalid_argument when clearing exponent denominators would exceed
/// kPowerBitCap bits.
bool power_less(const PowerProduct& lhs, const PowerProduct& rhs);

struct ConstantPoint {
  Rational big_c{100};
  Rational small_c{Rational(1, 10000)};
  Rational n{1000};
  int l = 16;
};

struct ConstantCheck {
  std::string name;
  std::string relation;
  bool holds = false;
};

/// Evaluates the finite exponent inequalities used in the even-order
/// arguments at one (C, c, n, l) point. Nothing is asserted.
std::vector<ConstantCheck> constant_checks(const ConstantPoint& point);

/// Parses "16/7", "3", "0.96" into an exact rational.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& r);

}  // namespace sumfree

#endif  // SUMFREE_BOUNDS_HPP
