#ifndef SUMFREE_GROUP_HPP
#define SUMFREE_GROUP_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sumfree {

/// Largest group order for which full element enumeration is allowed by default.
inline constexpr std::uint64_t kDefaultElementCap = std::uint64_t{1} << 20;

/// A group element as a residue vector, one coordinate per cyclic factor.
struct Element {
  std::vector<int> coords;

  friend auto operator<=>(const Element&, const Element&) = default;
};

/// A finite Abelian group Z_{m_1} + ... + Z_{m_k}, kept in the factor order
/// the caller gave. No normal form is computed, so coordinates stay positional.
///
/// Elements are also addressed by their lexicographic index: the first
/// coordinate is the most significant digit of a mixed-radix number.
class GroupSpec {
 public:
  const std::vector<int>& moduli() const noexcept { return moduli_; }
  std::size_t rank() const noexcept { return moduli_.size(); }
  std::uint64_t order() const noexcept { return order_; }

  Element zero() const;
  Element add(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  Element sub(const Element& a, const Element& b) const;
  Element scale(std::int64_t k, const Element& a) const;
  /// Least k >= 1 with k*a = 0.
  std::uint64_t order_of(const Element& a) const;
  bool contains(const Element& a) const noexcept;

  std::uint64_t index_of(const Element& a) const;
  Element element_at(std::uint64_t index) const;
  /// Index arithmetic without materializing Element values.
  std::uint64_t add_index(std::uint64_t a, std::uint64_t b) const noexcept;
  std::uint64_t neg_index(std::uint64_t a) const noexcept;
  std::uint64_t sub_index(std::uint64_t a, std::uint64_t b) const noexcept;
  std::uint64_t double_index(std::uint64_t a) const noexcept { return add_index(a, a); }

  /// lcm of the moduli.
  std::uint64_t exponent() const;
  /// Number of cyclic 2-power factors after splitting every modulus into
  /// prime-power parts (the r of G = Z_{2^a1} + ... + Z_{2^ar} + K, K odd).
  int two_rank() const;

  /// "Z2^3 x Z3" style literal; consecutive equal moduli are grouped.
  std::string to_string() const;
  /// Bare integer for single-factor groups, "(1,0,3)" otherwise.
  std::string format(const Element& a) const;

  friend bool operator==(const GroupSpec& a, const GroupSpec& b) { return a.moduli_ == b.moduli_; }

 private:
  friend GroupSpec make_group(std::vector<int> moduli, std::uint64_t cap);

  std::vector<int> moduli_;
  std::vector<std::uint64_t> strides_;
  std::uint64_t order_ = 1;
};

/// Throws std::invalid_argument for an empty list, a modulus < 2, or an
/// order above `cap`.
GroupSpec make_group(std::vector<int> moduli, std::uint64_t cap = kDefaultElementCap);

/// Parses "Z4", "Z2^3 x Z3", "Z3^2 x Z23 x Z29" (whitespace-insensitive).
GroupSpec parse_group(std::string_view literal, std::uint64_t cap = kDefaultElementCap);

/// Parses "(1,0,3)" or, for single-factor groups, a bare integer.
/// Coordinates are reduced modulo the factor orders.
Element parse_element(const GroupSpec& g, std::string_view literal);

/// All elements in lexicographic order.
std::vector<Element> elements(const GroupSpec& g);

// ---------------------------------------------------------------------------
// Green-Ruzsa type classification

enum class TypeVariant { I, II, III };

struct TypeClass {
  TypeVariant variant = TypeVariant::III;
  /// Smallest prime p = 2 (mod 3) dividing |G|; only for type I.
  std::uint64_t p = 0;
  /// Exponent of G; only for type III.
  std::uint64_t exponent = 0;

  std::string to_string() const;
  friend bool operator==(const TypeClass&, const TypeClass&) = default;
};

TypeClass classify(const GroupSpec& g);

/// Largest sum-free subset size from the type formulas:
/// type I(p): (1/3 + 1/3p) n, type II: n/3, type III: (1/3 - 1/3m) n.
/// Throws std::logic_error if the formula is not an integer.
std::uint64_t mu_formula(const GroupSpec& g);

// ---------------------------------------------------------------------------
// Homomorphisms to cyclic groups

struct Homomorphism {
  std::uint64_t target = 2;
  /// Image of the i-th standard generator, a residue mod `target`.
  std::vector<std::uint64_t> images;

  std::uint64_t apply(const Element& a) const;
  std::uint64_t apply_index(const GroupSpec& g, std::uint64_t index) const;
  bool is_trivial() const noexcept;
  friend bool operator==(const Homomorphism&, const Homomorphism&) = default;
};

/// Every homomorphism G -> Z_q, the trivial one first. Generator images range
/// over residues r with m_i * r = 0 (mod q), in lexicographic order.
std::vector<Homomorphism> homomorphisms_to_cyclic(const GroupSpec& g, std::uint64_t q);

/// All x with 2x = s, lexicographic.
std::vector<Element> doubling_solutions(const GroupSpec& g, const Element& s);

/// Outcome of exhaustively checking the 2-torsion counting facts on one group:
/// 2x = 0 has 2^r solutions, at most half of them map to 1 under any
/// phi: G -> Z_2, and whenever 2x = s has a solution with phi(x) = 1 there
/// are at least 2^(r-1) of them.
struct DoublingObservation {
  int two_rank = 0;
  std::uint64_t torsion_solutions = 0;
  std::size_t homomorphisms_checked = 0;
  std::size_t shifts_checked = 0;
  std::optional<std::string> failure;

  bool ok() const noexcept { return !failure.has_value(); }
};

DoublingObservation check_doubling_observation(const GroupSpec& g);

// ---------------------------------------------------------------------------
// Group catalogs

/// Every non-decreasing factor list (all factors >= 2) with product n.
std::vector<GroupSpec> groups_of_order(std::uint64_t n);

/// True iff G is isomorphic to Z_2^k + Z_3 for some k >= 1.
bool is_elementary_two_by_three(const GroupSpec& g);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) noexcept;
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) noexcept;
bool is_prime(std::uint64_t n) noexcept;

}  // namespace sumfree

#endif  // SUMFREE_GROUP_HPP
