#ifndef SUMFREE_ELEMENT_SET_HPP
#define SUMFREE_ELEMENT_SET_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace sumfree {

/// Subset of a group, a bitset over lexicographic element indices.
/// Ordering is by bitset value (highest index most significant).
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::uint64_t universe);

  static ElementSet from_indices(std::uint64_t universe, std::span<const std::uint64_t> indices);
  /// Low 64 indices from a mask; `universe` must be <= 64.
  static ElementSet from_mask(std::uint64_t universe, std::uint64_t mask);

  std::uint64_t universe() const noexcept { return universe_; }
  bool contains(std::uint64_t i) const noexcept {
    return i < universe_ && ((words_[i >> 6] >> (i & 63)) & 1U);
  }
  void insert(std::uint64_t i);
  void erase(std::uint64_t i);
  std::size_t size() const noexcept;
  bool empty() const noexcept { return size() == 0; }

  std::vector<std::uint64_t> members() const;
  /// Requires universe <= 64.
  std::uint64_t to_mask() const;

  bool intersects(const ElementSet& other) const;
  bool is_subset_of(const ElementSet& other) const;
  ElementSet operator|(const ElementSet& other) const;
  ElementSet operator&(const ElementSet& other) const;

  friend bool operator==(const ElementSet& a, const ElementSet& b) noexcept {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }
  friend std::strong_ordering operator<=>(const ElementSet& a, const ElementSet& b) noexcept;

 private:
  void require_same_universe(const ElementSet& other) const;

  std::uint64_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace sumfree

#endif  // SUMFREE_ELEMENT_SET_HPP
