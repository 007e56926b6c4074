#include "sumfree/element_set.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace sumfree {

ElementSet::ElementSet(std::uint64_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

ElementSet ElementSet::from_indices(std::uint64_t universe, std::span<const std::uint64_t> indices) {
  ElementSet s(universe);
  for (auto i : indices) s.insert(i);
  return s;
}

ElementSet ElementSet::from_mask(std::uint64_t universe, std::uint64_t mask) {
  if (universe > 64) throw std::invalid_argument("mask form needs a universe of at most 64 elements");
  ElementSet s(universe);
  if (universe < 64) mask &= (std::uint64_t{1} << universe) - 1;
  if (!s.words_.empty()) s.words_[0] = mask;
  return s;
}

void ElementSet::insert(std::uint64_t i) {
  if (i >= universe_) throw std::out_of_range("element index " + std::to_string(i) + " outside the group");
  words_[i >> 6] |= std::uint64_t{1} << (i & 63);
}

void ElementSet::erase(std::uint64_t i) {
  if (i >= universe_) throw std::out_of_range("element index " + std::to_string(i) + " outside the group");
  words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
}

std::size_t ElementSet::size() const noexcept {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::vector<std::uint64_t> ElementSet::members() const {
  std::vector<std::uint64_t> out;
  out.reserve(size());
  for (std::size_t w = 0; w < words_.size(); ++w) {
    for (auto bits = words_[w]; bits != 0; bits &= bits - 1) {
      out.push_back(w * 64 + static_cast<std::uint64_t>(std::countr_zero(bits)));
    }
  }
  return out;
}

std::uint64_t ElementSet::to_mask() const {
  if (universe_ > 64) throw std::invalid_argument("mask form needs a universe of at most 64 elements");
  return words_.empty() ? 0 : words_[0];
}

void ElementSet::require_same_universe(const ElementSet& other) const {
  if (universe_ != other.universe_) throw std::invalid_argument("element sets come from different groups");
}

bool ElementSet::intersects(const ElementSet& other) const {
  require_same_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] & other.words_[w]) return true;
  }
  return false;
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  require_same_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] & ~other.words_[w]) return false;
  }
  return true;
}

ElementSet ElementSet::operator|(const ElementSet& other) const {
  require_same_universe(other);
  ElementSet r = *this;
  for (std::size_t w = 0; w < words_.size(); ++w) r.words_[w] |= other.words_[w];
  return r;
}

ElementSet ElementSet::operator&(const ElementSet& other) const {
  require_same_universe(other);
  ElementSet r = *this;
  for (std::size_t w = 0; w < words_.size(); ++w) r.words_[w] &= other.words_[w];
  return r;
}

std::strong_ordering operator<=>(const ElementSet& a, const ElementSet& b) noexcept {
  if (auto c = a.universe_ <=> b.universe_; c != 0) return c;
  for (std::size_t w = a.words_.size(); w-- > 0;) {
    if (auto c = a.words_[w] <=> b.words_[w]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

}  // namespace sumfree
