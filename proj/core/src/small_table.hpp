#ifndef SUMFREE_SRC_SMALL_TABLE_HPP
#define SUMFREE_SRC_SMALL_TABLE_HPP

#include <bit>
#include <cstdint>
#include <vector>

#include "sumfree/group.hpp"
#include "sumfree/sets.hpp"

namespace sumfree::detail {

/// Addition table for groups of order <= 64 so subsets fit in one word.
class SmallTable {
 public:
  explicit SmallTable(const GroupSpec& g);

  int order() const noexcept { return n_; }
  int add(int a, int b) const noexcept { return add_[static_cast<std::size_t>(a * n_ + b)]; }
  int sub(int a, int b) const noexcept { return sub_[static_cast<std::size_t>(a * n_ + b)]; }
  std::uint64_t all() const noexcept { return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1; }

  /// For a free set s and x outside s: whether s + {x} is still free.
  bool extends(std::uint64_t s, int x, SumFreeMode mode) const noexcept {
    if (mode == SumFreeMode::SumFree && x == 0) return false;
    if (mode == SumFreeMode::SumFree && ((s >> add(x, x)) & 1U)) return false;
    for (std::uint64_t rest = s; rest != 0; rest &= rest - 1) {
      const int a = std::countr_zero(rest);
      // x + a = b with b in s
      if (x != 0 && ((s >> add(x, a)) & 1U)) return false;
      // a + b = x with b in s
      const int b = sub(x, a);
      if (((s >> b) & 1U) && (mode == SumFreeMode::SumFree || b != a)) return false;
    }
    return true;
  }

  bool is_free(std::uint64_t s, SumFreeMode mode) const noexcept {
    std::uint64_t built = 0;
    for (std::uint64_t rest = s; rest != 0; rest &= rest - 1) {
      const int x = std::countr_zero(rest);
      if (!extends(built, x, mode)) return false;
      built |= std::uint64_t{1} << x;
    }
    return true;
  }

 private:
  int n_ = 0;
  std::vector<std::uint8_t> add_;
  std::vector<std::uint8_t> sub_;
};

}  // namespace sumfree::detail

#endif  // SUMFREE_SRC_SMALL_TABLE_HPP
