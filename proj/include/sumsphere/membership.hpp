#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "sumsphere/group.hpp"

namespace sumsphere {

/// Dense membership table over the elements of a group, indexed by ElementIndex.
/// Bits past `size()` are kept zero.
class MembershipTable {
 public:
  MembershipTable() = default;
  explicit MembershipTable(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const noexcept { return size_; }

  bool contains(ElementIndex i) const noexcept {
    return (words_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1U;
  }
  void insert(ElementIndex i) noexcept {
    words_[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63);
  }
  void clear() noexcept { std::fill(words_.begin(), words_.end(), 0); }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool full() const noexcept { return count() == size_; }
  bool empty() const noexcept {
    for (auto w : words_) {
      if (w != 0) return false;
    }
    return true;
  }

  MembershipTable& operator|=(const MembershipTable& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }
  bool intersects(const MembershipTable& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & other.words_[i]) return true;
    }
    return false;
  }

  /// Members in increasing index order.
  std::vector<ElementIndex> members() const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      for (auto bits = words_[w]; bits != 0; bits &= bits - 1) {
        f(static_cast<ElementIndex>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
      }
    }
  }

  std::vector<std::uint64_t>& words() noexcept { return words_; }
  const std::vector<std::uint64_t>& words() const noexcept { return words_; }

  friend bool operator==(const MembershipTable&, const MembershipTable&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// dst |= { x + offset : x in src }. `dst` and `src` must be distinct objects.
void or_translated(const GroupSpec& group, const MembershipTable& src, ElementIndex offset,
                   MembershipTable& dst);

}  // namespace sumsphere
