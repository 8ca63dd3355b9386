#include "sumsphere/membership.hpp"

namespace sumsphere {

namespace {

// dst bit j |= src bit (j - r), for r < size.
void or_shift_up(std::vector<std::uint64_t>& dst, const std::vector<std::uint64_t>& src,
                 std::size_t r) {
  const std::size_t ws = r / 64;
  const std::size_t bs = r % 64;
  for (std::size_t w = dst.size(); w-- > ws;) {
    std::uint64_t v = src[w - ws] << bs;
    if (bs != 0 && w > ws) v |= src[w - ws - 1] >> (64 - bs);
    dst[w] |= v;
  }
}

// dst bit j |= src bit (j + r).
void or_shift_down(std::vector<std::uint64_t>& dst, const std::vector<std::uint64_t>& src,
                   std::size_t r) {
  const std::size_t ws = r / 64;
  const std::size_t bs = r % 64;
  const std::size_t n = src.size();
  for (std::size_t w = 0; w + ws < n; ++w) {
    std::uint64_t v = src[w + ws] >> bs;
    if (bs != 0 && w + ws + 1 < n) v |= src[w + ws + 1] << (64 - bs);
    dst[w] |= v;
  }
}

}  // namespace

std::vector<ElementIndex> MembershipTable::members() const {
  std::vector<ElementIndex> out;
  out.reserve(count());
  for_each([&](ElementIndex i) { out.push_back(i); });
  return out;
}

void or_translated(const GroupSpec& group, const MembershipTable& src, ElementIndex offset,
                   MembershipTable& dst) {
  if (offset == 0) {
    dst |= src;
    return;
  }
  if (group.is_cyclic()) {
    // Rotation by `offset` on an n-bit ring.
    const auto n = static_cast<std::size_t>(group.order());
    const auto r = static_cast<std::size_t>(offset);
    or_shift_up(dst.words(), src.words(), r);
    or_shift_down(dst.words(), src.words(), n - r);
    if (const auto tail = n % 64; tail != 0) {
      dst.words().back() &= (std::uint64_t{1} << tail) - 1;
    }
    return;
  }
  src.for_each([&](ElementIndex i) { dst.insert(group.add_index(i, offset)); });
}

}  // namespace sumsphere
