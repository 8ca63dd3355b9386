#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sumsphere/group.hpp"
#include "sumsphere/membership.hpp"

namespace sumsphere {

/// An ordered, duplicate-free list of elements a_1, ..., a_m of one group.
class Subset {
 public:
  explicit Subset(GroupSpec group) : group_(std::move(group)) {}
  /// Throws DomainError on duplicates and GroupMismatchError on foreign elements.
  Subset(GroupSpec group, const std::vector<GroupElement>& elements);

  static Subset from_indices(GroupSpec group, std::vector<ElementIndex> indices);
  /// Cyclic groups: "1,4,6,9,11". Other groups: elements separated by ';', e.g. "1,3;0,1".
  static Subset parse(GroupSpec group, std::string_view literal);

  const GroupSpec& group() const noexcept { return group_; }
  std::span<const ElementIndex> indices() const noexcept { return indices_; }
  std::vector<GroupElement> elements() const;
  std::size_t size() const noexcept { return indices_.size(); }
  bool empty() const noexcept { return indices_.empty(); }

  std::string to_string() const;

  friend bool operator==(const Subset& a, const Subset& b) {
    return a.group_ == b.group_ && a.indices_ == b.indices_;
  }

 private:
  GroupSpec group_;
  std::vector<ElementIndex> indices_;
};

/// Layers h(+-)A for h = 0..max_h, each a membership table over the whole group.
class SumsetLayers {
 public:
  SumsetLayers(Subset subset, int max_h);

  const Subset& subset() const noexcept { return subset_; }
  const GroupSpec& group() const noexcept { return subset_.group(); }
  int max_h() const noexcept { return static_cast<int>(layers_.size()) - 1; }
  const MembershipTable& layer(int h) const { return layers_.at(static_cast<std::size_t>(h)); }

 private:
  Subset subset_;
  std::vector<MembershipTable> layers_;
};

/// h(+-)A: elements sum(lambda_i a_i) with sum |lambda_i| exactly h.
MembershipTable signed_sumset(const Subset& a, int h);

/// Union of h(+-)A for h = 0..s.
MembershipTable cumulative_sumset(const Subset& a, int s);

bool is_t_independent(const Subset& a, int t);

/// Largest t for which `a` is t-independent. Throws DomainError for an empty set.
std::int64_t independence_number(const Subset& a);

bool is_s_spanning(const Subset& a, int s);

/// Smallest s for which `a` is s-spanning; nullopt when `a` does not generate the group.
std::optional<std::int64_t> spanning_number(const Subset& a);

/// x_1 + ... + x_h = 0 has no solution in `a` (repetition allowed).
bool is_zero_h_sum_free(const Subset& a, int h);
/// x_1 + ... + x_k = y_1 + ... + y_l has no solution in `a`; requires k != l.
bool is_kl_sum_free(const Subset& a, int k, int l);
/// Every solution of x_1 + ... + x_h = y_1 + ... + y_h uses the same multiset on both sides.
bool is_Bh(const Subset& a, int h);

}  // namespace sumsphere
