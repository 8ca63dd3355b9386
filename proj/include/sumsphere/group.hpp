#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sumsphere {

/// Mixed-radix position of an element inside its group, in [0, order).
using ElementIndex = std::int64_t;

class GroupElement;

/// A finite abelian group written as a product of cyclic factors Z_{n1} x ... x Z_{nk}.
///
/// The factor list is kept exactly as given; Z2xZ3 and Z6 are different specs even though
/// the groups are isomorphic. Copies share the factor storage.
class GroupSpec {
 public:
  explicit GroupSpec(std::vector<std::int64_t> orders);

  static GroupSpec cyclic(std::int64_t n) { return GroupSpec({n}); }

  /// Parses "Z25", "Z2xZ4", "Z2 x Z4".
  static GroupSpec parse(std::string_view literal);

  std::span<const std::int64_t> orders() const noexcept { return data_->orders; }
  std::int64_t order() const noexcept { return data_->order; }
  std::size_t rank() const noexcept { return data_->orders.size(); }
  bool is_cyclic() const noexcept { return data_->orders.size() == 1; }

  /// Least common multiple of the factors.
  std::int64_t exponent() const noexcept { return data_->exponent; }

  std::string to_string() const;

  GroupElement identity() const;
  /// Reduces each residue into [0, n_i). Throws GroupMismatchError on a length mismatch.
  GroupElement element(std::span<const std::int64_t> residues) const;
  GroupElement element(std::initializer_list<std::int64_t> residues) const;
  /// Parses "3" (cyclic) or "1,3" (one residue per factor).
  GroupElement parse_element(std::string_view literal) const;

  ElementIndex encode(const GroupElement& g) const;
  GroupElement decode(ElementIndex index) const;

  // Index-level arithmetic; the hot loops of the search never materialize GroupElement.
  ElementIndex add_index(ElementIndex a, ElementIndex b) const noexcept;
  ElementIndex negate_index(ElementIndex a) const noexcept;
  ElementIndex scale_index(std::int64_t lambda, ElementIndex a) const noexcept;

  friend bool operator==(const GroupSpec& a, const GroupSpec& b) noexcept {
    return a.data_ == b.data_ || a.data_->orders == b.data_->orders;
  }

 private:
  struct Data {
    std::vector<std::int64_t> orders;
    std::vector<std::int64_t> strides;  // last factor varies fastest
    std::int64_t order = 1;
    std::int64_t exponent = 1;
  };
  std::shared_ptr<const Data> data_;
};

/// An element of a GroupSpec, stored as canonical residues.
class GroupElement {
 public:
  const GroupSpec& group() const noexcept { return group_; }
  std::span<const std::int64_t> residues() const noexcept { return residues_; }
  std::int64_t operator[](std::size_t i) const noexcept { return residues_[i]; }
  ElementIndex index() const { return group_.encode(*this); }
  bool is_identity() const noexcept;

  /// "4" in a cyclic group, "1,3" otherwise.
  std::string to_string() const;

  friend bool operator==(const GroupElement& a, const GroupElement& b) noexcept {
    return a.group_ == b.group_ && a.residues_ == b.residues_;
  }

 private:
  friend class GroupSpec;
  GroupElement(GroupSpec group, std::vector<std::int64_t> residues)
      : group_(std::move(group)), residues_(std::move(residues)) {}

  GroupSpec group_;
  std::vector<std::int64_t> residues_;
};

GroupElement add(const GroupElement& g, const GroupElement& h);
GroupElement negate(const GroupElement& g);
GroupElement scalar_mul(std::int64_t lambda, const GroupElement& g);

/// |{g : 2g = 0}|, identity included.
std::int64_t self_inverse_count(const GroupSpec& group);

/// All elements in index order.
std::vector<GroupElement> enumerate(const GroupSpec& group);

/// Residues c in [1, n) with gcd(c, n) = 1. Cyclic groups only.
std::vector<std::int64_t> units(const GroupSpec& group);

/// Abelian groups of order n up to isomorphism, each in invariant-factor form
/// (n_1 | n_2 | ... | n_k), ordered with the cyclic group first.
std::vector<GroupSpec> abelian_groups_of_order(std::int64_t n);

/// Non-negative remainder.
constexpr std::int64_t mod(std::int64_t a, std::int64_t n) noexcept {
  const std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace sumsphere
