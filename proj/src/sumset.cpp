#include "sumsphere/sumset.hpp"

#include <algorithm>

#include "sumsphere/errors.hpp"

namespace sumsphere {

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return parts;
}

// Per-element DP: after processing a_1..a_i, table k holds every sum over those elements
// whose coefficient 1-norm is exactly k. Each a_i takes a single coefficient lambda in
// [-k, k] at cost |lambda|.
std::vector<MembershipTable> exact_layers(const GroupSpec& group,
                                          std::span<const ElementIndex> elements, int max_h) {
  const auto n = static_cast<std::size_t>(group.order());
  std::vector<MembershipTable> layers(static_cast<std::size_t>(max_h) + 1, MembershipTable(n));
  layers[0].insert(0);
  std::vector<MembershipTable> next(layers.size(), MembershipTable(n));
  std::vector<ElementIndex> pos(static_cast<std::size_t>(max_h) + 1);
  std::vector<ElementIndex> neg(static_cast<std::size_t>(max_h) + 1);
  for (auto a : elements) {
    for (int lambda = 0; lambda <= max_h; ++lambda) {
      pos[lambda] = group.scale_index(lambda, a);
      neg[lambda] = group.scale_index(-lambda, a);
    }
    for (int k = 0; k <= max_h; ++k) {
      auto& out = next[k];
      out = layers[k];
      for (int lambda = 1; lambda <= k; ++lambda) {
        const auto& from = layers[k - lambda];
        or_translated(group, from, pos[lambda], out);
        or_translated(group, from, neg[lambda], out);
      }
    }
    std::swap(layers, next);
  }
  return layers;
}

// Sums of all multisets of size h drawn from `a`.
MembershipTable plain_sums(const Subset& a, int h) {
  const auto& group = a.group();
  MembershipTable current(static_cast<std::size_t>(group.order()));
  current.insert(0);
  for (int j = 0; j < h; ++j) {
    MembershipTable next(current.size());
    for (auto x : a.indices()) or_translated(group, current, x, next);
    current = std::move(next);
  }
  return current;
}

bool bh_recurse(const Subset& a, int remaining, std::size_t from, ElementIndex sum,
                std::vector<bool>& seen) {
  if (remaining == 0) {
    if (seen[static_cast<std::size_t>(sum)]) return false;
    seen[static_cast<std::size_t>(sum)] = true;
    return true;
  }
  const auto idx = a.indices();
  for (std::size_t i = from; i < idx.size(); ++i) {
    if (!bh_recurse(a, remaining - 1, i, a.group().add_index(sum, idx[i]), seen)) return false;
  }
  return true;
}

}  // namespace

Subset::Subset(GroupSpec group, const std::vector<GroupElement>& elements)
    : group_(std::move(group)) {
  indices_.reserve(elements.size());
  for (const auto& g : elements) indices_.push_back(group_.encode(g));
  auto sorted = indices_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw DomainError("subset contains a duplicate element");
  }
}

Subset Subset::from_indices(GroupSpec group, std::vector<ElementIndex> indices) {
  std::vector<GroupElement> elements;
  elements.reserve(indices.size());
  for (auto i : indices) elements.push_back(group.decode(i));
  return Subset(std::move(group), elements);
}

Subset Subset::parse(GroupSpec group, std::string_view literal) {
  std::vector<GroupElement> elements;
  const bool empty_literal =
      literal.empty() || std::all_of(literal.begin(), literal.end(), [](char c) { return c == ' '; });
  if (!empty_literal) {
    const char sep = group.is_cyclic() ? ',' : ';';
    for (auto token : split(literal, sep)) elements.push_back(group.parse_element(token));
  }
  return Subset(std::move(group), elements);
}

std::vector<GroupElement> Subset::elements() const {
  std::vector<GroupElement> out;
  out.reserve(indices_.size());
  for (auto i : indices_) out.push_back(group_.decode(i));
  return out;
}

std::string Subset::to_string() const {
  std::string out;
  const char sep = group_.is_cyclic() ? ',' : ';';
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (i > 0) out += sep;
    out += group_.decode(indices_[i]).to_string();
  }
  return out;
}

SumsetLayers::SumsetLayers(Subset subset, int max_h) : subset_(std::move(subset)) {
  if (max_h < 0) throw DomainError("max_h must be non-negative");
  layers_ = exact_layers(subset_.group(), subset_.indices(), max_h);
}

MembershipTable signed_sumset(const Subset& a, int h) {
  if (h < 0) throw DomainError("h must be non-negative");
  return exact_layers(a.group(), a.indices(), h).back();
}

MembershipTable cumulative_sumset(const Subset& a, int s) {
  if (s < 0) throw DomainError("s must be non-negative");
  // Breadth-first growth: norm <= k+1 is norm <= k plus one step of +-a_i.
  const auto& group = a.group();
  MembershipTable reached(static_cast<std::size_t>(group.order()));
  reached.insert(0);
  for (int k = 0; k < s; ++k) {
    MembershipTable next = reached;
    for (auto x : a.indices()) {
      or_translated(group, reached, x, next);
      or_translated(group, reached, group.negate_index(x), next);
    }
    if (next == reached) break;
    reached = std::move(next);
  }
  return reached;
}

bool is_t_independent(const Subset& a, int t) {
  if (t < 0) throw DomainError("t must be non-negative");
  if (t == 0 || a.empty()) return true;
  const auto layers = exact_layers(a.group(), a.indices(), t);
  for (int h = 1; h <= t; ++h) {
    if (layers[h].contains(0)) return false;
  }
  return true;
}

std::int64_t independence_number(const Subset& a) {
  if (a.empty()) throw DomainError("independence number of the empty set is unbounded");
  // exponent * a_1 = 0 has norm `exponent`, so the identity appears by then.
  const auto cutoff = a.group().exponent();
  std::int64_t bound = std::min<std::int64_t>(8, cutoff);
  while (true) {
    const auto layers = exact_layers(a.group(), a.indices(), static_cast<int>(bound));
    for (std::int64_t h = 1; h <= bound; ++h) {
      if (layers[static_cast<std::size_t>(h)].contains(0)) return h - 1;
    }
    if (bound >= cutoff) break;
    bound = std::min(bound * 2, cutoff);
  }
  throw InternalInconsistencyError("identity never reached in a finite group");
}

bool is_s_spanning(const Subset& a, int s) { return cumulative_sumset(a, s).full(); }

std::optional<std::int64_t> spanning_number(const Subset& a) {
  const auto& group = a.group();
  MembershipTable reached(static_cast<std::size_t>(group.order()));
  reached.insert(0);
  for (std::int64_t s = 0;; ++s) {
    if (reached.full()) return s;
    MembershipTable next = reached;
    for (auto x : a.indices()) {
      or_translated(group, reached, x, next);
      or_translated(group, reached, group.negate_index(x), next);
    }
    if (next == reached) return std::nullopt;
    reached = std::move(next);
  }
}

bool is_zero_h_sum_free(const Subset& a, int h) {
  if (h < 1) throw DomainError("h must be >= 1");
  return !plain_sums(a, h).contains(0);
}

bool is_kl_sum_free(const Subset& a, int k, int l) {
  if (k < 1 || l < 1) throw DomainError("k and l must be >= 1");
  if (k == l) throw DomainError("(k,l)-sum-free needs k != l");
  return !plain_sums(a, k).intersects(plain_sums(a, l));
}

bool is_Bh(const Subset& a, int h) {
  if (h < 1) throw DomainError("h must be >= 1");
  std::vector<bool> seen(static_cast<std::size_t>(a.group().order()), false);
  return bh_recurse(a, h, 0, 0, seen);
}

}  // namespace sumsphere
