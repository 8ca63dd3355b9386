#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sumsphere/group.hpp"
#include "sumsphere/sumset.hpp"

namespace sumsphere {

struct SearchConfig {
  /// Cyclic groups: unit multiplication. All groups: per-element sign flips.
  bool symmetry_reduction = true;
  unsigned thread_count = 1;
  std::optional<std::uint64_t> node_budget;
  std::optional<std::chrono::milliseconds> time_budget;
};

/// Outcome of an extremal search. When `exhaustive` is false the value is only a bound
/// (a lower bound for tau, an upper bound for phi).
struct SearchResult {
  std::int64_t value = 0;
  Subset witness;
  bool exhaustive = false;
  std::uint64_t nodes_explored = 0;
  std::chrono::milliseconds elapsed{0};
};

/// Size of the largest t-independent subset of `group`.
SearchResult tau(const GroupSpec& group, int t, const SearchConfig& cfg = {});

/// Size of the smallest s-spanning subset of `group`, over nonempty subsets.
SearchResult phi(const GroupSpec& group, int s, const SearchConfig& cfg = {});

struct PerfectSet {
  GroupSpec group;
  Subset set;
};

struct PerfectSetReport {
  int m = 0;
  int s = 0;
  std::int64_t order = 0;  // a(m, s)
  std::vector<GroupSpec> groups_searched;
  std::vector<PerfectSet> sets;
  bool exhaustive = false;
  std::uint64_t nodes_explored = 0;
};

/// m-subsets that are s-spanning and 2s-independent in some abelian group of order a(m,s).
/// Cyclic groups report one representative per unit-multiplication orbit; other groups report
/// every set, sorted by index.
PerfectSetReport find_perfect_sets(int m, int s, const SearchConfig& cfg = {});

struct ProbeCell {
  int m = 0;
  int s = 0;
  std::int64_t order = 0;  // a(m, s), saturated at the int64 maximum
  bool searched = false;  // false: order above the cap
  bool exhaustive = false;
  std::vector<PerfectSet> found;
};

struct ProbeReport {
  std::int64_t order_cap = 0;
  std::vector<ProbeCell> cells;
};

/// Runs find_perfect_sets for 3 <= m <= max_m, 2 <= s <= max_s, skipping cells whose group
/// order exceeds `order_cap`. Reports findings only.
ProbeReport conjecture_probe_perfect(int max_m, int max_s, std::int64_t order_cap,
                                     const SearchConfig& cfg = {});

/// Lexicographically least sorted u*A over the units u of a cyclic group.
Subset canonical_unit_representative(const Subset& a);

}  // namespace sumsphere
