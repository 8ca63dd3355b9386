#include "sumsphere/search.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

#include "sumsphere/closed_forms.hpp"
#include "sumsphere/errors.hpp"

namespace sumsphere {

namespace {

using Clock = std::chrono::steady_clock;

// Cumulative sumset tables: entry k holds every combination of the chosen elements with
// coefficient 1-norm at most k.
using Tables = std::vector<MembershipTable>;

class Budget {
 public:
  explicit Budget(const SearchConfig& cfg) : node_budget_(cfg.node_budget) {
    if (cfg.time_budget) deadline_ = Clock::now() + *cfg.time_budget;
  }

  /// Accounts for one node. False once a budget is exhausted; the node must not be explored.
  bool tick() {
    if (stopped_.load(std::memory_order_relaxed)) return false;
    const auto k = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
    if (node_budget_ && k > *node_budget_) return stop();
    if (deadline_ && (k & 1023U) == 0 && Clock::now() > *deadline_) return stop();
    return true;
  }

  bool stopped() const { return stopped_.load(std::memory_order_relaxed); }
  std::uint64_t nodes() const {
    const auto k = nodes_.load();
    return node_budget_ ? std::min(k, *node_budget_) : k;
  }

 private:
  bool stop() {
    stopped_.store(true);
    return false;
  }

  std::optional<std::uint64_t> node_budget_;
  std::optional<Clock::time_point> deadline_;
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<bool> stopped_{false};
};

Tables identity_tables(const GroupSpec& group, int levels) {
  MembershipTable zero(static_cast<std::size_t>(group.order()));
  zero.insert(0);
  return Tables(static_cast<std::size_t>(levels), zero);
}

// next[k] = union over |lambda| <= k of (lambda x + prev[k - |lambda|]).
void extend(const GroupSpec& group, const Tables& prev, ElementIndex x, Tables& next) {
  const int levels = static_cast<int>(prev.size());
  next.resize(prev.size());
  for (int k = 0; k < levels; ++k) {
    next[k] = prev[k];
    for (int lambda = 1; lambda <= k; ++lambda) {
      or_translated(group, prev[k - lambda], group.scale_index(lambda, x), next[k]);
      or_translated(group, prev[k - lambda], group.scale_index(-lambda, x), next[k]);
    }
  }
}

// y can join a t-independent set with tables `cum` (levels 0..t-1) iff no relation
// lambda y = c with c of norm <= t - lambda exists.
bool compatible(const GroupSpec& group, const Tables& cum, ElementIndex y, int t) {
  for (int lambda = 1; lambda <= t; ++lambda) {
    if (cum[static_cast<std::size_t>(t - lambda)].contains(group.scale_index(lambda, y))) {
      return false;
    }
  }
  return true;
}

std::int64_t gcd_with_order(const GroupSpec& group, ElementIndex x) {
  return std::gcd(x, group.order());
}

// Nonzero elements in index order; with `sign_reps`, one element per pair {g, -g}.
std::vector<ElementIndex> base_pool(const GroupSpec& group, bool sign_reps) {
  std::vector<ElementIndex> out;
  for (ElementIndex i = 1; i < group.order(); ++i) {
    if (!sign_reps || i <= group.negate_index(i)) out.push_back(i);
  }
  return out;
}

// First-level branching. In a cyclic group any set can be moved by a unit so that its
// element of smallest gcd(x, n) becomes that divisor d; every other element then has
// gcd >= d and hence is larger than d. Otherwise each pool element roots the sets whose
// least element it is.
struct Branching {
  const GroupSpec* group;
  const std::vector<ElementIndex>* base;
  bool by_divisor;
  std::vector<ElementIndex> roots;

  Branching(const GroupSpec& g, const std::vector<ElementIndex>& pool, bool use_units)
      : group(&g), base(&pool), by_divisor(use_units && g.is_cyclic()) {
    if (by_divisor) {
      for (auto x : pool) {
        if (g.order() % x == 0) roots.push_back(x);
      }
    } else {
      roots = pool;
    }
  }

  std::vector<ElementIndex> pool_after(ElementIndex root) const {
    std::vector<ElementIndex> out;
    for (auto y : *base) {
      if (y <= root) continue;
      if (by_divisor && gcd_with_order(*group, y) < root) continue;
      out.push_back(y);
    }
    return out;
  }
};

template <typename Body>
void run_branches(std::size_t count, unsigned thread_count, const Budget& budget, Body body) {
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < count && !budget.stopped();) body(i);
  };
  if (thread_count <= 1 || count <= 1) {
    worker();
    return;
  }
  std::vector<std::jthread> pool;
  const auto n = std::min<std::size_t>(thread_count, count);
  for (std::size_t i = 0; i < n; ++i) pool.emplace_back(worker);
}

std::chrono::milliseconds since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
}

std::vector<ElementIndex> sorted(std::vector<ElementIndex> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// ---------------------------------------------------------------------------------------
// tau

class TauSearch {
 public:
  TauSearch(const GroupSpec& group, int t, const SearchConfig& cfg)
      : group_(group), t_(t), cfg_(cfg), budget_(cfg) {}

  SearchResult run() {
    const auto start = Clock::now();
    const bool symmetric = cfg_.symmetry_reduction;
    // Replacing a by -a leaves every signed sumset unchanged, and a, -a cannot both occur
    // once t >= 2.
    const auto empty = identity_tables(group_, t_);
    std::vector<ElementIndex> base;
    for (auto x : base_pool(group_, symmetric && t_ >= 2)) {
      if (compatible(group_, empty, x, t_)) base.push_back(x);
    }
    seed_greedy(base, empty);

    const Branching branching(group_, base, symmetric);
    run_branches(branching.roots.size(), cfg_.thread_count, budget_, [&](std::size_t b) {
      const auto root = branching.roots[b];
      auto pool = branching.pool_after(root);
      if (1 + static_cast<std::int64_t>(pool.size()) <= best_.load()) return;
      if (!budget_.tick()) return;
      std::vector<Tables> stack(2);
      extend(group_, empty, root, stack[1]);
      std::vector<ElementIndex> cand;
      for (auto y : pool) {
        if (compatible(group_, stack[1], y, t_)) cand.push_back(y);
      }
      std::vector<ElementIndex> chosen{root};
      offer(chosen);
      dfs(chosen, stack, cand);
    });

    SearchResult result{best_.load(), Subset::from_indices(group_, sorted(witness_)),
                        !budget_.stopped(), budget_.nodes(), since(start)};
    return result;
  }

 private:
  void seed_greedy(const std::vector<ElementIndex>& base, const Tables& empty) {
    Tables cur = empty;
    Tables next;
    std::vector<ElementIndex> chosen;
    for (auto x : base) {
      if (!compatible(group_, cur, x, t_)) continue;
      extend(group_, cur, x, next);
      std::swap(cur, next);
      chosen.push_back(x);
    }
    best_ = static_cast<std::int64_t>(chosen.size());
    witness_ = chosen;
  }

  void offer(const std::vector<ElementIndex>& chosen) {
    const auto size = static_cast<std::int64_t>(chosen.size());
    if (size <= best_.load()) return;
    std::lock_guard lock(mutex_);
    if (size > best_.load()) {
      best_.store(size);
      witness_ = chosen;
    }
  }

  void dfs(std::vector<ElementIndex>& chosen, std::vector<Tables>& stack,
           const std::vector<ElementIndex>& cand) {
    const auto depth = chosen.size();
    if (stack.size() <= depth + 1) stack.resize(depth + 2);
    std::vector<ElementIndex> next_cand;
    for (std::size_t i = 0; i < cand.size(); ++i) {
      if (static_cast<std::int64_t>(depth + cand.size() - i) <= best_.load()) return;
      if (!budget_.tick()) return;
      const auto x = cand[i];
      extend(group_, stack[depth], x, stack[depth + 1]);
      next_cand.clear();
      for (std::size_t j = i + 1; j < cand.size(); ++j) {
        if (compatible(group_, stack[depth + 1], cand[j], t_)) next_cand.push_back(cand[j]);
      }
      chosen.push_back(x);
      offer(chosen);
      dfs(chosen, stack, next_cand);
      chosen.pop_back();
    }
  }

  const GroupSpec& group_;
  int t_;
  const SearchConfig& cfg_;
  Budget budget_;
  std::atomic<std::int64_t> best_{0};
  std::mutex mutex_;
  std::vector<ElementIndex> witness_;
};

// ---------------------------------------------------------------------------------------
// phi

class PhiSearch {
 public:
  PhiSearch(const GroupSpec& group, int s, const SearchConfig& cfg)
      : group_(group), s_(s), cfg_(cfg), budget_(cfg), n_(group.order()) {}

  SearchResult run() {
    const auto start = Clock::now();
    if (n_ == 1) {
      // The only nonempty subset of the trivial group is {0}.
      return {1, Subset::from_indices(group_, {0}), true, 0, since(start)};
    }
    base_ = base_pool(group_, cfg_.symmetry_reduction);
    const auto greedy = greedy_cover();
    const auto upper = static_cast<std::int64_t>(greedy.size());

    std::int64_t m = 1;
    while (delannoy(m, s_) < n_) ++m;

    // layer_[r][k]: vectors of Z^r with norm exactly k, capped at n.
    layer_.assign(static_cast<std::size_t>(upper) + 1, std::vector<std::int64_t>(s_ + 1));
    for (std::int64_t r = 0; r <= upper; ++r) {
      for (int k = 0; k <= s_; ++k) {
        const auto c = exact_norm_count(r, k);
        layer_[r][k] = c > n_ ? n_ : c.convert_to<std::int64_t>();
      }
    }

    for (; m < upper; ++m) {
      if (search_size(m)) {
        return {m, Subset::from_indices(group_, sorted(witness_)), true, budget_.nodes(),
                since(start)};
      }
      if (budget_.stopped()) break;
    }
    return {upper, Subset::from_indices(group_, sorted(greedy)), !budget_.stopped(),
            budget_.nodes(), since(start)};
  }

 private:
  std::vector<ElementIndex> greedy_cover() {
    Tables cur = identity_tables(group_, s_ + 1);
    Tables next;
    Tables trial;
    std::vector<ElementIndex> chosen;
    while (!cur[s_].full()) {
      std::size_t best_count = 0;
      ElementIndex best = -1;
      for (auto x : base_) {
        extend(group_, cur, x, trial);
        if (const auto c = trial[s_].count(); c > best_count) {
          best_count = c;
          best = x;
        }
      }
      extend(group_, cur, best, next);
      std::swap(cur, next);
      chosen.push_back(best);
    }
    return chosen;
  }

  bool search_size(std::int64_t m) {
    m_ = m;
    found_.store(false);
    const Branching branching(group_, base_, cfg_.symmetry_reduction);
    const auto empty = identity_tables(group_, s_ + 1);
    run_branches(branching.roots.size(), cfg_.thread_count, budget_, [&](std::size_t b) {
      if (found_.load()) return;
      const auto root = branching.roots[b];
      const auto pool = branching.pool_after(root);
      if (static_cast<std::int64_t>(pool.size()) + 1 < m_) return;
      if (!budget_.tick()) return;
      std::vector<Tables> stack(static_cast<std::size_t>(m_) + 1);
      extend(group_, empty, root, stack[1]);
      std::vector<ElementIndex> chosen{root};
      dfs(chosen, stack, pool, 0);
    });
    return found_.load();
  }

  // Largest number of elements norm-s combinations can reach once the remaining slots are
  // filled: each element is (norm-k combination of new elements) + (norm <= s-k of chosen).
  bool can_still_cover(const Tables& cum, std::int64_t slots) const {
    std::int64_t reach = 0;
    for (int k = 0; k <= s_ && reach < n_; ++k) {
      reach += layer_[slots][k] * static_cast<std::int64_t>(cum[s_ - k].count());
    }
    return reach >= n_;
  }

  void dfs(std::vector<ElementIndex>& chosen, std::vector<Tables>& stack,
           const std::vector<ElementIndex>& pool, std::size_t start) {
    const auto depth = static_cast<std::int64_t>(chosen.size());
    const auto& cum = stack[depth];
    if (depth == m_) {
      if (cum[s_].full()) {
        std::lock_guard lock(mutex_);
        if (!found_.load()) {
          witness_ = chosen;
          found_.store(true);
        }
      }
      return;
    }
    if (!can_still_cover(cum, m_ - depth)) return;
    for (std::size_t i = start; i + static_cast<std::size_t>(m_ - depth) <= pool.size(); ++i) {
      if (found_.load() || !budget_.tick()) return;
      extend(group_, cum, pool[i], stack[depth + 1]);
      chosen.push_back(pool[i]);
      dfs(chosen, stack, pool, i + 1);
      chosen.pop_back();
    }
  }

  const GroupSpec& group_;
  int s_;
  const SearchConfig& cfg_;
  Budget budget_;
  std::int64_t n_;
  std::int64_t m_ = 0;
  std::vector<ElementIndex> base_;
  std::vector<std::vector<std::int64_t>> layer_;
  std::atomic<bool> found_{false};
  std::mutex mutex_;
  std::vector<ElementIndex> witness_;
};

// ---------------------------------------------------------------------------------------
// perfect sets

class PerfectSearch {
 public:
  PerfectSearch(const GroupSpec& group, int m, int s, const SearchConfig& cfg, Budget& budget)
      : group_(group), m_(m), s_(s), t_(2 * s), cfg_(cfg), budget_(budget) {}

  std::vector<Subset> run() {
    const auto empty = identity_tables(group_, t_);
    std::vector<ElementIndex> base;
    for (auto x : base_pool(group_, false)) {
      if (compatible(group_, empty, x, t_)) base.push_back(x);
    }
    const Branching branching(group_, base, cfg_.symmetry_reduction);
    run_branches(branching.roots.size(), cfg_.thread_count, budget_, [&](std::size_t b) {
      const auto root = branching.roots[b];
      const auto pool = branching.pool_after(root);
      if (!budget_.tick()) return;
      std::vector<Tables> stack(static_cast<std::size_t>(m_) + 1);
      extend(group_, empty, root, stack[1]);
      std::vector<ElementIndex> cand;
      for (auto y : pool) {
        if (compatible(group_, stack[1], y, t_)) cand.push_back(y);
      }
      std::vector<ElementIndex> chosen{root};
      dfs(chosen, stack, cand);
    });

    std::vector<Subset> out;
    for (const auto& key : found_) out.push_back(Subset::from_indices(group_, key));
    return out;
  }

 private:
  void record(const std::vector<ElementIndex>& chosen) {
    auto key = sorted(chosen);
    if (group_.is_cyclic() && cfg_.symmetry_reduction) {
      const auto rep = canonical_unit_representative(Subset::from_indices(group_, key));
      key.assign(rep.indices().begin(), rep.indices().end());
    }
    std::lock_guard lock(mutex_);
    found_.insert(std::move(key));
  }

  void dfs(std::vector<ElementIndex>& chosen, std::vector<Tables>& stack,
           const std::vector<ElementIndex>& cand) {
    const auto depth = chosen.size();
    if (static_cast<int>(depth) == m_) {
      if (stack[depth][static_cast<std::size_t>(s_)].full()) record(chosen);
      return;
    }
    std::vector<ElementIndex> next_cand;
    for (std::size_t i = 0; i + (static_cast<std::size_t>(m_) - depth) <= cand.size(); ++i) {
      if (!budget_.tick()) return;
      extend(group_, stack[depth], cand[i], stack[depth + 1]);
      next_cand.clear();
      for (std::size_t j = i + 1; j < cand.size(); ++j) {
        if (compatible(group_, stack[depth + 1], cand[j], t_)) next_cand.push_back(cand[j]);
      }
      chosen.push_back(cand[i]);
      dfs(chosen, stack, next_cand);
      chosen.pop_back();
    }
  }

  const GroupSpec& group_;
  int m_;
  int s_;
  int t_;
  const SearchConfig& cfg_;
  Budget& budget_;
  std::mutex mutex_;
  std::set<std::vector<ElementIndex>> found_;
};

}  // namespace

SearchResult tau(const GroupSpec& group, int t, const SearchConfig& cfg) {
  if (t < 1) throw DomainError("tau needs t >= 1");
  if (group.order() < 2) throw DomainError("tau needs a group of order >= 2");
  return TauSearch(group, t, cfg).run();
}

SearchResult phi(const GroupSpec& group, int s, const SearchConfig& cfg) {
  if (s < 1) throw DomainError("phi needs s >= 1");
  return PhiSearch(group, s, cfg).run();
}

PerfectSetReport find_perfect_sets(int m, int s, const SearchConfig& cfg) {
  if (m < 1 || s < 1) throw DomainError("find_perfect_sets needs m >= 1 and s >= 1");
  const auto order_big = delannoy(m, s);
  if (order_big > std::int64_t{1} << 31) throw DomainError("group order a(m,s) too large");
  PerfectSetReport report;
  report.m = m;
  report.s = s;
  report.order = order_big.convert_to<std::int64_t>();
  Budget budget(cfg);
  for (const auto& group : abelian_groups_of_order(report.order)) {
    report.groups_searched.push_back(group);
    for (auto& set : PerfectSearch(group, m, s, cfg, budget).run()) {
      report.sets.push_back({group, std::move(set)});
    }
    if (budget.stopped()) break;
  }
  report.exhaustive = !budget.stopped();
  report.nodes_explored = budget.nodes();
  return report;
}

ProbeReport conjecture_probe_perfect(int max_m, int max_s, std::int64_t order_cap,
                                     const SearchConfig& cfg) {
  ProbeReport report;
  report.order_cap = order_cap;
  for (int m = 3; m <= max_m; ++m) {
    for (int s = 2; s <= max_s; ++s) {
      ProbeCell cell;
      cell.m = m;
      cell.s = s;
      const auto order = delannoy(m, s);
      constexpr auto kMax = std::numeric_limits<std::int64_t>::max();
      cell.order = order > kMax ? kMax : order.convert_to<std::int64_t>();
      if (order <= order_cap) {
        auto found = find_perfect_sets(m, s, cfg);
        cell.searched = true;
        cell.exhaustive = found.exhaustive;
        cell.found = std::move(found.sets);
      }
      report.cells.push_back(std::move(cell));
    }
  }
  return report;
}

Subset canonical_unit_representative(const Subset& a) {
  const auto& group = a.group();
  if (!group.is_cyclic()) throw UnsupportedError("unit orbits need a cyclic group");
  auto best = sorted({a.indices().begin(), a.indices().end()});
  for (auto u : units(group)) {
    std::vector<ElementIndex> image;
    image.reserve(a.size());
    for (auto x : a.indices()) image.push_back(group.scale_index(u, x));
    std::sort(image.begin(), image.end());
    if (image < best) best = std::move(image);
  }
  return Subset::from_indices(group, std::move(best));
}

}  // namespace sumsphere
