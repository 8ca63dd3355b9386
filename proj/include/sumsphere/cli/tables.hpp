#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "sumsphere/search.hpp"

namespace sumsphere::cli {

enum class TableKind { kTau, kPhi };

/// Published values of tau(Z_n, t) or phi(Z_n, s) over an n range. Values for n in the range
/// but missing from every class are unknown and excluded from comparisons.
struct ExpectedTable {
  std::string id;
  TableKind kind = TableKind::kTau;
  int parameter = 0;
  std::int64_t n_from = 0;
  std::int64_t n_to = 0;
  std::string source;
  std::map<std::int64_t, std::int64_t> values;

  std::optional<std::int64_t> expected(std::int64_t n) const;
  std::vector<std::int64_t> unlisted() const;

  static ExpectedTable from_json(const nlohmann::json& j);
};

/// The tables bundled with the tool: tau4, tau5, tau6, phi2.
const ExpectedTable& builtin_table(std::string_view id);
std::vector<std::string> builtin_table_ids();

struct TableRow {
  std::int64_t n = 0;
  std::int64_t value = 0;
  Subset witness;
  bool exhaustive = false;
  std::uint64_t nodes = 0;
  std::int64_t millis = 0;
  bool witness_verified = false;
};

struct TableReport {
  TableKind kind = TableKind::kTau;
  int parameter = 0;
  std::vector<TableRow> rows;  // increasing n
  std::string provenance;
};

struct Mismatch {
  std::int64_t n = 0;
  std::int64_t expected = 0;
  std::int64_t computed = 0;
};

struct ReproductionReport {
  std::string id;
  TableReport table;
  std::vector<Mismatch> mismatches;
  std::vector<std::int64_t> excluded;  // unlisted n, not compared
  bool complete = true;                // every row exhaustive

  bool reproduced() const { return complete && mismatches.empty(); }
};

class ResultCache;

/// Computes tau(Z_n, t) or phi(Z_n, s) for n in [n_from, n_to], re-verifying every witness.
TableReport compute_table(TableKind kind, int parameter, std::int64_t n_from, std::int64_t n_to,
                          const SearchConfig& cfg, ResultCache* cache = nullptr);

/// Table ids: tau3-formula, tau4, tau5, tau6, phi2.
ReproductionReport reproduce(std::string_view id, const SearchConfig& cfg,
                             ResultCache* cache = nullptr);

std::string_view to_string(TableKind kind);

}  // namespace sumsphere::cli
