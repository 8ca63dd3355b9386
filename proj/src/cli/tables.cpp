#include "sumsphere/cli/tables.hpp"

#include <algorithm>
#include <charconv>

#include "embedded_tables.hpp"
#include "sumsphere/cli/cache.hpp"
#include "sumsphere/cli/cli.hpp"
#include "sumsphere/closed_forms.hpp"
#include "sumsphere/errors.hpp"

namespace sumsphere::cli {

namespace {

std::int64_t to_int(std::string_view s, const std::string& context) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError("bad n in table " + context, std::string(s));
  }
  return v;
}

bool verify_row(TableKind kind, int parameter, const Subset& witness, std::int64_t value) {
  if (static_cast<std::int64_t>(witness.size()) != value) return false;
  if (kind == TableKind::kTau) return is_t_independent(witness, parameter);
  return is_s_spanning(witness, parameter);
}

std::string describe(const SearchConfig& cfg) {
  std::string out = std::string(kToolVersion) + "; symmetry=" +
                    (cfg.symmetry_reduction ? "on" : "off") +
                    "; threads=" + std::to_string(cfg.thread_count);
  if (cfg.node_budget) out += "; node_budget=" + std::to_string(*cfg.node_budget);
  if (cfg.time_budget) out += "; time_budget_ms=" + std::to_string(cfg.time_budget->count());
  return out;
}

}  // namespace

std::string_view to_string(TableKind kind) { return kind == TableKind::kTau ? "tau" : "phi"; }

std::optional<std::int64_t> ExpectedTable::expected(std::int64_t n) const {
  if (auto it = values.find(n); it != values.end()) return it->second;
  return std::nullopt;
}

std::vector<std::int64_t> ExpectedTable::unlisted() const {
  std::vector<std::int64_t> out;
  for (auto n = n_from; n <= n_to; ++n) {
    if (!values.contains(n)) out.push_back(n);
  }
  return out;
}

ExpectedTable ExpectedTable::from_json(const nlohmann::json& j) {
  ExpectedTable t;
  t.id = j.at("id").get<std::string>();
  const auto kind = j.at("kind").get<std::string>();
  if (kind != "tau" && kind != "phi") throw ParseError("table kind must be tau or phi", kind);
  t.kind = kind == "tau" ? TableKind::kTau : TableKind::kPhi;
  t.parameter = j.at("parameter").get<int>();
  t.n_from = j.at("n_from").get<std::int64_t>();
  t.n_to = j.at("n_to").get<std::int64_t>();
  t.source = j.value("source", "");
  for (const auto& cls : j.at("classes")) {
    const auto value = cls.at("value").get<std::int64_t>();
    for (const auto& item : cls.at("n")) {
      const auto text = item.get<std::string>();
      const auto dash = text.find('-');
      const auto lo = to_int(std::string_view(text).substr(0, dash), t.id);
      const auto hi =
          dash == std::string::npos ? lo : to_int(std::string_view(text).substr(dash + 1), t.id);
      for (auto n = lo; n <= hi; ++n) {
        if (!t.values.emplace(n, value).second) {
          throw ParseError("n listed twice in table " + t.id, std::to_string(n));
        }
      }
    }
  }
  return t;
}

const ExpectedTable& builtin_table(std::string_view id) {
  static const std::vector<ExpectedTable> tables = [] {
    std::vector<ExpectedTable> out;
    for (const auto& e : detail::embedded_tables()) {
      out.push_back(ExpectedTable::from_json(nlohmann::json::parse(e.json)));
    }
    return out;
  }();
  for (const auto& t : tables) {
    if (t.id == id) return t;
  }
  throw ParseError("unknown table", std::string(id));
}

std::vector<std::string> builtin_table_ids() {
  std::vector<std::string> ids{"tau3-formula"};
  for (const auto& e : detail::embedded_tables()) ids.emplace_back(e.id);
  return ids;
}

TableReport compute_table(TableKind kind, int parameter, std::int64_t n_from, std::int64_t n_to,
                          const SearchConfig& cfg, ResultCache* cache) {
  if (n_from < 1 || n_to < n_from) throw DomainError("bad n range");
  TableReport report;
  report.kind = kind;
  report.parameter = parameter;
  report.provenance = describe(cfg);
  for (auto n = n_from; n <= n_to; ++n) {
    const auto group = GroupSpec::cyclic(n);
    if (kind == TableKind::kTau && n < 2) continue;
    const auto r = kind == TableKind::kTau ? cached_tau(group, parameter, cfg, cache)
                                           : cached_phi(group, parameter, cfg, cache);
    TableRow row{n, r.value, r.witness, r.exhaustive, r.nodes_explored, r.elapsed.count(), false};
    row.witness_verified = verify_row(kind, parameter, row.witness, row.value);
    report.rows.push_back(std::move(row));
  }
  return report;
}

ReproductionReport reproduce(std::string_view id, const SearchConfig& cfg, ResultCache* cache) {
  ReproductionReport rep;
  rep.id = std::string(id);
  if (id == "tau3-formula") {
    rep.table = compute_table(TableKind::kTau, 3, 4, 60, cfg, cache);
    for (const auto& row : rep.table.rows) {
      const auto formula = tau3_cyclic(row.n);
      if (!formula.is_integer()) {
        throw InternalInconsistencyError("tau3 formula is not integral at n=" +
                                         std::to_string(row.n));
      }
      if (formula.num != row.value) rep.mismatches.push_back({row.n, formula.num, row.value});
      rep.complete = rep.complete && row.exhaustive && row.witness_verified;
    }
    return rep;
  }
  const auto& expected = builtin_table(id);
  rep.table = compute_table(expected.kind, expected.parameter, expected.n_from, expected.n_to,
                            cfg, cache);
  rep.excluded = expected.unlisted();
  for (const auto& row : rep.table.rows) {
    rep.complete = rep.complete && row.exhaustive && row.witness_verified;
    if (auto want = expected.expected(row.n); want && *want != row.value) {
      rep.mismatches.push_back({row.n, *want, row.value});
    }
  }
  return rep;
}

}  // namespace sumsphere::cli
