#include "sumsphere/cli/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "sumsphere/cli/cache.hpp"
#include "sumsphere/cli/io.hpp"
#include "sumsphere/cli/tables.hpp"
#include "sumsphere/closed_forms.hpp"
#include "sumsphere/errors.hpp"
#include "sumsphere/search.hpp"
#include "sumsphere/sphere.hpp"
#include "sumsphere/sumset.hpp"

namespace sumsphere::cli {

namespace {

using nlohmann::json;

enum class Format { kJson, kCsv };

struct Options {
  std::string format = "json";
  std::optional<double> tolerance;

  std::string group;
  std::string set;
  int h = 0;
  int t = 0;
  int s = 0;
  int m = 0;
  bool cumulative = false;

  bool no_symmetry = false;
  unsigned threads = 1;
  std::optional<std::uint64_t> budget_nodes;
  std::optional<double> budget_seconds;
  std::string cache_path;
  bool no_timing = false;

  std::int64_t n_from = 0;
  std::int64_t n_to = 0;
  std::string out_path;

  int max_m = 0;
  int max_s = 0;
  std::int64_t order_cap = 0;

  std::string what;
  std::int64_t n = 0;
  std::int64_t d = 0;
  std::int64_t k = 0;
  double eps = 0.0;
  double delta = 0.0;

  std::int64_t size_n = 0;
  std::string points_path;
  std::string method = "moments";
  std::string name;
  std::string table_id;
};

std::string csv_field(const std::string& v) {
  if (v.find_first_of(",\"\n") == std::string::npos) return v;
  std::string out = "\"";
  for (char c : v) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string csv_value(const json& v) {
  if (v.is_string()) return csv_field(v.get<std::string>());
  return csv_field(v.dump());
}

// Objects print as one header line and one value line; arrays of objects as one line each.
void emit(const json& j, Format fmt, std::ostream& out) {
  if (fmt == Format::kJson) {
    out << j.dump(2) << '\n';
    return;
  }
  const auto rows = j.is_array() ? j : json::array({j});
  if (rows.empty()) return;
  std::string header;
  for (auto it = rows[0].begin(); it != rows[0].end(); ++it) {
    header += (header.empty() ? "" : ",") + csv_field(it.key());
  }
  out << header << '\n';
  for (const auto& row : rows) {
    std::string line;
    bool first = true;
    for (const auto& v : row) {
      line += (first ? "" : ",") + csv_value(v);
      first = false;
    }
    out << line << '\n';
  }
}

void deliver(const std::string& text, const Options& o, std::ostream& out) {
  if (o.out_path.empty()) {
    out << text;
  } else {
    write_text_file(o.out_path, text);
  }
}

json big(const BigInt& v) {
  if (v <= std::numeric_limits<std::int64_t>::max()) return v.convert_to<std::int64_t>();
  return v.str();
}

SearchConfig search_config(const Options& o) {
  SearchConfig cfg;
  cfg.symmetry_reduction = !o.no_symmetry;
  cfg.thread_count = std::max(1u, o.threads);
  cfg.node_budget = o.budget_nodes;
  if (o.budget_seconds) {
    if (*o.budget_seconds < 0) throw DomainError("--budget-seconds must be nonnegative");
    cfg.time_budget = std::chrono::milliseconds(std::llround(*o.budget_seconds * 1000.0));
  }
  return cfg;
}

std::optional<ResultCache> open_cache(const Options& o) {
  if (!o.cache_path.empty()) return ResultCache(o.cache_path);
  return ResultCache::from_environment();
}

json table_row_json(const TableReport& r, const TableRow& row, bool timing) {
  const auto param = r.kind == TableKind::kTau ? "t" : "s";
  json j;
  j["n"] = row.n;
  j[param] = r.parameter;
  j[std::string(to_string(r.kind))] = row.value;
  j["witness"] = row.witness.to_string();
  j["nodes"] = row.nodes;
  j["millis"] = timing ? row.millis : 0;
  j["exhaustive"] = row.exhaustive;
  return j;
}

std::string table_csv(const TableReport& r, bool timing) {
  std::ostringstream out;
  out << "n," << (r.kind == TableKind::kTau ? "t,tau" : "s,phi")
      << ",witness,nodes,millis,exhaustive\n";
  for (const auto& row : r.rows) {
    out << row.n << ',' << r.parameter << ',' << row.value << ','
        << csv_field(row.witness.to_string()) << ',' << row.nodes << ','
        << (timing ? row.millis : 0) << ',' << (row.exhaustive ? "true" : "false") << '\n';
  }
  return out.str();
}

json table_json(const TableReport& r, bool timing) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    auto j = table_row_json(r, row, timing);
    j["witness"] = subset_to_json(row.witness);
    rows.push_back(std::move(j));
  }
  return {{"kind", std::string(to_string(r.kind))},
          {"parameter", r.parameter},
          {"provenance", r.provenance},
          {"rows", std::move(rows)}};
}

bool table_complete(const TableReport& r) {
  return std::all_of(r.rows.begin(), r.rows.end(),
                     [](const TableRow& row) { return row.exhaustive; });
}

int cmd_sumset(const Options& o, Format fmt, std::ostream& out) {
  const auto group = GroupSpec::parse(o.group);
  const auto a = Subset::parse(group, o.set);
  if (o.h < 0) throw DomainError("--h must be nonnegative");
  const auto table = o.cumulative ? cumulative_sumset(a, o.h) : signed_sumset(a, o.h);
  emit({{"group", group.to_string()},
        {"set", subset_to_json(a)},
        {"h", o.h},
        {"cumulative", o.cumulative},
        {"size", table.count()},
        {"elements", elements_to_json(group, table)}},
       fmt, out);
  return kOk;
}

int cmd_independent(const Options& o, Format fmt, std::ostream& out) {
  const auto a = Subset::parse(GroupSpec::parse(o.group), o.set);
  if (o.t < 1) throw DomainError("--t must be at least 1");
  const bool ok = is_t_independent(a, o.t);
  emit({{"independent", ok}}, fmt, out);
  return ok ? kOk : kVerificationFalse;
}

int cmd_spanning(const Options& o, Format fmt, std::ostream& out) {
  const auto a = Subset::parse(GroupSpec::parse(o.group), o.set);
  if (o.s < 0) throw DomainError("--s must be nonnegative");
  const bool ok = is_s_spanning(a, o.s);
  emit({{"spanning", ok}}, fmt, out);
  return ok ? kOk : kVerificationFalse;
}

int cmd_extremal(const Options& o, Format fmt, std::ostream& out, TableKind kind) {
  const auto group = GroupSpec::parse(o.group);
  auto cache = open_cache(o);
  auto* cache_ptr = cache ? &*cache : nullptr;
  const auto cfg = search_config(o);
  const auto r = kind == TableKind::kTau ? cached_tau(group, o.t, cfg, cache_ptr)
                                         : cached_phi(group, o.s, cfg, cache_ptr);
  json j;
  j["group"] = group.to_string();
  if (kind == TableKind::kTau) {
    j["t"] = o.t;
    j["tau"] = r.value;
  } else {
    j["s"] = o.s;
    j["phi"] = r.value;
  }
  j["witness"] = fmt == Format::kJson ? subset_to_json(r.witness) : json(r.witness.to_string());
  j["exhaustive"] = r.exhaustive;
  j["nodes"] = r.nodes_explored;
  j["millis"] = o.no_timing ? 0 : r.elapsed.count();
  emit(j, fmt, out);
  return r.exhaustive ? kOk : kBudgetExhausted;
}

int cmd_table(const Options& o, Format fmt, std::ostream& out, TableKind kind) {
  auto cache = open_cache(o);
  const auto report = compute_table(kind, kind == TableKind::kTau ? o.t : o.s, o.n_from, o.n_to,
                                    search_config(o), cache ? &*cache : nullptr);
  for (const auto& row : report.rows) {
    if (!row.witness_verified) {
      throw InternalInconsistencyError("witness for n=" + std::to_string(row.n) +
                                       " failed re-verification");
    }
  }
  const bool timing = !o.no_timing;
  deliver(fmt == Format::kCsv ? table_csv(report, timing) : table_json(report, timing).dump(2) + "\n",
          o, out);
  return table_complete(report) ? kOk : kBudgetExhausted;
}

json perfect_sets_json(const std::vector<PerfectSet>& sets) {
  json arr = json::array();
  for (const auto& p : sets) {
    arr.push_back({{"group", p.group.to_string()}, {"set", subset_to_json(p.set)}});
  }
  return arr;
}

int cmd_perfect(const Options& o, Format fmt, std::ostream& out) {
  const auto r = find_perfect_sets(o.m, o.s, search_config(o));
  if (fmt == Format::kCsv) {
    json rows = json::array();
    for (const auto& p : r.sets) {
      rows.push_back({{"m", r.m}, {"s", r.s}, {"group", p.group.to_string()},
                      {"set", p.set.to_string()}});
    }
    out << "m,s,group,set\n";
    for (const auto& row : rows) {
      out << row["m"] << ',' << row["s"] << ',' << csv_value(row["group"]) << ','
          << csv_value(row["set"]) << '\n';
    }
  } else {
    json groups = json::array();
    for (const auto& g : r.groups_searched) groups.push_back(g.to_string());
    emit({{"m", r.m},
          {"s", r.s},
          {"order", r.order},
          {"groups_searched", std::move(groups)},
          {"sets", perfect_sets_json(r.sets)},
          {"exhaustive", r.exhaustive},
          {"nodes", r.nodes_explored}},
         fmt, out);
  }
  return r.exhaustive ? kOk : kBudgetExhausted;
}

int cmd_probe(const Options& o, Format fmt, std::ostream& out) {
  const auto r = conjecture_probe_perfect(o.max_m, o.max_s, o.order_cap, search_config(o));
  json cells = json::array();
  bool exhaustive = true;
  for (const auto& c : r.cells) {
    json cell = {{"m", c.m}, {"s", c.s}, {"order", c.order}, {"searched", c.searched}};
    if (c.searched) {
      cell["exhaustive"] = c.exhaustive;
      cell["found"] = c.found.size();
      exhaustive = exhaustive && c.exhaustive;
      if (fmt == Format::kJson) cell["sets"] = perfect_sets_json(c.found);
    }
    cells.push_back(std::move(cell));
  }
  if (fmt == Format::kCsv) {
    out << "m,s,order,searched,exhaustive,found\n";
    for (const auto& c : cells) {
      out << c["m"] << ',' << c["s"] << ',' << c["order"] << ',' << c["searched"] << ','
          << c.value("exhaustive", false) << ',' << c.value("found", 0) << '\n';
    }
  } else {
    emit({{"order_cap", r.order_cap}, {"cells", std::move(cells)}}, fmt, out);
  }
  return exhaustive ? kOk : kBudgetExhausted;
}

int cmd_bounds(const Options& o, Format fmt, std::ostream& out) {
  json j = {{"what", o.what}};
  if (o.what == "tau-closed") {
    const auto group = GroupSpec::parse(o.group);
    j["group"] = group.to_string();
    j["t"] = o.t;
    j["value"] = tau_closed(group, o.t);
  } else if (o.what == "phi-closed") {
    const auto group = GroupSpec::parse(o.group);
    j["group"] = group.to_string();
    j["value"] = phi_closed(group);
  } else if (o.what == "tau3") {
    const auto r = tau3_cyclic(o.n);
    j["n"] = o.n;
    j["numerator"] = r.num;
    j["denominator"] = r.den;
    j["value"] = r.to_double();
  } else if (o.what == "delannoy") {
    j["m"] = o.m;
    j["s"] = o.s;
    j["value"] = big(delannoy(o.m, o.s));
  } else if (o.what == "norm-count") {
    j["m"] = o.m;
    j["h"] = o.h;
    j["value"] = big(exact_norm_count(o.m, o.h));
  } else if (o.what == "delsarte") {
    j["d"] = o.d;
    j["k"] = o.k;
    j["value"] = delsarte_A(o.d, o.k);
  } else if (o.what == "harm-dim") {
    j["d"] = o.d;
    j["k"] = o.k;
    j["value"] = dim_harm(o.d, o.k);
  } else if (o.what == "two-distance") {
    const auto b = two_distance_bounds(o.d);
    j["d"] = o.d;
    j["n_d"] = b.n_d;
    j["t_d"] = b.t_d;
  } else if (o.what == "design3-interval") {
    const auto iv = design3_nonexistence_interval(o.d);
    j["d"] = o.d;
    j["lower"] = iv.lower;
    j["upper"] = iv.upper;
    j["excluded_odd"] = design3_excluded_odd_sizes(o.d);
  } else if (o.what == "tau-asymptotic") {
    const auto b = tau_asymptotic_bounds(o.n, o.t, o.eps);
    j["n"] = o.n;
    j["t"] = o.t;
    j["lower"] = b.lower;
    j["upper"] = b.upper;
  } else if (o.what == "phi2-asymptotic") {
    const auto b = phi2_asymptotic_bounds(o.n, o.eps, o.delta);
    j["n"] = o.n;
    j["lower"] = b.lower;
    j["upper"] = b.upper;
  } else {
    throw ParseError("unknown --what", o.what);
  }
  if (fmt == Format::kCsv && j.contains("excluded_odd")) {
    std::string joined;
    for (const auto& v : j["excluded_odd"]) joined += (joined.empty() ? "" : " ") + v.dump();
    j["excluded_odd"] = joined;
  }
  emit(j, fmt, out);
  return kOk;
}

double tolerance_of(const Options& o) { return o.tolerance.value_or(sphere::kDefaultTolerance); }

int cmd_design_build(const Options& o, Format fmt, std::ostream& out) {
  const auto a = Subset::parse(GroupSpec::cyclic(o.size_n), o.set);
  const auto x = sphere::construct_XAN<double>(a, tolerance_of(o));
  if (fmt == Format::kCsv) {
    std::ostringstream text;
    text.precision(17);
    for (Eigen::Index j = 0; j < x.size(); ++j) {
      for (Eigen::Index i = 0; i < x.points().rows(); ++i) {
        text << (i ? "," : "") << x.points()(i, j);
      }
      text << '\n';
    }
    deliver(text.str(), o, out);
  } else {
    deliver(point_set_to_json(x).dump(2) + "\n", o, out);
  }
  return kOk;
}

int cmd_design_verify(const Options& o, Format fmt, std::ostream& out) {
  const auto x = read_point_file(o.points_path, o.tolerance);
  if (o.t < 0) throw DomainError("--t must be nonnegative");
  sphere::DesignCheck<double> check;
  if (o.method == "moments") {
    check = sphere::is_t_design_moments(x, o.t);
  } else if (o.method == "harmonic") {
    check = sphere::is_t_design_harmonic(x, o.t);
  } else {
    throw ParseError("--method must be moments or harmonic", o.method);
  }
  emit({{"design", check.passed},
        {"t", o.t},
        {"method", o.method},
        {"max_residual", check.max_residual},
        {"tolerance", x.tolerance()}},
       fmt, out);
  return check.passed ? kOk : kVerificationFalse;
}

int cmd_distances(const Options& o, Format fmt, std::ostream& out) {
  const auto x = read_point_file(o.points_path, o.tolerance);
  const auto spec = sphere::distance_spectrum(x);
  json j = {{"size", x.size()}, {"s", spec.s()}};
  if (fmt == Format::kCsv) {
    std::ostringstream joined;
    joined.precision(17);
    for (std::size_t i = 0; i < spec.distances.size(); ++i) {
      joined << (i ? " " : "") << spec.distances[i];
    }
    j["distances"] = joined.str();
  } else {
    j["distances"] = spec.distances;
  }
  emit(j, fmt, out);
  return kOk;
}

int cmd_known(const Options& o, std::ostream& out) {
  auto x = sphere::known_configuration(o.name);
  if (o.tolerance) x = x.with_tolerance(*o.tolerance);
  deliver(point_set_to_json(x).dump(2) + "\n", o, out);
  return kOk;
}

int cmd_reproduce(const Options& o, Format fmt, std::ostream& out) {
  auto cache = open_cache(o);
  const auto rep = reproduce(o.table_id, search_config(o), cache ? &*cache : nullptr);
  const bool timing = !o.no_timing;
  if (fmt == Format::kCsv) {
    deliver(table_csv(rep.table, timing), o, out);
  } else {
    json mismatches = json::array();
    for (const auto& mm : rep.mismatches) {
      mismatches.push_back({{"n", mm.n}, {"expected", mm.expected}, {"computed", mm.computed}});
    }
    json j = {{"id", rep.id},
              {"reproduced", rep.reproduced()},
              {"complete", rep.complete},
              {"mismatches", std::move(mismatches)},
              {"excluded", rep.excluded},
              {"table", table_json(rep.table, timing)}};
    deliver(j.dump(2) + "\n", o, out);
  }
  if (!rep.complete) return kBudgetExhausted;
  return rep.mismatches.empty() ? kOk : kVerificationFalse;
}

void add_search_flags(CLI::App* sub, Options& o) {
  sub->add_flag("--no-symmetry", o.no_symmetry, "Disable symmetry reduction");
  sub->add_option("--threads", o.threads, "Worker threads")->check(CLI::PositiveNumber);
  sub->add_option("--budget-nodes", o.budget_nodes, "Node budget");
  sub->add_option("--budget-seconds", o.budget_seconds, "Wall-clock budget in seconds");
  sub->add_option("--cache", o.cache_path, "JSON-lines result cache")
      ->envname(kCacheEnvVar);
  sub->add_flag("--no-timing", o.no_timing, "Report millis as 0 for byte-stable output");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Signed sumsets in finite abelian groups and spherical designs", "sumsphere"};
  app.set_help_flag("--help", "Print help and exit");
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_option("--tolerance", o.tolerance, "Numerical tolerance for sphere commands");
  app.fallthrough();

  auto* sumset = app.add_subcommand("sumset", "Signed sumset h(+-)A");
  sumset->add_option("--group", o.group, "Group literal, e.g. Z25 or Z2xZ4")->required();
  sumset->add_option("--set", o.set, "Subset literal, e.g. 1,4 or 1,0;0,1")->required();
  sumset->add_option("--h", o.h, "Norm h")->required();
  sumset->add_flag("--cumulative", o.cumulative, "Union over norms 0..h");

  auto* independent = app.add_subcommand("independent", "Test t-independence");
  independent->add_option("--group", o.group)->required();
  independent->add_option("--set", o.set)->required();
  independent->add_option("--t", o.t)->required();

  auto* spanning = app.add_subcommand("spanning", "Test s-spanning");
  spanning->add_option("--group", o.group)->required();
  spanning->add_option("--set", o.set)->required();
  spanning->add_option("--s", o.s)->required();

  auto* tau_cmd = app.add_subcommand("tau", "Largest t-independent set");
  tau_cmd->add_option("--group", o.group)->required();
  tau_cmd->add_option("--t", o.t)->required();
  add_search_flags(tau_cmd, o);

  auto* phi_cmd = app.add_subcommand("phi", "Smallest s-spanning set");
  phi_cmd->add_option("--group", o.group)->required();
  phi_cmd->add_option("--s", o.s)->required();
  add_search_flags(phi_cmd, o);

  auto* tau_table = app.add_subcommand("tau-table", "tau(Z_n, t) over a range of n");
  tau_table->add_option("--t", o.t)->required();
  tau_table->add_option("--n-from", o.n_from)->required();
  tau_table->add_option("--n-to", o.n_to)->required();
  tau_table->add_option("--out", o.out_path, "Write to a file instead of stdout");
  add_search_flags(tau_table, o);

  auto* phi_table = app.add_subcommand("phi-table", "phi(Z_n, s) over a range of n");
  phi_table->add_option("--s", o.s)->required();
  phi_table->add_option("--n-from", o.n_from)->required();
  phi_table->add_option("--n-to", o.n_to)->required();
  phi_table->add_option("--out", o.out_path);
  add_search_flags(phi_table, o);

  auto* perfect = app.add_subcommand("perfect", "Perfect m-sets for norm s");
  perfect->add_option("--m", o.m)->required();
  perfect->add_option("--s", o.s)->required();
  add_search_flags(perfect, o);

  auto* probe = app.add_subcommand("probe", "Search for perfect sets with m >= 3, s >= 2");
  probe->add_option("--max-m", o.max_m)->required();
  probe->add_option("--max-s", o.max_s)->required();
  probe->add_option("--order-cap", o.order_cap)->required();
  add_search_flags(probe, o);

  auto* bounds = app.add_subcommand("bounds", "Closed forms and bounds");
  bounds
      ->add_option("--what", o.what,
                   "tau-closed|phi-closed|tau3|delannoy|norm-count|delsarte|harm-dim|"
                   "two-distance|design3-interval|tau-asymptotic|phi2-asymptotic")
      ->required();
  bounds->add_option("--group", o.group);
  bounds->add_option("--n", o.n);
  bounds->add_option("--m", o.m);
  bounds->add_option("--s", o.s);
  bounds->add_option("--t", o.t);
  bounds->add_option("--h", o.h);
  bounds->add_option("--d", o.d);
  bounds->add_option("--k", o.k);
  bounds->add_option("--eps", o.eps);
  bounds->add_option("--delta", o.delta);

  auto* design_build = app.add_subcommand("design-build", "Build X(A, N) on S^(2m-1)");
  design_build->add_option("--A,--set", o.set, "Residues a_1,...,a_m")->required();
  design_build->add_option("--N", o.size_n, "Number of points")->required();
  design_build->add_option("--out", o.out_path);

  auto* design_verify = app.add_subcommand("design-verify", "Test the spherical t-design property");
  design_verify->add_option("--points", o.points_path)->required();
  design_verify->add_option("--t", o.t)->required();
  design_verify->add_option("--method", o.method)->check(CLI::IsMember({"moments", "harmonic"}));

  auto* distances = app.add_subcommand("distances", "Distinct pairwise distances");
  distances->add_option("--points", o.points_path)->required();

  auto* known = app.add_subcommand("known", "Classical configurations");
  known
      ->add_option("--name", o.name,
                   "tetrahedron|octahedron|cube|icosahedron|dodecahedron|ngon(N)|simplex(d)")
      ->required();
  known->add_option("--out", o.out_path);

  auto* repro = app.add_subcommand("reproduce", "Recompute a bundled table and diff it");
  repro->add_option("id", o.table_id, "tau3-formula|tau4|tau5|tau6|phi2")->required();
  repro->add_option("--out", o.out_path);
  add_search_flags(repro, o);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  const auto fmt = o.format == "csv" ? Format::kCsv : Format::kJson;
  try {
    if (sumset->parsed()) return cmd_sumset(o, fmt, out);
    if (independent->parsed()) return cmd_independent(o, fmt, out);
    if (spanning->parsed()) return cmd_spanning(o, fmt, out);
    if (tau_cmd->parsed()) return cmd_extremal(o, fmt, out, TableKind::kTau);
    if (phi_cmd->parsed()) return cmd_extremal(o, fmt, out, TableKind::kPhi);
    if (tau_table->parsed()) return cmd_table(o, fmt, out, TableKind::kTau);
    if (phi_table->parsed()) return cmd_table(o, fmt, out, TableKind::kPhi);
    if (perfect->parsed()) return cmd_perfect(o, fmt, out);
    if (probe->parsed()) return cmd_probe(o, fmt, out);
    if (bounds->parsed()) return cmd_bounds(o, fmt, out);
    if (design_build->parsed()) return cmd_design_build(o, fmt, out);
    if (design_verify->parsed()) return cmd_design_verify(o, fmt, out);
    if (distances->parsed()) return cmd_distances(o, fmt, out);
    if (known->parsed()) return cmd_known(o, out);
    if (repro->parsed()) return cmd_reproduce(o, fmt, out);
  } catch (const std::logic_error& e) {
    // ParseError, DomainError, GroupMismatchError and UnsupportedError all land here.
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const InternalInconsistencyError& e) {
    err << "internal error: " << e.what() << '\n';
    return kVerificationFalse;
  }
  return kUsageError;
}

}  // namespace sumsphere::cli
