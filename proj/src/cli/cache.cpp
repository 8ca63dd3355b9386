#include "sumsphere/cli/cache.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>

#include "json.hpp"
#include "sumsphere/sumset.hpp"

namespace sumsphere::cli {

namespace {

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

bool verifies(const Subset& w, std::string_view kind, int parameter) {
  if (kind == "tau") return is_t_independent(w, parameter);
  if (kind == "phi") return !w.empty() && is_s_spanning(w, parameter);
  return false;
}

}  // namespace

std::optional<ResultCache> ResultCache::from_environment() {
  const char* path = std::getenv(kCacheEnvVar);
  if (path == nullptr || *path == '\0') return std::nullopt;
  return ResultCache(path);
}

std::optional<SearchResult> ResultCache::lookup(const GroupSpec& group, std::string_view kind,
                                                int parameter) const {
  std::ifstream in(path_);
  if (!in) return std::nullopt;
  const auto group_literal = group.to_string();
  std::optional<SearchResult> hit;
  for (std::string line; std::getline(in, line);) {
    const auto j = nlohmann::json::parse(line, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded() || !j.is_object()) continue;
    try {
      if (j.at("group").get<std::string>() != group_literal ||
          j.at("kind").get<std::string>() != kind || j.at("parameter").get<int>() != parameter) {
        continue;
      }
      auto witness = Subset::parse(group, j.at("witness").get<std::string>());
      const auto value = j.at("value").get<std::int64_t>();
      if (static_cast<std::int64_t>(witness.size()) != value) continue;
      if (!verifies(witness, kind, parameter)) continue;
      hit = SearchResult{value, std::move(witness), true, 0, std::chrono::milliseconds(0)};
    } catch (const std::exception&) {
      continue;
    }
  }
  return hit;
}

void ResultCache::store(const GroupSpec& group, std::string_view kind, int parameter,
                        const SearchResult& result) {
  if (!result.exhaustive) return;
  const nlohmann::json j = {{"group", group.to_string()},
                            {"kind", std::string(kind)},
                            {"parameter", parameter},
                            {"value", result.value},
                            {"witness", result.witness.to_string()},
                            {"timestamp", utc_timestamp()}};
  std::ofstream out(path_, std::ios::app);
  out << j.dump() << '\n';
}

SearchResult cached_tau(const GroupSpec& group, int t, const SearchConfig& cfg,
                        ResultCache* cache) {
  if (cache != nullptr) {
    if (auto hit = cache->lookup(group, "tau", t)) return *hit;
  }
  auto result = tau(group, t, cfg);
  if (cache != nullptr) cache->store(group, "tau", t, result);
  return result;
}

SearchResult cached_phi(const GroupSpec& group, int s, const SearchConfig& cfg,
                        ResultCache* cache) {
  if (cache != nullptr) {
    if (auto hit = cache->lookup(group, "phi", s)) return *hit;
  }
  auto result = phi(group, s, cfg);
  if (cache != nullptr) cache->store(group, "phi", s, result);
  return result;
}

}  // namespace sumsphere::cli
