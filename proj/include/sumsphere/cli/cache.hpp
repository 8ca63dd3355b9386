#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "sumsphere/search.hpp"

namespace sumsphere::cli {

/// Name of the environment variable holding the default cache path.
inline constexpr const char* kCacheEnvVar = "SUMSPHERE_CACHE";

struct CacheKey {
  std::string group;  // GroupSpec literal, e.g. "Z25"
  std::string kind;   // "tau" or "phi"
  int parameter = 0;  // t or s

  friend bool operator==(const CacheKey&, const CacheKey&) = default;
};

struct CacheEntry {
  CacheKey key;
  std::int64_t value = 0;
  std::string witness;  // Subset literal
  std::string timestamp;
};

/// Append-only JSON-lines store of exhaustive search results. Entries are re-verified when
/// read; malformed lines and entries whose witness fails verification are ignored, so the
/// caller recomputes instead of trusting them.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path path) : path_(std::move(path)) {}

  /// From the environment variable, if set and non-empty.
  static std::optional<ResultCache> from_environment();

  const std::filesystem::path& path() const noexcept { return path_; }

  std::optional<SearchResult> lookup(const GroupSpec& group, std::string_view kind,
                                     int parameter) const;
  /// Only exhaustive results are stored.
  void store(const GroupSpec& group, std::string_view kind, int parameter,
             const SearchResult& result);

 private:
  std::filesystem::path path_;
};

/// Runs tau/phi through the cache when one is given.
SearchResult cached_tau(const GroupSpec& group, int t, const SearchConfig& cfg,
                        ResultCache* cache);
SearchResult cached_phi(const GroupSpec& group, int s, const SearchConfig& cfg,
                        ResultCache* cache);

}  // namespace sumsphere::cli
