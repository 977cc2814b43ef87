#pragma once

// On-disk result cache keyed by (command, parameters, code version).
// A fraction of hits is recomputed and compared with the stored value.

#include <cstdint>
#include <filesystem>
#include <functional>
#include <mutex>
#include <optional>
#include <random>
#include <string>

namespace tasep::cache {

inline constexpr const char* kCodeVersion = "tasepkit-0.1.0";
inline constexpr const char* kCacheDirEnv = "TASEPKIT_CACHE_DIR";

std::uint64_t fnv1a(std::string_view data);

/// Hex digest of command, canonical parameter text and code version.
std::string make_key(std::string_view command, std::string_view params, std::string_view version = kCodeVersion);

struct CacheStats {
  long hits = 0;
  long misses = 0;
  long audits = 0;
  long audit_failures = 0;
};

class ResultCache {
 public:
  /// Audits are drawn from a generator seeded with `audit_seed`.
  explicit ResultCache(std::filesystem::path dir, double audit_rate = 0.05, std::uint64_t audit_seed = 0);

  /// Directory from the environment, if set and non-empty.
  static std::optional<std::filesystem::path> dir_from_env();

  const std::filesystem::path& dir() const { return dir_; }

  std::optional<std::string> load(const std::string& key) const;
  void store(const std::string& key, const std::string& value) const;

  /// Returns the cached value or computes and stores it. On an audited hit
  /// the value is recomputed; a mismatch is counted, the fresh value is
  /// stored and returned.
  std::string get_or_compute(std::string_view command, std::string_view params,
                             const std::function<std::string()>& compute);

  CacheStats stats() const;

 private:
  std::filesystem::path dir_;
  double audit_rate_;
  mutable std::mutex mutex_;
  std::mt19937_64 rng_;
  CacheStats stats_;
};

}  // namespace tasep::cache
