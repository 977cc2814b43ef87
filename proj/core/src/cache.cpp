#include "tasep/cache.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace tasep::cache {

std::uint64_t fnv1a(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string make_key(std::string_view command, std::string_view params, std::string_view version) {
  std::string text;
  text.append(command).push_back('\x1f');
  text.append(params).push_back('\x1f');
  text.append(version);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(text)));
  return buf;
}

ResultCache::ResultCache(std::filesystem::path dir, double audit_rate, std::uint64_t audit_seed)
    : dir_(std::move(dir)), audit_rate_(audit_rate), rng_(audit_seed) {
  std::filesystem::create_directories(dir_);
}

std::optional<std::filesystem::path> ResultCache::dir_from_env() {
  const char* v = std::getenv(kCacheDirEnv);
  if (v == nullptr || *v == '\0') return std::nullopt;
  return std::filesystem::path(v);
}

std::optional<std::string> ResultCache::load(const std::string& key) const {
  std::ifstream in(dir_ / (key + ".json"), std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void ResultCache::store(const std::string& key, const std::string& value) const {
  // write then rename, so readers never see a partial file
  const auto target = dir_ / (key + ".json");
  const auto tmp = dir_ / (key + ".tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << value;
  }
  std::filesystem::rename(tmp, target);
}

std::string ResultCache::get_or_compute(std::string_view command, std::string_view params,
                                        const std::function<std::string()>& compute) {
  const std::string key = make_key(command, params);
  if (auto hit = load(key)) {
    bool audit = false;
    {
      std::lock_guard lock(mutex_);
      ++stats_.hits;
      audit = std::bernoulli_distribution(audit_rate_)(rng_);
      if (audit) ++stats_.audits;
    }
    if (!audit) return *hit;
    std::string fresh = compute();
    if (fresh != *hit) {
      {
        std::lock_guard lock(mutex_);
        ++stats_.audit_failures;
      }
      store(key, fresh);
    }
    return fresh;
  }
  {
    std::lock_guard lock(mutex_);
    ++stats_.misses;
  }
  std::string value = compute();
  store(key, value);
  return value;
}

CacheStats ResultCache::stats() const {
  std::lock_guard lock(mutex_);
  return stats_;
}

}  // namespace tasep::cache
