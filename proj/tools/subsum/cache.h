#pragma once

#include <filesystem>
#include <mutex>
#include <optional>
#include <string>

#include "subsum/store.h"

namespace subsum::cli {

inline constexpr const char* kCacheVersion = "subsum-cache-1";
inline constexpr const char* kCacheDirEnv = "SUBSUM_CACHE_DIR";

std::string sha256_hex(const std::string& data);

/// $SUBSUM_CACHE_DIR, else $XDG_CACHE_HOME/subsum, else $HOME/.cache/subsum.
std::filesystem::path default_cache_dir();

/// One JSON file per key. Entries carry a version tag and a SHA-256 of the
/// payload; anything that does not validate is treated as a miss. Writes go
/// through a temporary file and a rename, serialized by one mutex.
class DiskStore : public PolyStore {
 public:
  explicit DiskStore(std::filesystem::path dir);

  std::optional<DensePoly> load(const CacheKey& key) override;
  void save(const CacheKey& key, const DensePoly& value) override;

  std::filesystem::path path_for(const CacheKey& key) const;
  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path dir_;
  std::mutex write_mutex_;
};

}  // namespace subsum::cli
