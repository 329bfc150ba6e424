#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>

#include "jacring/serialize.hpp"

namespace jacring {

/// JSON values on disk at <root>/<kind>/<key[0:2]>/<key>.json.
/// Writes go through a unique temporary file and an atomic rename, so
/// concurrent writers of distinct keys never observe partial files.
class DiskCache {
 public:
  explicit DiskCache(std::filesystem::path root);

  const std::filesystem::path& root() const { return root_; }
  std::optional<Json> get(const std::string& kind, const std::string& key) const;
  void put(const std::string& kind, const std::string& key, const Json& value) const;

  /// $JACRING_CACHE_DIR when set.
  static std::optional<std::filesystem::path> root_from_env();

 private:
  std::filesystem::path path_for(const std::string& kind, const std::string& key) const;
  std::filesystem::path root_;
};

/// Process-wide cache picked up by new quotient objects (null by default).
std::shared_ptr<DiskCache> default_cache();
void set_default_cache(std::shared_ptr<DiskCache> cache);

}  // namespace jacring
