#include "jacring/cache.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>
#include <unistd.h>

namespace jacring {

namespace fs = std::filesystem;

DiskCache::DiskCache(fs::path root) : root_(std::move(root)) { fs::create_directories(root_); }

fs::path DiskCache::path_for(const std::string& kind, const std::string& key) const {
  return root_ / kind / key.substr(0, 2) / (key + ".json");
}

std::optional<Json> DiskCache::get(const std::string& kind, const std::string& key) const {
  std::ifstream in(path_for(kind, key));
  if (!in) return std::nullopt;
  try {
    return Json::parse(in);
  } catch (const Json::parse_error&) {
    return std::nullopt;
  }
}

void DiskCache::put(const std::string& kind, const std::string& key, const Json& value) const {
  static std::atomic<unsigned long> counter{0};
  const fs::path target = path_for(kind, key);
  fs::create_directories(target.parent_path());
  std::ostringstream tag;
  tag << ".tmp." << ::getpid() << "." << std::hash<std::thread::id>{}(std::this_thread::get_id()) << "."
      << counter++;
  const fs::path tmp = target.string() + tag.str();
  {
    std::ofstream out(tmp);
    out << dump(value);
  }
  fs::rename(tmp, target);
}

std::optional<fs::path> DiskCache::root_from_env() {
  if (const char* v = std::getenv("JACRING_CACHE_DIR"); v && *v) return fs::path(v);
  return std::nullopt;
}

namespace {
std::mutex default_mutex;
std::shared_ptr<DiskCache> default_instance;
}  // namespace

std::shared_ptr<DiskCache> default_cache() {
  std::lock_guard lock(default_mutex);
  return default_instance;
}

void set_default_cache(std::shared_ptr<DiskCache> cache) {
  std::lock_guard lock(default_mutex);
  default_instance = std::move(cache);
}

}  // namespace jacring
