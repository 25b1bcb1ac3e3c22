#include "pgonal/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <system_error>
#include <unistd.h>

namespace pgonal {

namespace fs = std::filesystem;

ResultCache::ResultCache(fs::path dir) : dir_(std::move(dir)) {}

fs::path ResultCache::default_dir() {
  if (const char* env = std::getenv("PGS_CACHE_DIR"); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return fs::path(xdg) / "pgonal-strata";
  if (const char* home = std::getenv("HOME"); home && *home) return fs::path(home) / ".cache" / "pgonal-strata";
  return fs::temp_directory_path() / "pgonal-strata";
}

fs::path ResultCache::file_for(Int p, Int k) const {
  return dir_ / ("p" + std::to_string(p) + "-k" + std::to_string(k) + ".jsonl");
}

std::optional<ordered_json> ResultCache::lookup(Int p, Int k, const std::string& key) const {
  std::ifstream in(file_for(p, k));
  if (!in) return std::nullopt;
  std::optional<ordered_json> found;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto entry = ordered_json::parse(line, nullptr, false);
    if (entry.is_discarded() || !entry.contains("key")) continue;  // torn or foreign line
    if (entry["key"] == key) found = entry["value"];
  }
  return found;
}

void ResultCache::store(Int p, Int k, const std::string& key, const ordered_json& value) const {
  fs::create_directories(dir_);
  const fs::path target = file_for(p, k);
  std::string existing;
  if (std::ifstream in(target); in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    existing = ss.str();
    if (!existing.empty() && existing.back() != '\n') existing += '\n';
  }
  const fs::path tmp = target.string() + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    ordered_json line{{"key", key}, {"value", value}};
    out << existing << line.dump() << '\n';
    if (!out.flush()) throw std::runtime_error("cannot write cache file " + tmp.string());
  }
  fs::rename(tmp, target);
}

std::string cache_key(const std::string& command, Int p, Int k, const std::string& exponents,
                      const std::string& flags) {
  return "v" + std::to_string(kSchemaVersion) + "|" + command + "|p=" + std::to_string(p) +
         "|k=" + std::to_string(k) + "|exp=" + exponents + "|" + flags;
}

}  // namespace pgonal
