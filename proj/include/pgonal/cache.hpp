#pragma once

// Append-only on-disk result cache: one JSON-lines file per (p, k), each line
// {"key": ..., "value": ...}. Writes go through a temporary file and an
// atomic rename.

#include <filesystem>
#include <optional>
#include <string>

#include "pgonal/record.hpp"

namespace pgonal {

class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir);

  /// $PGS_CACHE_DIR, else $XDG_CACHE_HOME/pgonal-strata, else ~/.cache/pgonal-strata.
  static std::filesystem::path default_dir();

  /// Most recent value stored under `key`.
  std::optional<ordered_json> lookup(Int p, Int k, const std::string& key) const;
  void store(Int p, Int k, const std::string& key, const ordered_json& value) const;

  std::filesystem::path file_for(Int p, Int k) const;
  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path dir_;
};

/// Key covering schema version, command, parameters and flags.
std::string cache_key(const std::string& command, Int p, Int k, const std::string& exponents,
                      const std::string& flags);

}  // namespace pgonal
