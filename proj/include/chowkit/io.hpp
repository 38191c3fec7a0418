#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "chowkit/certificates.hpp"
#include "chowkit/chow.hpp"
#include "chowkit/intclosure.hpp"
#include "chowkit/loja.hpp"
#include "json.hpp"

namespace chowkit {

using json = nlohmann::json;

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode { kExitOk = 0, kExitError = 1, kExitNoCertificate = 2, kExitUnknown = 3 };

json to_json(const Polynomial& f);
json to_json(const Ideal& I);  // generators as given
json to_json(const Cycle& Z);
json to_json(const NullResult& r);
json to_json(const BezoutCertificate& c);
json to_json(const ClosureVerdict& v);
json to_json(const ExponentEstimate& e);

// 64-bit FNV-1a, as 16 hex digits; stable across platforms and runs.
std::string stable_hash(const std::string& data);

// Bases and run results under a directory, keyed by hashed input. Entries
// that fail to parse or carry another version are deleted on sight.
class FileCache {
 public:
  FileCache(std::string dir, std::string version = kVersion);
  std::optional<json> load(const std::string& kind, const std::string& key);
  void save(const std::string& kind, const std::string& key, const json& value);
  const std::string& dir() const { return dir_; }
  int evictions() const { return evictions_; }

 private:
  std::string path(const std::string& kind, const std::string& key) const;
  std::string dir_, version_;
  int evictions_ = 0;
};

// Groebner bases persisted through a FileCache.
class FileBasisStore : public BasisStore {
 public:
  explicit FileBasisStore(std::shared_ptr<FileCache> cache) : cache_(std::move(cache)) {}
  bool load(const std::string& key, const RingPtr& ring, std::vector<Polynomial>& out) override;
  void save(const std::string& key, const std::vector<Polynomial>& basis) override;

 private:
  std::shared_ptr<FileCache> cache_;
};

struct RunOptions {
  std::string subcommand;
  std::string scene_path;
  std::optional<std::string> scene_text;  // used instead of reading scene_path
  uint64_t seed = 1;
  int jobs = 1;
  std::optional<std::string> field;
  std::optional<std::string> cache_dir;  // falls back to CHOWKIT_CACHE_DIR
  bool no_cache = false;
  int shells = 6;
  int per_shell = 64;
  std::string suite = "paper";
  std::string scenes_dir = "scenes";
  std::string version = kVersion;
};

struct RunRecord {
  std::string version;
  std::string subcommand;
  std::string input_hash;
  uint64_t seed = 0;
  double wall_time = 0;
  bool cache_hit = false;
  int exit_code = kExitOk;
  json payload;
  json to_json() const;
};

// Never throws: failures come back as exit code 1 with an error payload
// {"error": {"code", "message", "line"?, "column"?}}.
RunRecord run_task(const RunOptions& opts);

}  // namespace chowkit
