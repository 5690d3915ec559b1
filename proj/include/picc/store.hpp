#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "picc/catalog.hpp"
#include "picc/limits.hpp"
#include "picc/pi_analysis.hpp"
#include "picc/subgroup_engine.hpp"
#include "picc/theorem_suite.hpp"

namespace picc {

inline constexpr int schema_version = 1;
inline constexpr const char* tool_version = "1.0.0";

struct Config {
  Limits limits;
  HallBudget hall;
  unsigned workers = 1;
  std::string cache_dir;  // empty: no cache
  std::string format = "json";
  std::uint64_t seed = 1;
  std::uint64_t max_order = 2'000;  // census bound
  bool timing = false;

  // Throws InvalidArgument on a non-positive cap or unknown format.
  void validate() const;
  nlohmann::json to_json() const;
  // Missing fields keep their defaults.
  static Config from_json(const nlohmann::json& j);
};

// --- groups ------------------------------------------------------------------

struct NamedGroup {
  std::string name;
  PermGroup group;
};

// A catalog name ("A5 x C3") or a GroupFile path.
NamedGroup group_from_name(const std::string& name, const Limits& limits);
NamedGroup group_from_file(const std::string& path, const Limits& limits);
// "default" is the only census selector.
std::vector<NamedGroup> census_groups(const std::string& selector, const Config& config);

// Degree, then the generator image sequences sorted lexicographically.
// Independent of generator order; depends on the labelling of points.
std::string canonical_group_key(const PermGroup& g);

// --- cache -------------------------------------------------------------------

// One JSON file per key under `dir`, named by a hash of the key, holding
// {version, key, value, checksum}. Wrong version, wrong key or a checksum
// mismatch read as a miss. Writes go through a temporary file and a rename,
// so readers never see a partial entry.
class Cache {
 public:
  explicit Cache(std::filesystem::path dir, std::string version = tool_version);

  std::optional<nlohmann::json> get(const std::string& key) const;
  void put(const std::string& key, const nlohmann::json& value) const;
  std::filesystem::path path_for(const std::string& key) const;
  std::size_t size() const;
  void clear() const;

 private:
  std::filesystem::path dir_;
  std::string version_;
};

std::uint32_t crc32(std::string_view bytes);

// --- commands ----------------------------------------------------------------

// Document header: schema_version, tool, version, kind, config.
nlohmann::json report_header(const std::string& kind, const Config& config);

struct AnalyzeStats {
  std::uint64_t cache_hits = 0;
  std::uint64_t cache_misses = 0;
  std::uint64_t cache_mismatches = 0;
};

// PiProfiles for each pi (all non-empty subsets of pi(G) when none given),
// the class table summary and Sylow orders. With verify_cache, cached
// profiles are recomputed and compared.
nlohmann::json analyze_groups(const std::vector<NamedGroup>& groups,
                              const std::vector<PiSet>& pis, const Config& config,
                              bool verify_cache, AnalyzeStats* stats = nullptr);

nlohmann::json hall_report(const NamedGroup& g, const PiSet& pi, const Config& config);

nlohmann::json census_report(const Config& config);

struct VerifyOutcome {
  nlohmann::json report;
  std::uint64_t fails = 0;
  std::vector<std::filesystem::path> bundles;
};

// Runs the suites; every fail verdict gets a replay bundle under bundle_dir.
VerifyOutcome verify_groups(const std::vector<NamedGroup>& groups,
                            const std::vector<std::string>& suites,
                            const SuiteConfig& suite_config, const Config& config,
                            const std::optional<PiSet>& pi,
                            const std::filesystem::path& bundle_dir);

// Directory with group.txt, pi, config.json and verdict.json.
std::filesystem::path write_replay_bundle(const std::filesystem::path& parent,
                                          const PermGroup& group, const Verdict& v,
                                          const Config& config);

// json, csv or text.
std::string render(const nlohmann::json& doc, const std::string& format);

}  // namespace picc
