// picc: pi-class invariants of permutation groups.
//
//   picc analyze --group "D8 x C3" --pi 2
//   picc verify  --census default --suite all
//   picc hall    --group A5 --pi 3,5
//   picc census  --max-order 200 --format text
//   picc cache   --cache-dir DIR [--clear]

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "picc/errors.hpp"
#include "picc/store.hpp"

namespace {

using picc::Config;
using picc::NamedGroup;

struct Common {
  std::string config_file;
  std::string format;
  std::string cache_dir;
  std::uint64_t seed = 0;
  unsigned workers = 0;
  std::uint64_t max_order = 0;
  std::uint64_t budget = 0;
  std::uint64_t exhaustive_cap = 0;
  std::uint64_t subgroup_cap = 0;
  bool timing = false;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--config", c.config_file, "JSON config file");
  cmd->add_option("--format", c.format, "json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_option("--cache-dir", c.cache_dir, "invariant cache directory");
  cmd->add_option("--seed", c.seed, "random seed");
  cmd->add_option("--workers", c.workers, "worker threads");
  cmd->add_option("--max-order", c.max_order, "census order bound");
  cmd->add_option("--budget", c.budget, "Hall search attempts");
  cmd->add_option("--exhaustive-cap", c.exhaustive_cap,
                  "largest |G| for exhaustive Hall search");
  cmd->add_option("--subgroup-cap", c.subgroup_cap,
                  "largest |G| for subgroup enumeration");
  cmd->add_flag("--timing", c.timing, "include per-verdict timing");
}

Config make_config(const Common& c, CLI::App* cmd) {
  Config config;
  if (!c.config_file.empty()) {
    std::ifstream in(c.config_file);
    if (!in) throw picc::InvalidArgument("cannot read config " + c.config_file);
    config = Config::from_json(nlohmann::json::parse(in));
  }
  if (cmd->count("--format")) config.format = c.format;
  if (cmd->count("--cache-dir")) config.cache_dir = c.cache_dir;
  if (cmd->count("--seed")) config.seed = c.seed;
  if (cmd->count("--workers")) config.workers = c.workers;
  if (cmd->count("--max-order")) config.max_order = c.max_order;
  if (cmd->count("--budget")) config.hall.attempts = c.budget;
  if (cmd->count("--exhaustive-cap")) config.hall.exhaustive_cap = c.exhaustive_cap;
  if (cmd->count("--subgroup-cap")) config.limits.subgroup_cap = c.subgroup_cap;
  if (c.timing) config.timing = true;
  config.hall.seed = config.seed;
  config.validate();
  return config;
}

struct Source {
  std::vector<std::string> groups;
  std::vector<std::string> files;
  std::string census;
};

void add_source(CLI::App* cmd, Source& s, bool allow_census) {
  cmd->add_option("--group", s.groups, "catalog group, e.g. \"A5 x C3\"");
  cmd->add_option("--file", s.files, "GroupFile path");
  if (allow_census) cmd->add_option("--census", s.census, "census selector (default)");
}

std::vector<NamedGroup> load(const Source& s, const Config& config) {
  std::vector<NamedGroup> out;
  for (const auto& g : s.groups) out.push_back(picc::group_from_name(g, config.limits));
  for (const auto& f : s.files) out.push_back(picc::group_from_file(f, config.limits));
  if (!s.census.empty()) {
    auto c = picc::census_groups(s.census, config);
    out.insert(out.end(), std::make_move_iterator(c.begin()),
               std::make_move_iterator(c.end()));
  }
  if (out.empty()) throw picc::InvalidArgument("no group given (--group, --file or --census)");
  return out;
}

std::vector<std::string> split_list(const std::vector<std::string>& items) {
  std::vector<std::string> out;
  for (const auto& item : items) {
    std::size_t start = 0;
    while (start <= item.size()) {
      const std::size_t end = std::min(item.find(',', start), item.size());
      if (end > start) out.push_back(item.substr(start, end - start));
      start = end + 1;
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pi-class invariants of permutation groups"};
  app.require_subcommand(1);

  Common common;
  Source source;
  std::vector<std::string> pis;
  std::vector<std::string> suites{"all"};
  std::string expect;
  std::string bundle_dir = "picc-bundles";
  bool verify_cache = false;
  bool clear = false;

  auto* analyze = app.add_subcommand("analyze", "k_pi, |G|_pi and d_pi");
  add_common(analyze, common);
  add_source(analyze, source, true);
  analyze->add_option("--pi", pis, "prime set, e.g. 2,3 (repeatable)");
  analyze->add_flag("--verify-cache", verify_cache, "recompute cached values and compare");

  auto* verify = app.add_subcommand("verify", "run verification suites");
  add_common(verify, common);
  add_source(verify, source, true);
  verify->add_option("--pi", pis, "restrict pi-indexed suites to this prime set");
  verify->add_option("--suite", suites, "suite names, comma separated, or all");
  verify->add_option("--expect", expect, "expected d_pi for the expect suite, a/b");
  verify->add_option("--bundle-dir", bundle_dir, "where fail bundles are written");

  auto* hall = app.add_subcommand("hall", "search for a Hall pi-subgroup");
  add_common(hall, common);
  add_source(hall, source, false);
  hall->add_option("--pi", pis, "prime set")->required();

  auto* census = app.add_subcommand("census", "list the default census");
  add_common(census, common);

  auto* cache = app.add_subcommand("cache", "inspect or clear the invariant cache");
  add_common(cache, common);
  cache->add_flag("--clear", clear, "remove every entry");

  CLI11_PARSE(app, argc, argv);

  try {
    CLI::App* cmd = app.get_subcommands().front();
    const Config config = make_config(common, cmd);

    if (cmd == analyze) {
      std::vector<picc::PiSet> sets;
      for (const auto& p : pis) sets.push_back(picc::PiSet::parse(p));
      picc::AnalyzeStats stats;
      const auto doc =
          picc::analyze_groups(load(source, config), sets, config, verify_cache, &stats);
      std::cout << picc::render(doc, config.format);
      return stats.cache_mismatches == 0 ? 0 : 1;
    }
    if (cmd == verify) {
      std::vector<std::string> names = split_list(suites);
      if (std::find(names.begin(), names.end(), "all") != names.end()) {
        names.clear();
        for (const auto& s : picc::suite_names())
          if (s != "expect") names.push_back(s);
      }
      picc::SuiteConfig sc;
      sc.hall = config.hall;
      sc.subgroup_cap = config.limits.subgroup_cap;
      if (!expect.empty()) {
        sc.expected_d = picc::parse_rational(expect);
        if (std::find(names.begin(), names.end(), "expect") == names.end())
          names.push_back("expect");
      }
      std::optional<picc::PiSet> pi;
      if (pis.size() > 1) throw picc::InvalidArgument("verify takes at most one --pi");
      if (!pis.empty()) pi = picc::PiSet::parse(pis[0]);
      const auto out =
          picc::verify_groups(load(source, config), names, sc, config, pi, bundle_dir);
      std::cout << picc::render(out.report, config.format);
      for (const auto& b : out.bundles) std::cerr << "fail bundle: " << b.string() << "\n";
      return out.fails == 0 ? 0 : 1;
    }
    if (cmd == hall) {
      if (pis.size() != 1) throw picc::InvalidArgument("hall takes exactly one --pi");
      const auto groups = load(source, config);
      int status = 0;
      for (const auto& g : groups)
        std::cout << picc::render(
            picc::hall_report(g, picc::PiSet::parse(pis[0]), config), config.format);
      return status;
    }
    if (cmd == census) {
      std::cout << picc::render(picc::census_report(config), config.format);
      return 0;
    }
    if (cmd == cache) {
      if (config.cache_dir.empty()) throw picc::InvalidArgument("--cache-dir is required");
      picc::Cache c(config.cache_dir);
      if (clear) c.clear();
      nlohmann::json doc = picc::report_header("cache", config);
      doc["entries"] = c.size();
      std::cout << picc::render(doc, config.format);
      return 0;
    }
  } catch (const picc::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const picc::ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
