#include "picc/store.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <thread>

#include <boost/crc.hpp>

#include "picc/errors.hpp"

namespace picc {

using nlohmann::json;
namespace fs = std::filesystem;

// --- config ------------------------------------------------------------------

void Config::validate() const {
  const std::pair<const char*, std::uint64_t> caps[] = {
      {"max_degree", limits.max_degree},
      {"element_cap", limits.element_cap},
      {"subgroup_cap", limits.subgroup_cap},
      {"quotient_degree_cap", limits.quotient_degree_cap},
      {"max_order", max_order},
  };
  for (const auto& [name, value] : caps)
    if (value == 0) throw InvalidArgument(std::string(name) + " must be positive");
  if (workers == 0) throw InvalidArgument("workers must be positive");
  if (format != "json" && format != "csv" && format != "text")
    throw InvalidArgument("unknown format '" + format + "'");
}

json Config::to_json() const {
  return {
      {"limits",
       {{"max_degree", limits.max_degree},
        {"element_cap", limits.element_cap},
        {"subgroup_cap", limits.subgroup_cap},
        {"quotient_degree_cap", limits.quotient_degree_cap},
        {"cayley_table_cap", limits.cayley_table_cap}}},
      {"hall", {{"attempts", hall.attempts}, {"exhaustive_cap", hall.exhaustive_cap}}},
      {"workers", workers},
      {"cache_dir", cache_dir},
      {"format", format},
      {"seed", seed},
      {"max_order", max_order},
      {"timing", timing},
  };
}

Config Config::from_json(const json& j) {
  Config c;
  if (j.contains("limits")) {
    const json& l = j["limits"];
    c.limits.max_degree = l.value("max_degree", c.limits.max_degree);
    c.limits.element_cap = l.value("element_cap", c.limits.element_cap);
    c.limits.subgroup_cap = l.value("subgroup_cap", c.limits.subgroup_cap);
    c.limits.quotient_degree_cap =
        l.value("quotient_degree_cap", c.limits.quotient_degree_cap);
    c.limits.cayley_table_cap = l.value("cayley_table_cap", c.limits.cayley_table_cap);
  }
  if (j.contains("hall")) {
    c.hall.attempts = j["hall"].value("attempts", c.hall.attempts);
    c.hall.exhaustive_cap = j["hall"].value("exhaustive_cap", c.hall.exhaustive_cap);
  }
  c.workers = j.value("workers", c.workers);
  c.cache_dir = j.value("cache_dir", c.cache_dir);
  c.format = j.value("format", c.format);
  c.seed = j.value("seed", c.seed);
  c.max_order = j.value("max_order", c.max_order);
  c.timing = j.value("timing", c.timing);
  c.hall.seed = c.seed;
  c.validate();
  return c;
}

// --- groups ------------------------------------------------------------------

NamedGroup group_from_name(const std::string& name, const Limits& limits) {
  GroupSpec spec = GroupSpec::parse(name);
  return {spec.name(), build(spec, limits)};
}

NamedGroup group_from_file(const std::string& path, const Limits& limits) {
  return {fs::path(path).filename().string(), read_group_file(path, limits)};
}

std::vector<NamedGroup> census_groups(const std::string& selector, const Config& config) {
  if (selector != "default")
    throw InvalidArgument("unknown census '" + selector + "' (only 'default')");
  CensusConfig cc;
  cc.max_order = config.max_order;
  std::vector<NamedGroup> out;
  for (auto& e : census(cc, config.limits)) out.push_back({e.name, std::move(e.group)});
  return out;
}

std::string canonical_group_key(const PermGroup& g) {
  std::vector<std::vector<Point>> images;
  for (const auto& p : g.generators()) images.emplace_back(p.images().begin(), p.images().end());
  std::sort(images.begin(), images.end());
  std::string key = std::to_string(g.degree());
  for (const auto& im : images) {
    key += '|';
    for (std::size_t i = 0; i < im.size(); ++i) {
      if (i) key += ',';
      key += std::to_string(im[i]);
    }
  }
  return key;
}

// --- cache -------------------------------------------------------------------

std::uint32_t crc32(std::string_view bytes) {
  boost::crc_32_type crc;
  crc.process_bytes(bytes.data(), bytes.size());
  return crc.checksum();
}

Cache::Cache(fs::path dir, std::string version)
    : dir_(std::move(dir)), version_(std::move(version)) {
  fs::create_directories(dir_);
}

fs::path Cache::path_for(const std::string& key) const {
  std::ostringstream name;
  name << std::hex << std::setw(16) << std::setfill('0') << stable_hash(key) << ".json";
  return dir_ / name.str();
}

std::optional<json> Cache::get(const std::string& key) const {
  std::ifstream in(path_for(key));
  if (!in) return std::nullopt;
  json entry;
  try {
    entry = json::parse(in);
  } catch (const json::exception&) {
    return std::nullopt;
  }
  if (!entry.is_object() || entry.value("version", "") != version_ ||
      entry.value("key", "") != key || !entry.contains("value"))
    return std::nullopt;
  const std::string bytes = entry["value"].dump();
  if (entry.value("checksum", std::uint32_t{0}) != crc32(bytes)) return std::nullopt;
  return entry["value"];
}

void Cache::put(const std::string& key, const json& value) const {
  const json entry{{"version", version_},
                   {"key", key},
                   {"value", value},
                   {"checksum", crc32(value.dump())}};
  const fs::path target = path_for(key);
  std::ostringstream tmp_name;
  tmp_name << target.filename().string() << ".tmp." << std::this_thread::get_id();
  const fs::path tmp = dir_ / tmp_name.str();
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw Error("cache: cannot write " + tmp.string());
    out << entry.dump() << '\n';
  }
  fs::rename(tmp, target);
}

std::size_t Cache::size() const {
  std::size_t n = 0;
  for (const auto& e : fs::directory_iterator(dir_))
    if (e.path().extension() == ".json") ++n;
  return n;
}

void Cache::clear() const {
  for (const auto& e : fs::directory_iterator(dir_))
    if (e.path().extension() == ".json") fs::remove(e.path());
}

// --- commands ----------------------------------------------------------------

json report_header(const std::string& kind, const Config& config) {
  return {{"schema_version", schema_version},
          {"tool", "picc"},
          {"version", tool_version},
          {"kind", kind},
          {"config", config.to_json()}};
}

namespace {

json generators_json(const PermGroup& g) {
  json out = json::array();
  for (const auto& p : g.generators()) out.push_back(p.to_cycle_string());
  return out;
}

json profile_json(const PiProfile& p) {
  return {{"pi", p.pi.to_string()},
          {"k_pi", p.k_pi},
          {"order_pi", p.order_pi},
          {"d_pi", to_string(p.d_pi)}};
}

}  // namespace

json analyze_groups(const std::vector<NamedGroup>& groups, const std::vector<PiSet>& pis,
                    const Config& config, bool verify_cache, AnalyzeStats* stats) {
  AnalyzeStats local;
  AnalyzeStats& st = stats ? *stats : local;
  std::optional<Cache> cache;
  if (!config.cache_dir.empty()) cache.emplace(config.cache_dir);

  json doc = report_header("analyze", config);
  json out = json::array();
  for (const auto& ng : groups) {
    const Subgroup g = Subgroup::whole(FiniteGroup::create(ng.group, config.limits));
    std::optional<ClassTable> table;
    auto classes = [&]() -> const ClassTable& {
      if (!table) table = conjugacy_classes(g);
      return *table;
    };
    const std::string gkey = canonical_group_key(ng.group);
    const std::vector<std::uint64_t> primes = prime_divisors(g);
    const std::vector<PiSet> sets = pis.empty() ? nonempty_subsets(primes) : pis;

    json profiles = json::array();
    for (const auto& pi : sets) {
      const std::string key = gkey + "#d_pi#" + pi.to_string();
      std::optional<json> hit = cache ? cache->get(key) : std::nullopt;
      json value;
      if (hit && !verify_cache) {
        ++st.cache_hits;
        value = *hit;
      } else {
        value = profile_json(d_pi(classes(), pi));
        if (hit) {
          ++st.cache_hits;
          if (*hit != value) ++st.cache_mismatches;
        } else {
          ++st.cache_misses;
          if (cache) cache->put(key, value);
        }
      }
      profiles.push_back(std::move(value));
    }

    const ClassTable& t = classes();
    json sizes = json::array(), orders = json::array();
    for (const auto& c : t.classes()) {
      sizes.push_back(c.size);
      orders.push_back(c.element_order);
    }
    json sylow = json::object();
    for (auto p : primes) sylow[std::to_string(p)] = PiSet{p}.part_of(g.order());
    out.push_back({{"name", ng.name},
                   {"degree", ng.group.degree()},
                   {"order", g.order()},
                   {"generators", generators_json(ng.group)},
                   {"classes",
                    {{"count", t.size()},
                     {"d", to_string(commuting_probability(t))},
                     {"sizes", sizes},
                     {"element_orders", orders}}},
                   {"sylow_orders", sylow},
                   {"profiles", profiles}});
  }
  doc["groups"] = std::move(out);
  if (verify_cache)
    doc["cache_check"] = {{"checked", st.cache_hits}, {"mismatches", st.cache_mismatches}};
  return doc;
}

json hall_report(const NamedGroup& ng, const PiSet& pi, const Config& config) {
  const Subgroup g = Subgroup::whole(FiniteGroup::create(ng.group, config.limits));
  HallBudget budget = config.hall;
  budget.seed = config.seed;
  const HallSearchOutcome out = hall_search(g, pi, budget);
  json doc = report_header("hall", config);
  doc["group"] = ng.name;
  doc["order"] = g.order();
  doc["pi"] = pi.to_string();
  doc["target_order"] = pi.part_of(g.order());
  doc["status"] = to_string(out.status);
  doc["method"] = to_string(out.method);
  doc["route"] = out.route;
  doc["attempts_used"] = out.attempts_used;
  if (out.subgroup) {
    json gens = json::array();
    for (const auto& p : out.subgroup->generator_permutations())
      gens.push_back(p.to_cycle_string());
    doc["subgroup"] = {{"order", out.subgroup->order()},
                       {"abelian", out.subgroup->is_abelian()},
                       {"generators", gens}};
  } else {
    doc["subgroup"] = nullptr;
  }
  return doc;
}

json census_report(const Config& config) {
  json doc = report_header("census", config);
  json rows = json::array();
  CensusConfig cc;
  cc.max_order = config.max_order;
  for (const auto& e : census(cc, config.limits))
    rows.push_back({{"name", e.name},
                    {"order", to_string(e.spec.expected_order())},
                    {"degree", e.group.degree()}});
  doc["groups"] = std::move(rows);
  return doc;
}

fs::path write_replay_bundle(const fs::path& parent, const PermGroup& group,
                             const Verdict& v, const Config& config) {
  std::string name = v.group + "-" + v.result + (v.pi.empty() ? "" : "-" + v.pi);
  for (char& c : name)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '-' && c != '_') c = '_';
  const fs::path dir = parent / name;
  fs::create_directories(dir);
  std::ofstream(dir / "group.txt") << "# " << v.group << "\n" << serialize_group_file(group);
  std::ofstream(dir / "pi") << v.pi << "\n";
  std::ofstream(dir / "config.json") << config.to_json().dump(2) << "\n";
  std::ofstream(dir / "verdict.json") << to_json(v).dump(2) << "\n";
  return dir;
}

VerifyOutcome verify_groups(const std::vector<NamedGroup>& groups,
                            const std::vector<std::string>& suites,
                            const SuiteConfig& suite_config, const Config& config,
                            const std::optional<PiSet>& pi, const fs::path& bundle_dir) {
  std::vector<CampaignGroup> cg;
  for (const auto& g : groups) cg.push_back({g.name, g.group});
  const CampaignResult r =
      run_campaign(cg, suites, suite_config, config.limits, config.workers, pi);

  VerifyOutcome out;
  out.report = report_header("verify", config);
  json verdicts = json::array();
  json bundles = json::array();
  for (std::size_t i = 0; i < r.verdicts.size(); ++i) {
    const Verdict& v = r.verdicts[i];
    verdicts.push_back(to_json(v, config.timing));
    if (v.status == VerdictStatus::fail) {
      const fs::path b =
          write_replay_bundle(bundle_dir, groups[r.group_index[i]].group, v, config);
      out.bundles.push_back(b);
      bundles.push_back(b.string());
    }
  }
  out.fails = r.fails();
  json summary = json::object();
  for (const auto& s : {"pass", "fail", "vacuous", "inapplicable", "partial", "unresolved"})
    summary[s] = r.counts.count(s) ? r.counts.at(s) : 0;
  out.report["suites"] = suites;
  out.report["verdicts"] = std::move(verdicts);
  out.report["summary"] = std::move(summary);
  out.report["bundles"] = std::move(bundles);
  return out;
}

// --- rendering ---------------------------------------------------------------

namespace {

std::string csv_field(const json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::string csv_row(std::initializer_list<json> fields) {
  std::string row;
  bool first = true;
  for (const auto& f : fields) {
    if (!first) row += ',';
    row += csv_field(f);
    first = false;
  }
  return row + "\n";
}

std::string render_csv(const json& doc) {
  const std::string kind = doc.at("kind");
  std::string out;
  if (kind == "analyze") {
    out = "group,pi,k_pi,order_pi,d_pi\n";
    for (const auto& g : doc["groups"])
      for (const auto& p : g["profiles"])
        out += csv_row({g["name"], p["pi"], p["k_pi"], p["order_pi"], p["d_pi"]});
  } else if (kind == "verify") {
    out = "group,suite,result,pi,status,detail\n";
    for (const auto& v : doc["verdicts"])
      out += csv_row({v["group"], v["suite"], v["result"], v["pi"], v["status"], v["detail"]});
  } else if (kind == "hall") {
    out = "group,pi,status,method,route,order,abelian\n";
    const json& s = doc["subgroup"];
    out += csv_row({doc["group"], doc["pi"], doc["status"], doc["method"], doc["route"],
                    s.is_null() ? json("") : s["order"],
                    s.is_null() ? json("") : s["abelian"]});
  } else if (kind == "census") {
    out = "name,order,degree\n";
    for (const auto& g : doc["groups"]) out += csv_row({g["name"], g["order"], g["degree"]});
  } else {
    out = "field,value\n";
    for (const auto& [k, v] : doc.items())
      if (k != "config") out += csv_row({k, v});
  }
  return out;
}

std::string render_text(const json& doc) {
  const std::string kind = doc.at("kind");
  std::ostringstream out;
  if (kind == "analyze") {
    for (const auto& g : doc["groups"]) {
      out << g["name"].get<std::string>() << "  order " << g["order"] << "  degree "
          << g["degree"] << "\n";
      out << "  classes " << g["classes"]["count"] << "  d(G) = "
          << g["classes"]["d"].get<std::string>() << "\n";
      out << "  sylow orders";
      for (const auto& [p, o] : g["sylow_orders"].items()) out << "  " << p << ":" << o;
      out << "\n";
      for (const auto& p : g["profiles"])
        out << "  pi " << p["pi"].get<std::string>() << "  k_pi " << p["k_pi"]
            << "  |G|_pi " << p["order_pi"] << "  d_pi " << p["d_pi"].get<std::string>()
            << "\n";
    }
    if (doc.contains("cache_check"))
      out << "cache check: " << doc["cache_check"]["checked"] << " checked, "
          << doc["cache_check"]["mismatches"] << " mismatches\n";
  } else if (kind == "verify") {
    for (const auto& v : doc["verdicts"]) {
      out << v["status"].get<std::string>() << "  " << v["result"].get<std::string>()
          << "  " << v["group"].get<std::string>();
      if (!v["pi"].get<std::string>().empty()) out << "  " << v["pi"].get<std::string>();
      if (!v["detail"].get<std::string>().empty())
        out << "  (" << v["detail"].get<std::string>() << ")";
      out << "\n";
    }
    out << "summary:";
    for (const auto& [k, n] : doc["summary"].items()) out << " " << k << "=" << n;
    out << "\n";
  } else if (kind == "hall") {
    out << doc["group"].get<std::string>() << "  pi " << doc["pi"].get<std::string>()
        << "  status " << doc["status"].get<std::string>() << "  method "
        << doc["method"].get<std::string>() << "  route "
        << doc["route"].get<std::string>() << "\n";
    if (!doc["subgroup"].is_null()) {
      out << "  order " << doc["subgroup"]["order"] << "  abelian "
          << doc["subgroup"]["abelian"] << "\n";
      for (const auto& g : doc["subgroup"]["generators"])
        out << "  " << g.get<std::string>() << "\n";
    }
  } else if (kind == "census") {
    for (const auto& g : doc["groups"])
      out << g["name"].get<std::string>() << "  order " << g["order"].get<std::string>()
          << "  degree " << g["degree"] << "\n";
  } else {
    for (const auto& [k, v] : doc.items())
      if (k != "config") out << k << ": " << v.dump() << "\n";
  }
  return out.str();
}

}  // namespace

std::string render(const json& doc, const std::string& format) {
  if (format == "json") return doc.dump(2) + "\n";
  if (format == "csv") return render_csv(doc);
  if (format == "text") return render_text(doc);
  throw InvalidArgument("unknown format '" + format + "'");
}

}  // namespace picc
