#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "picc/class_engine.hpp"
#include "picc/limits.hpp"
#include "picc/numeric.hpp"
#include "picc/pi_analysis.hpp"
#include "picc/subgroup_engine.hpp"

namespace picc {

enum class VerdictStatus { pass, fail, vacuous, inapplicable, partial, unresolved };
std::string to_string(VerdictStatus s);

struct Verdict {
  std::string suite;
  std::string result;
  std::string group;
  std::string pi;  // "{2,3}", empty when the check is not indexed by pi
  VerdictStatus status = VerdictStatus::pass;
  std::string detail;
  nlohmann::json witness = nlohmann::json::object();
  double seconds = 0;
};

struct SuiteConfig {
  HallBudget hall;
  std::uint64_t subgroup_cap = 2'000;
  // Checked by the "expect" suite against d_pi.
  std::optional<Rational> expected_d;
};

// A group with the data shared by all verifiers, computed once.
class GroupUnderTest {
 public:
  GroupUnderTest(std::string name, const PermGroup& g, const Limits& limits);

  const std::string& name() const noexcept { return name_; }
  const PermGroup& perm_group() const noexcept { return perm_; }
  const Subgroup& whole() const noexcept { return whole_; }
  const ClassTable& classes() const noexcept { return classes_; }
  const std::vector<std::uint64_t>& primes() const noexcept { return primes_; }
  const std::vector<Subgroup>& normals() const;
  PiProfile profile(const PiSet& pi) const { return d_pi(classes_, pi); }

 private:
  std::string name_;
  PermGroup perm_;
  Subgroup whole_;
  ClassTable classes_;
  std::vector<std::uint64_t> primes_;
  mutable std::optional<std::vector<Subgroup>> normals_;
};

// Suite names accepted by run_suite, in campaign order. "expect" is only run
// when named explicitly.
const std::vector<std::string>& suite_names();
bool is_pi_indexed(const std::string& suite);

// Verdicts of one suite on one group. Pi-indexed suites run over every
// non-empty subset of pi(G), or only over `pi` when given.
std::vector<Verdict> run_suite(const std::string& suite, const GroupUnderTest& g,
                               const SuiteConfig& config,
                               const std::optional<PiSet>& pi = std::nullopt);

// Individual verifiers.
Verdict verify_hall_threshold(const GroupUnderTest& g, const PiSet& pi,
                              const SuiteConfig& config);
Verdict verify_d3_structure(const GroupUnderTest& g);
Verdict verify_unit_characterization(const GroupUnderTest& g, const PiSet& pi,
                                     const SuiteConfig& config);
Verdict verify_gap_bound(const GroupUnderTest& g, const PiSet& pi);
Verdict verify_commuting_threshold(const GroupUnderTest& g);
Verdict verify_quotient_submultiplicative(const GroupUnderTest& g,
                                          const std::vector<PiSet>& pis);
Verdict verify_chain_inequality(const GroupUnderTest& g);
Verdict verify_centralizer_decomposition(const GroupUnderTest& g, const PiSet& pi);
Verdict verify_hall_average(const GroupUnderTest& g, const PiSet& pi,
                            const SuiteConfig& config);
Verdict verify_product_bound(const GroupUnderTest& g, const PiSet& pi,
                             const SuiteConfig& config);
Verdict verify_robinson_bound(const GroupUnderTest& g, const PiSet& pi);
Verdict verify_normal_p_complement(const GroupUnderTest& g);
Verdict verify_fusion_control(const GroupUnderTest& g);
Verdict verify_expected_value(const GroupUnderTest& g, const PiSet& pi,
                              const Rational& expected);

// --- campaigns ---------------------------------------------------------------

struct CampaignGroup {
  std::string name;
  PermGroup group;
};

struct CampaignResult {
  // Ordered by group, then suite, then pi, independent of worker count.
  std::vector<Verdict> verdicts;
  // Index into the campaign's groups for each verdict.
  std::vector<std::size_t> group_index;
  std::map<std::string, std::uint64_t> counts;  // by status name
  std::uint64_t fails() const;
};

CampaignResult run_campaign(const std::vector<CampaignGroup>& groups,
                            const std::vector<std::string>& suites,
                            const SuiteConfig& config, const Limits& limits,
                            unsigned workers,
                            const std::optional<PiSet>& pi = std::nullopt);

nlohmann::json to_json(const Verdict& v, bool with_timing = false);

}  // namespace picc
