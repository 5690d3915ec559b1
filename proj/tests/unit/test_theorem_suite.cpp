#include <doctest.h>

#include "picc/catalog.hpp"
#include "picc/errors.hpp"
#include "picc/theorem_suite.hpp"

using namespace picc;

namespace {
GroupUnderTest gut(const std::string& name, const Limits& limits = {}) {
  return GroupUnderTest(name, build(GroupSpec::parse(name), limits), limits);
}
const SuiteConfig config{};
}  // namespace

TEST_CASE("hall threshold") {
  const Verdict s3 = verify_hall_threshold(gut("S3"), PiSet{3}, config);
  CHECK(s3.status == VerdictStatus::pass);
  CHECK(s3.witness["d_pi"] == "2/3");
  CHECK(verify_hall_threshold(gut("A5"), PiSet{3}, config).status == VerdictStatus::pass);
  const Verdict tight = verify_hall_threshold(gut("D8 x C3"), PiSet{2}, config);
  CHECK(tight.status == VerdictStatus::vacuous);
  CHECK(tight.pi == "{2}");
  CHECK(tight.result == "hall-threshold");
  CHECK(verify_hall_threshold(gut("C6"), PiSet{2, 3}, config).status == VerdictStatus::pass);
}

TEST_CASE("unit characterization") {
  CHECK(verify_unit_characterization(gut("A4"), PiSet{3}, config).status == VerdictStatus::pass);
  CHECK(verify_unit_characterization(gut("S3"), PiSet{3}, config).status == VerdictStatus::pass);
  CHECK(verify_unit_characterization(gut("C6"), PiSet{2}, config).status == VerdictStatus::pass);
  CHECK(verify_unit_characterization(gut("A4"), PiSet{3}, config).witness["normal_complement"] ==
        true);
  CHECK(verify_unit_characterization(gut("S3"), PiSet{3}, config).witness["normal_complement"] ==
        false);
}

TEST_CASE("gap bound") {
  CHECK(verify_gap_bound(gut("S4"), PiSet{2}).status == VerdictStatus::pass);
  CHECK(verify_gap_bound(gut("S3"), PiSet{3}).status == VerdictStatus::pass);
  CHECK(verify_gap_bound(gut("C6"), PiSet{3}).status == VerdictStatus::vacuous);
}

TEST_CASE("quotient submultiplicativity") {
  const Verdict s4 = verify_quotient_submultiplicative(gut("S4"), {PiSet{2}, PiSet{2, 3}});
  CHECK(s4.status == VerdictStatus::pass);
  CHECK(verify_quotient_submultiplicative(gut("C1"), {PiSet{2}}).status != VerdictStatus::fail);
}

TEST_CASE("structure") {
  const Verdict s3 = verify_d3_structure(gut("S3"));
  CHECK(s3.status == VerdictStatus::pass);
  CHECK(s3.witness["case1"] == true);
  const Verdict a5c3 = verify_d3_structure(gut("A5 x C3"));
  CHECK(a5c3.status == VerdictStatus::pass);
  CHECK(a5c3.witness["case2"] == true);
  CHECK(a5c3.witness["A"]["order"] == 60);
  CHECK(a5c3.witness["B"]["order"] == 3);
  CHECK(a5c3.witness["d_3"] == "2/3");
  CHECK(verify_d3_structure(gut("A4")).status == VerdictStatus::vacuous);
}

TEST_CASE("commuting threshold") {
  CHECK(verify_commuting_threshold(gut("C6")).status == VerdictStatus::pass);
  CHECK(verify_commuting_threshold(gut("D8")).status == VerdictStatus::vacuous);
  CHECK(verify_commuting_threshold(gut("S3")).status == VerdictStatus::vacuous);
}

TEST_CASE("remaining verifiers on a few groups") {
  for (const char* name : {"S3", "S4", "A5", "D8 x C3", "Q8", "S3 x C5"}) {
    CAPTURE(name);
    const GroupUnderTest g = gut(name);
    CHECK(verify_chain_inequality(g).status == VerdictStatus::pass);
    CHECK(verify_normal_p_complement(g).status == VerdictStatus::pass);
    CHECK(verify_fusion_control(g).status != VerdictStatus::fail);
    for (const auto& pi : nonempty_subsets(g.primes())) {
      CHECK(verify_centralizer_decomposition(g, pi).status != VerdictStatus::fail);
      CHECK(verify_hall_average(g, pi, config).status != VerdictStatus::fail);
      CHECK(verify_product_bound(g, pi, config).status != VerdictStatus::fail);
      CHECK(verify_robinson_bound(g, pi).status == VerdictStatus::pass);
    }
  }
  CHECK(verify_product_bound(gut("S3"), PiSet{2, 3}, config).status ==
        VerdictStatus::inapplicable);
}

TEST_CASE("expected value is an oracle self-test") {
  CHECK(verify_expected_value(gut("D8"), PiSet{2}, make_rational(5, 8)).status ==
        VerdictStatus::pass);
  const Verdict bad = verify_expected_value(gut("D8"), PiSet{2}, make_rational(1, 2));
  CHECK(bad.status == VerdictStatus::fail);
  CHECK_FALSE(bad.detail.empty());
}

TEST_CASE("run_suite covers pi subsets and rejects unknown suites") {
  const GroupUnderTest g = gut("S4");
  CHECK(run_suite("main", g, config).size() == 3);
  CHECK(run_suite("main", g, config, PiSet{2}).size() == 1);
  CHECK(run_suite("chain", g, config).size() == 1);
  CHECK_THROWS_AS(run_suite("nope", g, config), InvalidArgument);
  CHECK(is_pi_indexed("main"));
  CHECK_FALSE(is_pi_indexed("structure"));
}

TEST_CASE("resource limits become partial verdicts") {
  SuiteConfig tiny;
  tiny.subgroup_cap = 10;
  tiny.hall.exhaustive_cap = 10;
  const Verdict v = verify_hall_threshold(gut("S3"), PiSet{3}, tiny);
  CHECK((v.status == VerdictStatus::pass || v.status == VerdictStatus::partial));
  Limits lim;
  lim.subgroup_cap = 10;
  const auto r = run_campaign({{"S4", build(GroupSpec::parse("S4"))}}, {"structure", "quotient"},
                              tiny, lim, 1);
  CHECK(r.fails() == 0);
}

TEST_CASE("campaign is deterministic and worker-independent") {
  std::vector<CampaignGroup> groups;
  CensusConfig cc;
  cc.max_order = 60;
  for (const auto& e : census(cc)) groups.push_back({e.name, e.group});
  const std::vector<std::string> suites{"main", "unit", "chain", "structure"};
  const auto a = run_campaign(groups, suites, config, {}, 1);
  const auto b = run_campaign(groups, suites, config, {}, 4);
  CHECK(a.fails() == 0);
  REQUIRE(a.verdicts.size() == b.verdicts.size());
  for (std::size_t i = 0; i < a.verdicts.size(); ++i)
    CHECK(to_json(a.verdicts[i]) == to_json(b.verdicts[i]));
  CHECK(a.counts == b.counts);
  std::uint64_t total = 0;
  for (const auto& [k, n] : a.counts) total += n;
  CHECK(total == a.verdicts.size());

  const auto empty = run_campaign({}, suites, config, {}, 2);
  CHECK(empty.verdicts.empty());
  CHECK(empty.fails() == 0);
  CHECK_THROWS_AS(run_campaign(groups, {"bogus"}, config, {}, 1), InvalidArgument);
}

TEST_CASE("verdict json") {
  const Verdict v = verify_hall_threshold(gut("S3"), PiSet{3}, config);
  const auto j = to_json(v);
  CHECK(j["status"] == "pass");
  CHECK(j["group"] == "S3");
  CHECK_FALSE(j.contains("seconds"));
  CHECK(to_json(v, true).contains("seconds"));
}
