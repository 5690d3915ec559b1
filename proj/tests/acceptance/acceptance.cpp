// Acceptance run: twelve criteria, one PASS/FAIL line each. Exit status is
// nonzero if any criterion fails or exceeds its time limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "oracles.hpp"
#include "picc/catalog.hpp"
#include "picc/pi_analysis.hpp"
#include "picc/subgroup_engine.hpp"
#include "picc/theorem_suite.hpp"

using namespace picc;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
};

using Clock = std::chrono::steady_clock;

// limit_s <= 0 means no stated limit.
bool run(int id, const std::string& title, double limit_s, const std::function<Outcome()>& f) {
  const auto t0 = Clock::now();
  Outcome o;
  try {
    o = f();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double s = std::chrono::duration<double>(Clock::now() - t0).count();
  bool ok = o.ok;
  std::string note = o.note;
  if (limit_s > 0 && s >= limit_s) {
    ok = false;
    note += " [over time limit " + std::to_string(limit_s) + " s]";
  }
  std::printf("%s %2d  %-44s %8.2f s", ok ? "PASS" : "FAIL", id, title.c_str(), s);
  if (limit_s > 0) std::printf(" (limit %.0f s)", limit_s);
  if (!note.empty()) std::printf("  %s", note.c_str());
  std::printf("\n");
  std::fflush(stdout);
  return ok;
}

Subgroup whole(const std::string& name) {
  return Subgroup::whole(FiniteGroup::create(build(GroupSpec::parse(name))));
}

const std::vector<CensusEntry>& the_census() {
  static const std::vector<CensusEntry> c = census();
  return c;
}

std::vector<CampaignGroup> campaign_groups() {
  std::vector<CampaignGroup> out;
  for (const auto& e : the_census()) out.push_back({e.name, e.group});
  return out;
}

unsigned workers() { return std::max(1U, std::thread::hardware_concurrency()); }

// Runs one suite over the census; any fail, partial or unresolved verdict
// fails the criterion, and the first few offenders are named.
Outcome campaign(const std::string& suite) {
  const CampaignResult r = run_campaign(campaign_groups(), {suite}, SuiteConfig{}, Limits{},
                                        workers());
  std::ostringstream note;
  bool ok = true;
  int shown = 0;
  for (const auto& v : r.verdicts) {
    if (v.status == VerdictStatus::fail || v.status == VerdictStatus::partial ||
        v.status == VerdictStatus::unresolved) {
      ok = false;
      if (shown++ < 3)
        note << v.group << " " << v.pi << " " << to_string(v.status) << ": " << v.detail << "; ";
    }
  }
  for (const auto& [k, n] : r.counts) note << k << "=" << n << " ";
  return {ok, note.str()};
}

}  // namespace

int main() {
  int failures = 0;
  auto tally = [&](bool ok) { failures += ok ? 0 : 1; };

  tally(run(1, "d_2(D8 x C_m) = 5/8", 1.0, [] {
    Outcome o;
    for (int m : {3, 5, 7, 9, 15}) {
      const std::string name = "D8 x C" + std::to_string(m);
      const Rational d = d_pi(whole(name), PiSet{2}).d_pi;
      if (d != make_rational(5, 8)) o = {false, name + " gives " + to_string(d)};
    }
    return o;
  }));

  tally(run(2, "d_3(A5) = d_3(A5 x C3) = 2/3", 5.0, [] {
    const Rational a = d_pi(whole("A5"), PiSet{3}).d_pi;
    const Rational b = d_pi(whole("A5 x C3"), PiSet{3}).d_pi;
    const bool ok = a == make_rational(2, 3) && b == make_rational(2, 3);
    return Outcome{ok, "A5: " + to_string(a) + ", A5 x C3: " + to_string(b)};
  }));

  tally(run(3, "d(G) > 5/8 implies abelian over the census", 300.0, [] {
    Outcome o;
    std::size_t above = 0;
    for (const auto& e : the_census()) {
      const Subgroup g = Subgroup::whole(FiniteGroup::create(e.group));
      if (commuting_probability(conjugacy_classes(g)) <= make_rational(5, 8)) continue;
      ++above;
      if (!g.is_abelian()) o = {false, e.name + " is a violation"};
    }
    if (o.ok) o.note = std::to_string(the_census().size()) + " groups, " +
                       std::to_string(above) + " above 5/8";
    return o;
  }));

  tally(run(4, "hall-threshold campaign", 1800.0, [] { return campaign("main"); }));
  tally(run(5, "centralizer decomposition identity", 0, [] { return campaign("decomposition"); }));
  tally(run(6, "chain d <= d_pi <= d_mu <= 1", 0, [] { return campaign("chain"); }));
  tally(run(7, "unit characterization, both directions", 0, [] { return campaign("unit"); }));
  tally(run(8, "quotient submultiplicativity", 900.0, [] { return campaign("quotient"); }));
  tally(run(9, "fusion control for abelian Sylow", 0, [] { return campaign("fusion"); }));

  tally(run(10, "d_3 = 2/3 structure on S3 and A5 x C3", 60.0, [] {
    Outcome o;
    const GroupUnderTest s3("S3", build(GroupSpec::parse("S3")), Limits{});
    const GroupUnderTest a5c3("A5 x C3", build(GroupSpec::parse("A5 x C3")), Limits{});
    const Verdict v1 = verify_d3_structure(s3);
    const Verdict v2 = verify_d3_structure(a5c3);
    for (const Verdict* v : {&v1, &v2}) {
      const auto& w = v->witness;
      if (v->status != VerdictStatus::pass || w["normalizer_over_centralizer"] != 2 ||
          w["commutator_order"] != 3 || w["decomposition"] != true)
        o = {false, v->group + ": " + to_string(v->status) + " " + v->detail};
    }
    if (v1.witness["case1"] != true) o = {false, "S3 is not case (1)"};
    if (v2.witness["case2"] != true || v2.witness["A"]["order"] != 60 ||
        v2.witness["B"]["order"] != 3)
      o = {false, "A5 x C3 is not case (2) with |A| = 60, |B| = 3"};
    return o;
  }));

  tally(run(11, "oracle equivalence over the census", 0, [] {
    Outcome o;
    std::size_t checked = 0;
    for (const auto& e : the_census()) {
      if (e.group.order() > 2000) continue;
      ++checked;
      const oracle::Table t(oracle::elements(e.group));
      if (e.group.order() != t.size()) {
        o = {false, e.name + ": order mismatch"};
        continue;
      }
      const ClassTable ct = conjugacy_classes(e.group);
      const auto oc = oracle::classes(t);
      bool same = oc.size() == ct.size();
      for (const auto& cls : oc) {
        if (!same) break;
        const std::size_t i = ct.class_of(Permutation(t.elems[cls[0]]));
        same = ct[i].size == cls.size();
        for (auto y : cls) same = same && ct.class_of(Permutation(t.elems[y])) == i;
      }
      if (!same) o = {false, e.name + ": class partition mismatch"};
      const Rational want = make_rational(oracle::commuting_pairs(t), t.size() * t.size());
      if (commuting_probability(ct) != want) o = {false, e.name + ": d(G) mismatch"};
    }
    if (o.ok) o.note = std::to_string(checked) + " groups";
    return o;
  }));

  tally(run(12, "Hall {3,5} in A5 does not exist", 0, [] {
    const HallSearchOutcome h = hall_search(whole("A5"), PiSet{3, 5});
    const bool ok = h.status == HallStatus::none_exists && h.method == HallMethod::exhaustive;
    return Outcome{ok, to_string(h.status) + " via " + to_string(h.method)};
  }));

  std::printf("%s: %d of 12 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
