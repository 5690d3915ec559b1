#include "picc/theorem_suite.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <thread>

#include "picc/errors.hpp"

namespace picc {

std::string to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::pass: return "pass";
    case VerdictStatus::fail: return "fail";
    case VerdictStatus::vacuous: return "vacuous";
    case VerdictStatus::inapplicable: return "inapplicable";
    case VerdictStatus::partial: return "partial";
    case VerdictStatus::unresolved: return "unresolved";
  }
  return "?";
}

GroupUnderTest::GroupUnderTest(std::string name, const PermGroup& g,
                               const Limits& limits)
    : name_(std::move(name)),
      perm_(g),
      whole_(Subgroup::whole(FiniteGroup::create(g, limits))),
      classes_(conjugacy_classes(whole_)),
      primes_(prime_divisors(whole_)) {}

const std::vector<Subgroup>& GroupUnderTest::normals() const {
  if (!normals_) normals_ = normal_subgroups(whole_);
  return *normals_;
}

namespace {

using nlohmann::json;

const Rational five_eighths = make_rational(5, 8);
const Rational two_thirds = make_rational(2, 3);

json gens_json(const Subgroup& h) {
  json out = json::array();
  for (const auto& p : h.generator_permutations()) out.push_back(p.to_cycle_string());
  return out;
}

json subgroup_json(const Subgroup& h) {
  return {{"order", h.order()}, {"generators", gens_json(h)}};
}

Verdict make(const std::string& suite, const std::string& result,
             const GroupUnderTest& g, const std::optional<PiSet>& pi) {
  Verdict v;
  v.suite = suite;
  v.result = result;
  v.group = g.name();
  if (pi) v.pi = pi->to_string();
  return v;
}

Verdict& conclude(Verdict& v, VerdictStatus s, std::string detail) {
  v.status = s;
  v.detail = std::move(detail);
  return v;
}

// Some conjugate K^t with t in G lies inside H.
std::optional<ElementId> conjugate_inside(const Subgroup& g, const Subgroup& k,
                                          const Subgroup& h) {
  const FiniteGroup& fg = g.group();
  std::optional<ElementId> out;
  g.members().for_each([&](ElementId t) {
    if (out) return;
    for (ElementId s : k.generators())
      if (!h.contains(fg.conj(s, t))) return;
    out = t;
  });
  return out;
}

std::vector<PiSet> pi_sets(const GroupUnderTest& g, const std::optional<PiSet>& pi) {
  if (pi) return {*pi};
  return nonempty_subsets(g.primes());
}

}  // namespace

// --- verifiers ---------------------------------------------------------------

Verdict verify_hall_threshold(const GroupUnderTest& g, const PiSet& pi,
                              const SuiteConfig& config) {
  Verdict v = make("main", "hall-threshold", g, pi);
  const PiProfile prof = g.profile(pi);
  v.witness["d_pi"] = to_string(prof.d_pi);
  if (prof.d_pi <= five_eighths) return conclude(v, VerdictStatus::vacuous, "d_pi <= 5/8");

  const Subgroup& G = g.whole();
  const HallSearchOutcome hall = hall_search(G, pi, config.hall);
  v.witness["hall_status"] = to_string(hall.status);
  v.witness["hall_route"] = hall.route;
  if (hall.status == HallStatus::unresolved)
    return conclude(v, VerdictStatus::unresolved, "Hall search budget exhausted");
  if (hall.status == HallStatus::none_exists)
    return conclude(v, VerdictStatus::fail, "no Hall subgroup exists");
  const Subgroup& H = *hall.subgroup;
  v.witness["hall"] = subgroup_json(H);
  if (!H.is_abelian()) return conclude(v, VerdictStatus::fail, "Hall subgroup is not abelian");

  if (prof.d_pi != 1 && prof.d_pi != two_thirds)
    return conclude(v, VerdictStatus::fail, "d_pi is neither 1 nor 2/3");
  if (prof.d_pi == two_thirds) {
    const PiSet rest = pi.without(3);
    const bool consistent = pi.contains(3) && !pi.contains(2) &&
                            g.profile(PiSet{3}).d_pi == two_thirds &&
                            (rest.empty() || g.profile(rest).d_pi == 1);
    if (!consistent)
      return conclude(v, VerdictStatus::fail,
                      "d_pi = 2/3 without 3 in pi, 2 not in pi, d_3 = 2/3, "
                      "d_{pi minus 3} = 1");
  }

  const std::uint64_t target = prof.order_pi;
  if (G.order() <= config.subgroup_cap) {
    const auto classes = enumerate_subgroups_up_to_conjugacy(
        G, config.subgroup_cap, [&](std::uint64_t n) { return pi.is_pi_number(n); });
    std::uint64_t hall_classes = 0;
    for (const auto& c : classes) {
      const Subgroup& K = c.representative;
      if (K.order() == target) {
        ++hall_classes;
        if (!conjugating_element(G, H, K)) {
          v.witness["non_conjugate_hall"] = subgroup_json(K);
          return conclude(v, VerdictStatus::fail, "two non-conjugate Hall subgroups");
        }
      }
      if (!conjugate_inside(G, K, H)) {
        v.witness["uncontained_pi_subgroup"] = subgroup_json(K);
        return conclude(v, VerdictStatus::fail,
                        "a pi-subgroup lies in no conjugate of the Hall subgroup");
      }
    }
    v.witness["pi_subgroup_classes"] = classes.size();
    v.witness["hall_classes"] = hall_classes;
    return conclude(v, VerdictStatus::pass, "");
  }

  // Past the enumeration cap only cyclic pi-subgroups are checked: every
  // class of pi-elements must meet H.
  const FiniteGroup& fg = G.group();
  for (const auto& c : g.classes().classes()) {
    if (!pi.is_pi_number(c.element_order)) continue;
    const Subgroup cyc = Subgroup::generated(G.group_ptr(),
                                             std::vector<ElementId>{c.representative});
    if (!conjugate_inside(G, cyc, H)) {
      v.witness["uncontained_pi_element"] = fg.element(c.representative).to_cycle_string();
      return conclude(v, VerdictStatus::fail,
                      "a pi-element lies in no conjugate of the Hall subgroup");
    }
  }
  return conclude(v, VerdictStatus::partial,
                  "conjugacy and containment checked on cyclic pi-subgroups only");
}

Verdict verify_d3_structure(const GroupUnderTest& g) {
  const PiSet three{3};
  Verdict v = make("structure", "d3-structure", g, three);
  const Subgroup& G = g.whole();
  const PiProfile prof = g.profile(three);
  v.witness["d_3"] = to_string(prof.d_pi);
  if (prof.d_pi != two_thirds) return conclude(v, VerdictStatus::vacuous, "d_3 != 2/3");
  if (!o_pi_prime(G, three).is_trivial())
    return conclude(v, VerdictStatus::vacuous, "O_3'(G) != 1");

  const Subgroup P = sylow_subgroup(G, 3);
  const Subgroup N = normalizer(G, P);
  const Subgroup C = centralizer(G, P);
  const Subgroup PN = commutator(P, N);
  const Subgroup PZ = intersection(P, center(N));
  const bool abelian = P.is_abelian();
  const std::uint64_t nc = N.order() / C.order();
  const bool decomposition =
      intersection(PN, PZ).is_trivial() && PN.order() * PZ.order() == P.order();
  v.witness["sylow"] = subgroup_json(P);
  v.witness["sylow_abelian"] = abelian;
  v.witness["normalizer_over_centralizer"] = nc;
  v.witness["commutator_order"] = PN.order();
  v.witness["central_part_order"] = PZ.order();
  v.witness["decomposition"] = decomposition;

  const bool case1 = is_normal(G, P) && C == P;
  bool case2 = false;
  for (const auto& B : g.normals()) {
    if (case2) break;
    if (!B.is_abelian() || !three.is_pi_number(B.order())) continue;
    for (const auto& A : g.normals()) {
      if (A.order() * B.order() != G.order() || !intersection(A, B).is_trivial())
        continue;
      const auto S = almost_simple_socle(A);
      if (!S || three.part_of(S->order()) != 3 ||
          three.part_of(A.order()) != three.part_of(S->order()))
        continue;
      case2 = true;
      v.witness["A"] = subgroup_json(A);
      v.witness["B"] = subgroup_json(B);
      v.witness["socle_A_order"] = S->order();
      break;
    }
  }
  v.witness["case1"] = case1;
  v.witness["case2"] = case2;

  if (!abelian) return conclude(v, VerdictStatus::fail, "Sylow 3-subgroup is not abelian");
  if (nc != 2) return conclude(v, VerdictStatus::fail, "|N_G(P)/C_G(P)| != 2");
  if (PN.order() != 3) return conclude(v, VerdictStatus::fail, "|[P, N_G(P)]| != 3");
  if (!decomposition)
    return conclude(v, VerdictStatus::fail,
                    "P is not [P, N_G(P)] x (P meet Z(N_G(P)))");
  if (!case1 && !case2) return conclude(v, VerdictStatus::fail, "neither case holds");
  return conclude(v, VerdictStatus::pass, "");
}

Verdict verify_unit_characterization(const GroupUnderTest& g, const PiSet& pi,
                                     const SuiteConfig& config) {
  Verdict v = make("unit", "unit-characterization", g, pi);
  const Subgroup& G = g.whole();
  const PiProfile prof = g.profile(pi);
  const bool lhs = prof.d_pi == 1;
  const NormalComplement comp = normal_pi_complement(G, pi);
  bool rhs = false;
  bool hall_abelian = false;
  if (comp.exists) {
    const HallSearchOutcome hall = hall_search(G, pi, config.hall);
    if (hall.status == HallStatus::unresolved)
      return conclude(v, VerdictStatus::unresolved, "Hall search budget exhausted");
    hall_abelian = hall.status == HallStatus::found && hall.subgroup->is_abelian();
    rhs = hall_abelian;
    if (hall.subgroup) v.witness["hall"] = subgroup_json(*hall.subgroup);
  }
  v.witness["d_pi"] = to_string(prof.d_pi);
  v.witness["normal_complement"] = comp.exists;
  if (comp.complement) v.witness["complement"] = subgroup_json(*comp.complement);
  v.witness["hall_abelian"] = hall_abelian;
  if (lhs != rhs)
    return conclude(v, VerdictStatus::fail,
                    "d_pi = 1 disagrees with (normal complement and abelian Hall)");

  bool all_primes_unit = true;
  for (auto p : pi.primes())
    if (g.profile(PiSet{p}).d_pi != 1) all_primes_unit = false;
  v.witness["all_d_p_one"] = all_primes_unit;
  if (all_primes_unit) {
    if (!comp.exists)
      return conclude(v, VerdictStatus::fail,
                      "d_p = 1 for all p in pi but no normal pi-complement");
    const QuotientGroup q = quotient(G, *comp.complement);
    const Subgroup top = Subgroup::whole(FiniteGroup::create(q.group, G.group().limits()));
    if (!is_solvable(top))
      return conclude(v, VerdictStatus::fail,
                      "d_p = 1 for all p in pi but G is not pi-solvable");
  }
  return conclude(v, VerdictStatus::pass, "");
}

Verdict verify_gap_bound(const GroupUnderTest& g, const PiSet& pi) {
  Verdict v = make("gap", "gap-bound", g, pi);
  const Rational d = g.profile(pi).d_pi;
  v.witness["d_pi"] = to_string(d);
  if (d == 1) return conclude(v, VerdictStatus::vacuous, "d_pi = 1");
  if (d > two_thirds) return conclude(v, VerdictStatus::fail, "d_pi > 2/3");
  const bool strict = !pi.contains(3) || g.whole().order() % 2 == 1;
  v.witness["five_eighths_applies"] = strict;
  if (strict && d > five_eighths)
    return conclude(v, VerdictStatus::fail, "d_pi > 5/8 with 3 not in pi or |G| odd");
  return conclude(v, VerdictStatus::pass, "");
}

Verdict verify_commuting_threshold(const GroupUnderTest& g) {
  Verdict v = make("commuting", "commuting-threshold", g, std::nullopt);
  const Rational d = commuting_probability(g.classes());
  const bool abelian = g.whole().is_abelian();
  v.witness["d"] = to_string(d);
  v.witness["abelian"] = abelian;
  if (d > five_eighths)
    return abelian ? conclude(v, VerdictStatus::pass, "")
                   : conclude(v, VerdictStatus::fail, "d(G) > 5/8 but G is not abelian");
  if (abelian) return conclude(v, VerdictStatus::fail, "abelian group with d(G) <= 5/8");
  return conclude(v, VerdictStatus::vacuous, "d(G) <= 5/8");
}

Verdict verify_quotient_submultiplicative(const GroupUnderTest& g,
                                          const std::vector<PiSet>& pis) {
  Verdict v = make("quotient", "quotient-submultiplicative", g, std::nullopt);
  if (pis.size() == 1) v.pi = pis[0].to_string();
  const Subgroup& G = g.whole();
  std::uint64_t checked = 0;
  for (const auto& N : g.normals()) {
    const QuotientGroup q = quotient(G, N);
    const ClassTable n_classes = conjugacy_classes(N);
    const ClassTable q_classes =
        conjugacy_classes(Subgroup::whole(FiniteGroup::create(q.group, G.group().limits())));
    for (const auto& pi : pis) {
      const Rational lhs = g.profile(pi).d_pi;
      const Rational rhs = d_pi(n_classes, pi).d_pi * d_pi(q_classes, pi).d_pi;
      ++checked;
      if (lhs > rhs) {
        v.witness["normal_subgroup"] = subgroup_json(N);
        v.witness["pi"] = pi.to_string();
        v.witness["lhs"] = to_string(lhs);
        v.witness["rhs"] = to_string(rhs);
        return conclude(v, VerdictStatus::fail, "d_pi(G) > d_pi(N) d_pi(G/N)");
      }
    }
  }
  v.witness["normal_subgroups"] = g.normals().size();
  v.witness["pairs_checked"] = checked;
  return conclude(v, VerdictStatus::pass, "");
}

Verdict verify_chain_inequality(const GroupUnderTest& g) {
  Verdict v = make("chain", "chain-inequality", g, std::nullopt);
  const Rational d = commuting_probability(g.classes());
  const auto subsets = nonempty_subsets(g.primes());
  std::uint64_t checked = 0;
  for (const auto& pi : subsets) {
    const Rational dpi = g.profile(pi).d_pi;
    for (const auto& mu : subsets) {
      if (!mu.is_subset_of(pi)) continue;
      const Rational dmu = g.profile(mu).d_pi;
      ++checked;
      if (!(d <= dpi && dpi <= dmu && dmu <= 1)) {
        v.witness["pi"] = pi.to_string();
        v.witness["mu"] = mu.to_string();
        v.witness["d"] = to_string(d);
        v.witness["d_pi"] = to_string(dpi);
        v.witness["d_mu"] = to_string(dmu);
        return conclude(v, VerdictStatus::fail, "d <= d_pi <= d_mu <= 1 violated");
      }
    }
  }
  v.witness["pairs_checked"] = checked;
  return conclude(v, VerdictStatus::pass, "");
}

Verdict verify_centralizer_decomposition(const GroupUnderTest& g, const PiSet& pi) {
  Verdict v = make("decomposition", "centralizer-decomposition", g, pi);
  if (pi.size() < 2) return conclude(v, VerdictStatus::inapplicable, "|pi| < 2");
  const std::uint64_t direct = k_pi(g.classes(), pi);
  v.witness["k_pi"] = direct;
  json sums = json::object();
  for (auto p : pi.primes()) {
    const auto dec = k_pi_by_centralizer_decomposition(g.classes(), pi, p);
    sums[std::to_string(p)] = dec.total;
    if (dec.total != direct) {
      v.witness["sums"] = sums;
      return conclude(v, VerdictStatus::fail, "centralizer sum differs from k_pi");
    }
    const std::uint64_t k_mu = k_pi(g.classes(), dec.mu);
    const std::uint64_t k_p_n =
        k_pi(conjugacy_classes(*dec.argmax_centralizer), PiSet{p});
    if (direct > k_mu * k_p_n) {
      v.witness["sums"] = sums;
      return conclude(v, VerdictStatus::fail, "k_pi > k_mu * k_p(N)");
    }
  }
  v.witness["sums"] = sums;
  return conclude(v, VerdictStatus::pass, "");
}

Verdict verify_hall_average(const GroupUnderTest& g, const PiSet& pi,
                            const SuiteConfig& config) {
  Verdict v = make("hall-average", "hall-average", g, pi);
  if (pi.size() < 2) return conclude(v, VerdictStatus::inapplicable, "|pi| < 2");
  const Rational d = g.profile(pi).d_pi;
  v.witness["d_pi"] = to_string(d);
  json averages = json::object();
  for (auto p : pi.primes()) {
    Rational avg;
    try {
      avg = d_pi_hall_average(g.whole(), pi, p, config.hall);
    } catch (const PreconditionFailed&) {
      continue;
    }
    averages[std::to_string(p)] = to_string(avg);
    if (avg != d) {
      v.witness["averages"] = averages;
      return conclude(v, VerdictStatus::fail, "Hall average differs from d_pi");
    }
  }
  v.witness["averages"] = averages;
  if (averages.empty())
    return conclude(v, VerdictStatus::inapplicable,
                    "no p in pi with an abelian Hall (pi minus p)-subgroup and "
                    "normal complement");
  return conclude(v, VerdictStatus::pass, "");
}

Verdict verify_product_bound(const GroupUnderTest& g, const PiSet& pi,
                             const SuiteConfig& config) {
  Verdict v = make("product-bound", "product-bound", g, pi);
  const ProductBound b = product_lower_bound_check(g.whole(), pi, config.hall);
  if (b.status == BoundStatus::inapplicable)
    return conclude(v, VerdictStatus::inapplicable, "no abelian Hall pi-subgroup found");
  v.witness["product_d_p"] = to_string(b.lhs);
  v.witness["d_pi"] = to_string(b.rhs);
  if (b.status == BoundStatus::violated)
    return conclude(v, VerdictStatus::fail, "product of d_p exceeds d_pi");
  return conclude(v, VerdictStatus::pass, "");
}

Verdict verify_robinson_bound(const GroupUnderTest& g, const PiSet& pi) {
  Verdict v = make("robinson", "robinson-bound", g, pi);
  const RobinsonBound b = robinson_bound(g.whole(), pi);
  v.witness["k_pi"] = b.k_pi;
  v.witness["product"] = to_string(b.product);
  json qs = json::array();
  for (std::size_t i = 0; i < b.q.size(); ++i) {
    json q = subgroup_json(b.q[i]);
    q["prime"] = b.primes[i];
    q["k"] = b.k_q[i];
    qs.push_back(std::move(q));
  }
  v.witness["q"] = std::move(qs);
  if (!b.holds) return conclude(v, VerdictStatus::fail, "k_pi exceeds the product of k(Q_i)");
  return conclude(v, VerdictStatus::pass, "");
}

Verdict verify_normal_p_complement(const GroupUnderTest& g) {
  Verdict v = make("complement", "normal-p-complement", g, std::nullopt);
  const Subgroup& G = g.whole();
  json per_prime = json::object();
  for (auto p : g.primes()) {
    const NormalComplement c = has_normal_p_complement(G, p);
    per_prime[std::to_string(p)] = {{"exists", c.exists},
                                    {"burnside", c.burnside_condition}};
    if (c.burnside_condition && !c.exists) {
      v.witness["primes"] = per_prime;
      v.witness["p"] = p;
      return conclude(v, VerdictStatus::fail,
                      "C_G(P) = N_G(P) but no normal p-complement");
    }
    if (c.exists) {
      const Subgroup& K = *c.complement;
      const PiSet pset{p};
      if (!is_normal(G, K) || !pset.is_pi_prime_number(K.order()) ||
          G.order() / K.order() != pset.part_of(G.order())) {
        v.witness["primes"] = per_prime;
        v.witness["complement"] = subgroup_json(K);
        return conclude(v, VerdictStatus::fail, "returned complement is unsound");
      }
    }
  }
  v.witness["primes"] = per_prime;
  if (g.primes().empty()) return conclude(v, VerdictStatus::vacuous, "trivial group");
  return conclude(v, VerdictStatus::pass, "");
}

Verdict verify_fusion_control(const GroupUnderTest& g) {
  Verdict v = make("fusion", "fusion-control", g, std::nullopt);
  const Subgroup& G = g.whole();
  json checked = json::object();
  for (auto p : g.primes()) {
    const Subgroup P = sylow_subgroup(G, p);
    if (!P.is_abelian()) continue;
    const Subgroup N = normalizer(G, P);
    const Rational dg = g.profile(PiSet{p}).d_pi;
    const Rational dn = d_pi(N, PiSet{p}).d_pi;
    checked[std::to_string(p)] = {{"d_p", to_string(dg)}, {"d_p_normalizer", to_string(dn)}};
    if (dg != dn) {
      v.witness["primes"] = checked;
      return conclude(v, VerdictStatus::fail, "d_p(G) != d_p(N_G(P))");
    }
  }
  v.witness["primes"] = checked;
  if (checked.empty()) return conclude(v, VerdictStatus::vacuous, "no abelian Sylow subgroup");
  return conclude(v, VerdictStatus::pass, "");
}

Verdict verify_expected_value(const GroupUnderTest& g, const PiSet& pi,
                              const Rational& expected) {
  Verdict v = make("expect", "expected-value", g, pi);
  const Rational d = g.profile(pi).d_pi;
  v.witness["d_pi"] = to_string(d);
  v.witness["expected"] = to_string(expected);
  if (d != expected) return conclude(v, VerdictStatus::fail, "d_pi differs from the expected value");
  return conclude(v, VerdictStatus::pass, "");
}

// --- dispatch ----------------------------------------------------------------

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "main",          "structure",    "unit",          "gap",
      "commuting",     "quotient",     "chain",         "decomposition",
      "hall-average",  "product-bound", "robinson",     "complement",
      "fusion",        "expect"};
  return names;
}

bool is_pi_indexed(const std::string& suite) {
  return suite == "main" || suite == "unit" || suite == "gap" ||
         suite == "decomposition" || suite == "hall-average" ||
         suite == "product-bound" || suite == "robinson" || suite == "expect";
}

namespace {

Verdict run_guarded(const std::function<Verdict()>& f, const std::string& suite,
                    const GroupUnderTest& g, const std::optional<PiSet>& pi) {
  const auto t0 = std::chrono::steady_clock::now();
  Verdict v;
  try {
    v = f();
  } catch (const ResourceLimit& e) {
    v = make(suite, suite, g, pi);
    conclude(v, VerdictStatus::partial, std::string("cap reached: ") + e.what());
  }
  v.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return v;
}

}  // namespace

std::vector<Verdict> run_suite(const std::string& suite, const GroupUnderTest& g,
                               const SuiteConfig& config,
                               const std::optional<PiSet>& pi) {
  std::vector<Verdict> out;
  if (is_pi_indexed(suite)) {
    for (const auto& s : pi_sets(g, pi)) {
      std::function<Verdict()> f;
      if (suite == "main") f = [&] { return verify_hall_threshold(g, s, config); };
      else if (suite == "unit") f = [&] { return verify_unit_characterization(g, s, config); };
      else if (suite == "gap") f = [&] { return verify_gap_bound(g, s); };
      else if (suite == "decomposition") f = [&] { return verify_centralizer_decomposition(g, s); };
      else if (suite == "hall-average") f = [&] { return verify_hall_average(g, s, config); };
      else if (suite == "product-bound") f = [&] { return verify_product_bound(g, s, config); };
      else if (suite == "robinson") f = [&] { return verify_robinson_bound(g, s); };
      else {
        if (!config.expected_d)
          throw InvalidArgument("suite 'expect' needs an expected value");
        f = [&] { return verify_expected_value(g, s, *config.expected_d); };
      }
      out.push_back(run_guarded(f, suite, g, s));
    }
    return out;
  }
  std::function<Verdict()> f;
  if (suite == "structure") f = [&] { return verify_d3_structure(g); };
  else if (suite == "commuting") f = [&] { return verify_commuting_threshold(g); };
  else if (suite == "quotient")
    f = [&] { return verify_quotient_submultiplicative(g, pi_sets(g, pi)); };
  else if (suite == "chain") f = [&] { return verify_chain_inequality(g); };
  else if (suite == "complement") f = [&] { return verify_normal_p_complement(g); };
  else if (suite == "fusion") f = [&] { return verify_fusion_control(g); };
  else throw InvalidArgument("unknown suite '" + suite + "'");
  out.push_back(run_guarded(f, suite, g, std::nullopt));
  return out;
}

std::uint64_t CampaignResult::fails() const {
  auto it = counts.find("fail");
  return it == counts.end() ? 0 : it->second;
}

CampaignResult run_campaign(const std::vector<CampaignGroup>& groups,
                            const std::vector<std::string>& suites,
                            const SuiteConfig& config, const Limits& limits,
                            unsigned workers, const std::optional<PiSet>& pi) {
  for (const auto& s : suites) {
    if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end())
      throw InvalidArgument("unknown suite '" + s + "'");
  }
  std::vector<std::vector<Verdict>> per_group(groups.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < groups.size(); i = next++) {
      std::vector<Verdict>& out = per_group[i];
      std::optional<GroupUnderTest> g;
      try {
        g.emplace(groups[i].name, groups[i].group, limits);
      } catch (const ResourceLimit& e) {
        Verdict v;
        v.suite = "setup";
        v.result = "group-setup";
        v.group = groups[i].name;
        v.status = VerdictStatus::partial;
        v.detail = std::string("cap reached: ") + e.what();
        out.push_back(std::move(v));
        continue;
      }
      for (const auto& s : suites) {
        auto vs = run_suite(s, *g, config, pi);
        out.insert(out.end(), std::make_move_iterator(vs.begin()),
                   std::make_move_iterator(vs.end()));
      }
    }
  };
  workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(groups.size())));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  CampaignResult result;
  for (std::size_t i = 0; i < per_group.size(); ++i) {
    for (auto& v : per_group[i]) {
      ++result.counts[to_string(v.status)];
      result.verdicts.push_back(std::move(v));
      result.group_index.push_back(i);
    }
  }
  return result;
}

nlohmann::json to_json(const Verdict& v, bool with_timing) {
  json j{{"suite", v.suite},      {"result", v.result},
         {"group", v.group},      {"pi", v.pi},
         {"status", to_string(v.status)}, {"detail", v.detail},
         {"witness", v.witness}};
  if (with_timing) j["seconds"] = v.seconds;
  return j;
}

}  // namespace picc
