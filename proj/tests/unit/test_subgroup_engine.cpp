#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "picc/catalog.hpp"
#include "picc/class_engine.hpp"
#include "picc/errors.hpp"
#include "picc/subgroup_engine.hpp"

using namespace picc;

namespace {
Subgroup whole(const char* name) {
  return Subgroup::whole(FiniteGroup::create(build(GroupSpec::parse(name))));
}
Permutation cyc(std::size_t n, std::vector<std::vector<Point>> c) {
  return Permutation::from_cycles(n, c);
}
Subgroup gen(const Subgroup& g, std::vector<Permutation> gens) {
  return Subgroup::generated(g.group_ptr(), gens);
}
std::vector<std::uint64_t> orders(const std::vector<Subgroup>& l) {
  std::vector<std::uint64_t> o;
  for (const auto& s : l) o.push_back(s.order());
  return o;
}
oracle::Set to_oracle(const Subgroup& h, const oracle::Table& t) {
  oracle::Set s;
  for (ElementId x : h.elements()) s.insert(t.index.at(oracle::from(h.group().element(x))));
  return s;
}
}  // namespace

TEST_CASE("closure") {
  const Subgroup s4 = whole("S4");
  CHECK(gen(s4, {}).is_trivial());
  CHECK(gen(s4, {cyc(4, {{0, 1, 2, 3}})}).order() == 4);
  CHECK(gen(s4, {cyc(4, {{0, 1}}), cyc(4, {{0, 1, 2}})}).order() == 6);
  CHECK(gen(s4, {cyc(4, {{0, 1}}), cyc(4, {{0, 1, 2}})}).is_subgroup_of(s4));
}

TEST_CASE("normalizer, centralizer, center") {
  const Subgroup s3 = whole("S3");
  const Subgroup p = gen(s3, {cyc(3, {{0, 1, 2}})});
  CHECK(normalizer(s3, p) == s3);
  CHECK(centralizer(s3, p) == p);
  CHECK(center(s3).is_trivial());
  CHECK(center(whole("D8")).order() == 2);
  CHECK(center(whole("Q8")).order() == 2);
  CHECK(center(whole("C6")).order() == 6);
  const Subgroup s4 = whole("S4");
  const Subgroup t = gen(s4, {cyc(4, {{0, 1}})});
  CHECK(normalizer(s4, t).order() == 4);
  CHECK(centralizer(s4, t).order() == 4);
}

TEST_CASE("commutators and derived series") {
  CHECK(derived_subgroup(whole("C6")).is_trivial());
  CHECK(derived_subgroup(whole("S4")).order() == 12);
  CHECK(orders(derived_series(whole("S4"))) == std::vector<std::uint64_t>{24, 12, 4, 1});
  CHECK(derived_subgroup(whole("A5")).order() == 60);
  CHECK(is_solvable(whole("S4")));
  CHECK_FALSE(is_solvable(whole("A5")));
  const Subgroup s3 = whole("S3");
  const Subgroup p = gen(s3, {cyc(3, {{0, 1, 2}})});
  CHECK(commutator(p, normalizer(s3, p)).order() == 3);
}

TEST_CASE("normal closure") {
  const Subgroup s4 = whole("S4");
  const std::vector<ElementId> id{FiniteGroup::identity};
  CHECK(normal_closure(s4, id).is_trivial());
  const std::vector<ElementId> v{s4.group().index_of(cyc(4, {{0, 1}, {2, 3}}))};
  CHECK(normal_closure(s4, v).order() == 4);
  const Subgroup a5 = whole("A5");
  for (ElementId x : a5.elements()) {
    if (x == FiniteGroup::identity) continue;
    const std::vector<ElementId> s{x};
    CHECK(normal_closure(a5, s) == a5);
  }
}

TEST_CASE("normal subgroups") {
  CHECK(orders(normal_subgroups(whole("S4"))) == std::vector<std::uint64_t>{1, 4, 12, 24});
  CHECK(orders(normal_subgroups(whole("A5"))) == std::vector<std::uint64_t>{1, 60});
  CHECK(normal_subgroups(whole("C6")).size() == 4);
  CHECK(normal_subgroups(whole("S3")).size() == 3);
  CHECK(is_simple(whole("A5")));
  CHECK_FALSE(is_simple(whole("S4")));
  CHECK(is_simple(whole("C5")));
  CHECK_FALSE(is_simple(whole("C1")));
}

TEST_CASE("normal subgroups match the oracle") {
  CensusConfig cc;
  cc.max_order = 120;
  for (const auto& e : census(cc)) {
    CAPTURE(e.name);
    const Subgroup g = Subgroup::whole(FiniteGroup::create(e.group));
    const oracle::Table t(oracle::elements(e.group));
    const oracle::Set all = oracle::generate(t, [&] {
      std::vector<std::uint32_t> v(t.size());
      std::iota(v.begin(), v.end(), 0U);
      return v;
    }());
    std::set<oracle::Set> want;
    for (const auto& s : oracle::all_subgroups(t))
      if (oracle::is_normal(t, all, s)) want.insert(s);
    std::set<oracle::Set> got;
    for (const auto& n : normal_subgroups(g)) got.insert(to_oracle(n, t));
    CHECK(got == want);
  }
}

TEST_CASE("quotients") {
  const Subgroup s4 = whole("S4");
  const Subgroup v4 = normal_subgroups(s4)[1];
  const QuotientGroup q = quotient(s4, v4);
  CHECK(q.group.order() == 6);
  CHECK(conjugacy_classes(q.group).size() == 3);
  for (ElementId a : s4.elements())
    for (ElementId b : s4.elements())
      CHECK(q.project(s4.group().mul(a, b)) == q.project(a) * q.project(b));
  for (ElementId x : v4.elements()) CHECK(q.project(x).is_identity());

  CHECK(quotient(s4, s4).group.order() == 1);
  const QuotientGroup q1 = quotient(s4, Subgroup::trivial(s4.group_ptr()));
  CHECK(q1.group.order() == 24);
  std::vector<std::uint64_t> a, b;
  for (const auto& c : conjugacy_classes(q1.group).classes()) a.push_back(c.size);
  for (const auto& c : conjugacy_classes(s4).classes()) b.push_back(c.size);
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  CHECK(a == b);

  const Subgroup t = gen(s4, {cyc(4, {{0, 1}})});
  CHECK_THROWS_AS(quotient(s4, t), PreconditionFailed);
  Limits lim;
  lim.quotient_degree_cap = 5;
  const Subgroup s4c = Subgroup::whole(FiniteGroup::create(build(GroupSpec::symmetric(4)), lim));
  CHECK_THROWS_AS(quotient(s4c, Subgroup::trivial(s4c.group_ptr())), ResourceLimit);
}

TEST_CASE("quotient orders on the census") {
  CensusConfig cc;
  cc.max_order = 100;
  for (const auto& e : census(cc)) {
    CAPTURE(e.name);
    const Subgroup g = Subgroup::whole(FiniteGroup::create(e.group));
    for (const auto& n : normal_subgroups(g)) {
      const QuotientGroup q = quotient(g, n);
      CHECK(q.group.order() * n.order() == g.order());
    }
  }
}

TEST_CASE("Sylow subgroups") {
  const Subgroup s4 = whole("S4");
  CHECK(sylow_subgroup(s4, 2).order() == 8);
  CHECK(sylow_subgroup(s4, 3).order() == 3);
  CHECK(sylow_subgroup(s4, 5).is_trivial());
  const Subgroup a5 = whole("A5");
  const Subgroup p = sylow_subgroup(a5, 3);
  CHECK(p.order() == 3);
  std::set<std::vector<ElementId>> conjugates;
  for (ElementId g : a5.elements()) {
    std::vector<ElementId> c;
    for (ElementId x : p.elements()) c.push_back(a5.group().conj(x, g));
    std::sort(c.begin(), c.end());
    conjugates.insert(c);
  }
  CHECK(conjugates.size() == 10);
}

TEST_CASE("Sylow subgroups on the census") {
  CensusConfig cc;
  cc.max_order = 400;
  for (const auto& e : census(cc)) {
    CAPTURE(e.name);
    const Subgroup g = Subgroup::whole(FiniteGroup::create(e.group));
    for (auto p : prime_divisors(g)) {
      const Subgroup s = sylow_subgroup(g, p);
      CHECK(s.order() == PiSet{p}.part_of(g.order()));
      CHECK(is_pi_subgroup(s, PiSet{p}));
      // a conjugate by a random element is again conjugate
      const ElementId x = static_cast<ElementId>(g.order() / 2);
      std::vector<ElementId> gens;
      for (ElementId y : s.generators()) gens.push_back(g.group().conj(y, x));
      const Subgroup s2 = Subgroup::generated(g.group_ptr(), gens);
      const auto w = conjugating_element(g, s, s2);
      REQUIRE(w.has_value());
      std::vector<ElementId> img;
      for (ElementId y : s.elements()) CHECK(s2.contains(g.group().conj(y, *w)));
    }
  }
}

TEST_CASE("conjugacy of subgroups") {
  const Subgroup s4 = whole("S4");
  const Subgroup t = gen(s4, {cyc(4, {{0, 1}})});
  const auto same = conjugating_element(s4, t, t);
  REQUIRE(same.has_value());
  CHECK(same == FiniteGroup::identity);
  CHECK(conjugating_element(s4, t, gen(s4, {cyc(4, {{2, 3}})})).has_value());
  CHECK_FALSE(conjugating_element(s4, t, gen(s4, {cyc(4, {{0, 1}, {2, 3}})})).has_value());
  const Subgroup a5 = whole("A5");
  const Subgroup p1 = gen(a5, {cyc(5, {{0, 1, 2}})});
  const Subgroup p2 = gen(a5, {cyc(5, {{2, 3, 4}})});
  const auto w = conjugating_element(a5, p1, p2);
  REQUIRE(w.has_value());
  for (ElementId y : p1.elements()) CHECK(p2.contains(a5.group().conj(y, *w)));
}

TEST_CASE("characteristic subgroups") {
  CHECK(o_pi_prime(whole("S3"), PiSet{3}).is_trivial());
  CHECK(o_pi_prime(whole("S4"), PiSet{3}).order() == 4);
  CHECK(o_pi_prime(whole("S4"), PiSet{2, 3}).is_trivial());
  CHECK(o_pi(whole("S4"), PiSet{2}).order() == 4);
  CHECK(o_pi(whole("D8"), PiSet{2}).order() == 8);
  CHECK(fitting_subgroup(whole("S4")).order() == 4);
  CHECK(fitting_subgroup(whole("D8 x C3")).order() == 24);
  CHECK(fitting_subgroup(whole("A5")).is_trivial());
  CHECK(socle(whole("A5 x C3")).order() == 180);
  CHECK(socle(whole("S4")).order() == 4);
  CHECK(socle(whole("S5")).order() == 60);
  const auto as = almost_simple_socle(whole("S5"));
  REQUIRE(as.has_value());
  CHECK(as->order() == 60);
  CHECK_FALSE(almost_simple_socle(whole("S4")).has_value());
  CHECK_FALSE(almost_simple_socle(whole("A5 x C3")).has_value());
}

TEST_CASE("o_pi_prime contains every normal pi'-subgroup") {
  CensusConfig cc;
  cc.max_order = 200;
  for (const auto& e : census(cc)) {
    CAPTURE(e.name);
    const Subgroup g = Subgroup::whole(FiniteGroup::create(e.group));
    for (auto p : prime_divisors(g)) {
      const PiSet pi{p};
      const Subgroup o = o_pi_prime(g, pi);
      CHECK(is_normal(g, o));
      CHECK(pi.is_pi_prime_number(o.order()));
      for (const auto& n : normal_subgroups(g))
        if (pi.is_pi_prime_number(n.order())) CHECK(n.is_subgroup_of(o));
    }
  }
}

TEST_CASE("subgroup lattice invariants") {
  const Subgroup s4 = whole("S4");
  for (const auto& c : enumerate_subgroups_up_to_conjugacy(s4, 2000)) {
    const Subgroup& h = c.representative;
    CHECK(s4.order() % h.order() == 0);
    const Subgroup n = normalizer(s4, h);
    CHECK(h.is_subgroup_of(n));
    CHECK(is_normal(n, centralizer(s4, h)));
    CHECK(c.conjugates * n.order() == s4.order());
  }
  CHECK(center(s4) == centralizer(s4, s4));
}

TEST_CASE("subgroup classes") {
  CHECK(enumerate_subgroups_up_to_conjugacy(whole("S3"), 2000).size() == 4);
  CHECK(enumerate_subgroups_up_to_conjugacy(whole("S4"), 2000).size() == 11);
  CHECK(enumerate_subgroups_up_to_conjugacy(whole("C1"), 2000).size() == 1);
  CHECK(enumerate_subgroups_up_to_conjugacy(whole("A5"), 2000).size() == 9);
  CHECK_THROWS_AS(enumerate_subgroups_up_to_conjugacy(whole("S5"), 100), ResourceLimit);
  const auto odd = enumerate_subgroups_up_to_conjugacy(
      whole("S4"), 2000, [](std::uint64_t o) { return o % 2 == 1; });
  CHECK(odd.size() == 2);
}

TEST_CASE("total subgroup count matches the oracle") {
  CensusConfig cc;
  cc.max_order = 48;
  for (const auto& e : census(cc)) {
    CAPTURE(e.name);
    const Subgroup g = Subgroup::whole(FiniteGroup::create(e.group));
    std::uint64_t total = 0;
    for (const auto& c : enumerate_subgroups_up_to_conjugacy(g, 2000)) total += c.conjugates;
    const oracle::Table t(oracle::elements(e.group));
    CHECK(total == oracle::all_subgroups(t).size());
  }
}

TEST_CASE("Hall search") {
  const HallBudget budget;
  const auto whole_case = hall_search(whole("D8 x C3"), PiSet{2, 3}, budget);
  CHECK(whole_case.status == HallStatus::found);
  CHECK(whole_case.subgroup->order() == 24);

  const auto none = hall_search(whole("A5"), PiSet{3, 5}, budget);
  CHECK(none.status == HallStatus::none_exists);
  CHECK(none.method == HallMethod::exhaustive);
  CHECK_FALSE(none.subgroup.has_value());

  const auto s4 = hall_search(whole("S4"), PiSet{2}, budget);
  CHECK(s4.status == HallStatus::found);
  CHECK(s4.subgroup->order() == 8);

  HallBudget tight;
  tight.attempts = 0;
  tight.exhaustive_cap = 10;
  const auto unres = hall_search(whole("A5"), PiSet{3, 5}, tight);
  CHECK(unres.status == HallStatus::unresolved);
  CHECK(to_string(HallStatus::none_exists) == "none-exists");
  CHECK(to_string(HallMethod::exhaustive) == "exhaustive");
}

TEST_CASE("Hall search results recheck on the census") {
  CensusConfig cc;
  cc.max_order = 400;
  for (const auto& e : census(cc)) {
    CAPTURE(e.name);
    const Subgroup g = Subgroup::whole(FiniteGroup::create(e.group));
    for (const auto& pi : nonempty_subsets(prime_divisors(g))) {
      CAPTURE(pi.to_string());
      const auto out = hall_search(g, pi, {});
      CHECK(out.status != HallStatus::unresolved);
      if (out.status == HallStatus::found) {
        CHECK(out.subgroup->order() == pi.part_of(g.order()));
        CHECK(is_pi_subgroup(*out.subgroup, pi));
        for (ElementId x : out.subgroup->elements()) CHECK(g.contains(x));
      }
      if (is_solvable(g)) CHECK(out.status == HallStatus::found);
    }
  }
}
