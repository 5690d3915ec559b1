#include "picc/subgroup_engine.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "picc/errors.hpp"

namespace picc {

namespace {

void require_same_parent(const Subgroup& a, const Subgroup& b) {
  if (a.group_ptr() != b.group_ptr())
    throw InvalidArgument("subgroups of different enumerated groups");
}

// Every element of `h` conjugated by y stays inside `target`.
bool conjugates_into(const Subgroup& h, ElementId y, const Subgroup& target) {
  const FiniteGroup& fg = h.group();
  for (ElementId s : h.generators())
    if (!target.contains(fg.conj(s, y))) return false;
  return true;
}

ElementSet conjugate_set(const FiniteGroup& fg, const ElementSet& s, ElementId y) {
  ElementSet out(fg.size());
  s.for_each([&](ElementId x) { out.set(fg.conj(x, y)); });
  return out;
}

}  // namespace

Subgroup join(const Subgroup& a, const Subgroup& b) {
  require_same_parent(a, b);
  if (b.is_subgroup_of(a)) return a;
  if (a.is_subgroup_of(b)) return b;
  Subgroup j = a;
  for (ElementId x : b.generators()) j.extend(x);
  return j;
}

Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  require_same_parent(a, b);
  ElementSet m = a.members();
  m &= b.members();
  return Subgroup::from_members(a.group_ptr(), std::move(m));
}

Subgroup normalizer(const Subgroup& g, const Subgroup& h) {
  require_same_parent(g, h);
  ElementSet m(g.group().size());
  g.members().for_each([&](ElementId y) {
    if (conjugates_into(h, y, h)) m.set(y);
  });
  return Subgroup::from_members(g.group_ptr(), std::move(m));
}

Subgroup centralizer(const Subgroup& g, const Subgroup& h) {
  require_same_parent(g, h);
  const FiniteGroup& fg = g.group();
  ElementSet m(fg.size());
  g.members().for_each([&](ElementId y) {
    for (ElementId s : h.generators())
      if (fg.mul(s, y) != fg.mul(y, s)) return;
    m.set(y);
  });
  return Subgroup::from_members(g.group_ptr(), std::move(m));
}

Subgroup center(const Subgroup& g) { return centralizer(g, g); }

bool is_normal(const Subgroup& g, const Subgroup& h) {
  require_same_parent(g, h);
  if (!h.is_subgroup_of(g)) return false;
  for (ElementId t : g.generators())
    if (!conjugates_into(h, t, h)) return false;
  return true;
}

Subgroup normal_closure(const Subgroup& g, std::span<const ElementId> elements) {
  const FiniteGroup& fg = g.group();
  Subgroup m = Subgroup::generated(g.group_ptr(), elements);
  // The generator list grows as conjugates are absorbed, so the loop also
  // visits the new generators.
  for (std::size_t i = 0; i < m.generators().size(); ++i) {
    const ElementId x = m.generators()[i];
    for (ElementId t : g.generators()) {
      const ElementId c = fg.conj(x, t);
      if (!m.contains(c)) m.extend(c);
    }
  }
  return m;
}

Subgroup normal_closure(const Subgroup& g, const Subgroup& h) {
  require_same_parent(g, h);
  return normal_closure(g, h.generators());
}

Subgroup commutator(const Subgroup& a, const Subgroup& b) {
  require_same_parent(a, b);
  const FiniteGroup& fg = a.group();
  std::vector<ElementId> comms;
  for (ElementId x : a.generators())
    for (ElementId y : b.generators()) {
      const ElementId c = fg.commutator(x, y);
      if (c != FiniteGroup::identity) comms.push_back(c);
    }
  // [A, B] is normal in <A, B> and generated there by the commutators of
  // generators.
  return normal_closure(join(a, b), comms);
}

Subgroup derived_subgroup(const Subgroup& g) { return commutator(g, g); }

std::vector<Subgroup> derived_series(const Subgroup& g) {
  std::vector<Subgroup> series{g};
  while (true) {
    Subgroup next = derived_subgroup(series.back());
    if (next.order() == series.back().order()) break;
    series.push_back(std::move(next));
  }
  return series;
}

bool is_solvable(const Subgroup& g) {
  return derived_series(g).back().is_trivial();
}

std::vector<Subgroup> normal_subgroups(const Subgroup& g) {
  const ClassTable classes = conjugacy_classes(g);
  std::vector<Subgroup> closures;
  std::unordered_set<ElementSet, ElementSetHash> seen_closure;
  for (const auto& c : classes.classes()) {
    if (c.representative == FiniteGroup::identity) continue;
    const ElementId rep[] = {c.representative};
    Subgroup n = normal_closure(g, rep);
    if (seen_closure.insert(n.members()).second) closures.push_back(std::move(n));
  }
  // Every normal subgroup is a join of class closures.
  std::vector<Subgroup> all{Subgroup::trivial(g.group_ptr())};
  std::unordered_set<ElementSet, ElementSetHash> seen{all[0].members()};
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (const auto& c : closures) {
      if (c.is_subgroup_of(all[i])) continue;
      Subgroup j = join(all[i], c);
      if (seen.insert(j.members()).second) all.push_back(std::move(j));
    }
  }
  std::stable_sort(all.begin(), all.end(), [](const Subgroup& a, const Subgroup& b) {
    return a.order() < b.order();
  });
  return all;
}

bool is_simple(const Subgroup& g) {
  return !g.is_trivial() && normal_subgroups(g).size() == 2;
}

// --- quotients ---------------------------------------------------------------

QuotientGroup quotient(const Subgroup& g, const Subgroup& n) {
  require_same_parent(g, n);
  if (!is_normal(g, n))
    throw PreconditionFailed("quotient: subgroup is not normal");
  const FiniteGroup& fg = g.group();
  const std::uint64_t index = g.order() / n.order();
  if (index > fg.limits().quotient_degree_cap)
    throw ResourceLimit("quotient degree cap",
                        "index " + std::to_string(index) + " exceeds " +
                            std::to_string(fg.limits().quotient_degree_cap));
  constexpr std::uint32_t unset = ~std::uint32_t{0};
  std::vector<std::uint32_t> coset_of(fg.size(), unset);
  std::vector<ElementId> reps;
  const std::vector<ElementId> kernel = n.elements();
  g.members().for_each([&](ElementId x) {
    if (coset_of[x] != unset) return;
    const auto c = static_cast<std::uint32_t>(reps.size());
    reps.push_back(x);
    for (ElementId m : kernel) coset_of[fg.mul(x, m)] = c;
  });
  QuotientGroup q{g, n, PermGroup::trivial(1), std::move(coset_of), std::move(reps)};
  std::vector<Permutation> gens;
  for (ElementId s : g.generators()) {
    Permutation p = q.project(s);
    if (!p.is_identity()) gens.push_back(std::move(p));
  }
  q.group = PermGroup(index, std::move(gens));
  return q;
}

Permutation QuotientGroup::project(ElementId x) const {
  if (!source.contains(x)) throw NotMember("quotient: element not in the group");
  const FiniteGroup& fg = source.group();
  std::vector<Point> images(representatives.size());
  for (std::size_t c = 0; c < representatives.size(); ++c)
    images[c] = coset_of[fg.mul(x, representatives[c])];
  return Permutation::from_images_unchecked(std::move(images));
}

// --- Sylow and conjugacy -----------------------------------------------------

Subgroup sylow_subgroup(const Subgroup& g, std::uint64_t p) {
  if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
  const FiniteGroup& fg = g.group();
  const std::uint64_t target = PiSet{p}.part_of(g.order());
  const PiSet pset{p};
  Subgroup sp = Subgroup::trivial(g.group_ptr());
  while (sp.order() < target) {
    const Subgroup n = sp.is_trivial() ? g : normalizer(g, sp);
    std::optional<ElementId> pick;
    n.members().for_each([&](ElementId y) {
      if (pick || sp.contains(y)) return;
      if (pset.is_pi_number(fg.order(y))) pick = y;
    });
    if (!pick) throw std::logic_error("sylow: no p-element in N(P) \\ P");
    sp.extend(*pick);
  }
  return sp;
}

bool is_pi_subgroup(const Subgroup& h, const PiSet& pi) {
  return pi.is_pi_number(h.order());
}

std::optional<ElementId> conjugating_element(const Subgroup& g,
                                             const Subgroup& h1,
                                             const Subgroup& h2) {
  require_same_parent(g, h1);
  require_same_parent(g, h2);
  if (h1.order() != h2.order()) return std::nullopt;
  const FiniteGroup& fg = g.group();
  const Subgroup n = normalizer(g, h1);
  // One representative t per right coset N t; H1^(n t) = H1^t.
  ElementSet covered(fg.size());
  const std::vector<ElementId> nmembers = n.elements();
  std::optional<ElementId> found;
  g.members().for_each([&](ElementId t) {
    if (found || covered.test(t)) return;
    for (ElementId m : nmembers) covered.set(fg.mul(m, t));
    if (conjugates_into(h1, t, h2)) found = t;
  });
  return found;
}

// --- characteristic subgroups ------------------------------------------------

namespace {

// Join of the normal closures of elements whose closure satisfies `keep`.
template <typename Keep>
Subgroup join_of_class_closures(const Subgroup& g, Keep keep) {
  const ClassTable classes = conjugacy_classes(g);
  Subgroup out = Subgroup::trivial(g.group_ptr());
  for (const auto& c : classes.classes()) {
    if (c.representative == FiniteGroup::identity || out.contains(c.representative))
      continue;
    const ElementId rep[] = {c.representative};
    Subgroup n = normal_closure(g, rep);
    if (keep(n)) out = join(out, n);
  }
  return out;
}

}  // namespace

Subgroup o_pi(const Subgroup& g, const PiSet& pi) {
  return join_of_class_closures(
      g, [&](const Subgroup& n) { return pi.is_pi_number(n.order()); });
}

Subgroup o_pi_prime(const Subgroup& g, const PiSet& pi) {
  return join_of_class_closures(
      g, [&](const Subgroup& n) { return pi.is_pi_prime_number(n.order()); });
}

Subgroup fitting_subgroup(const Subgroup& g) {
  Subgroup f = Subgroup::trivial(g.group_ptr());
  for (auto p : prime_divisors(g)) f = join(f, o_pi(g, PiSet{p}));
  return f;
}

Subgroup socle(const Subgroup& g) {
  const std::vector<Subgroup> normals = normal_subgroups(g);
  Subgroup s = Subgroup::trivial(g.group_ptr());
  for (std::size_t i = 1; i < normals.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 1; j < i && minimal; ++j)
      if (normals[j].order() < normals[i].order() &&
          normals[j].is_subgroup_of(normals[i]))
        minimal = false;
    if (minimal) s = join(s, normals[i]);
  }
  return s;
}

std::optional<Subgroup> almost_simple_socle(const Subgroup& g) {
  Subgroup s = socle(g);
  if (s.is_trivial() || s.is_abelian() || !is_simple(s)) return std::nullopt;
  if (!centralizer(g, s).is_trivial()) return std::nullopt;
  return s;
}

// --- subgroup enumeration ----------------------------------------------------

std::vector<SubgroupClass> enumerate_subgroups_up_to_conjugacy(
    const Subgroup& g, std::uint64_t cap, const OrderFilter& filter) {
  if (g.order() > cap)
    throw ResourceLimit("subgroup enumeration cap",
                        "|G| = " + std::to_string(g.order()) + " exceeds " +
                            std::to_string(cap));
  const FiniteGroup& fg = g.group();
  auto accept = [&](std::uint64_t n) { return !filter || filter(n); };

  std::vector<SubgroupClass> classes;
  std::unordered_set<ElementSet, ElementSetHash> known;
  auto add_class = [&](Subgroup h) {
    std::vector<ElementSet> orbit{h.members()};
    known.insert(h.members());
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      for (ElementId t : g.generators()) {
        ElementSet c = conjugate_set(fg, orbit[head], t);
        if (known.insert(c).second) orbit.push_back(std::move(c));
      }
    }
    classes.push_back({std::move(h), orbit.size()});
  };

  add_class(Subgroup::trivial(g.group_ptr()));
  for (std::size_t ci = 0; ci < classes.size(); ++ci) {
    const Subgroup h = classes[ci].representative;
    const std::vector<ElementId> hmembers = h.elements();
    ElementSet tried(fg.size());
    g.members().for_each([&](ElementId x) {
      if (h.contains(x) || tried.test(x) || !accept(fg.order(x))) return;
      // <H, h x^k> = <H, x> whenever gcd(k, o(x)) = 1.
      const std::uint32_t o = fg.order(x);
      ElementId xk = x;
      for (std::uint32_t k = 1; k < o; ++k, xk = fg.mul(xk, x)) {
        if (std::gcd(k, o) != 1) continue;
        for (ElementId m : hmembers) tried.set(fg.mul(m, xk));
      }
      Subgroup k = h.with_generator(x);
      if (!accept(k.order()) || known.count(k.members())) return;
      add_class(std::move(k));
    });
  }
  std::stable_sort(classes.begin(), classes.end(),
                   [](const SubgroupClass& a, const SubgroupClass& b) {
                     return a.representative.order() < b.representative.order();
                   });
  return classes;
}

// --- Hall subgroups ----------------------------------------------------------

std::string to_string(HallStatus s) {
  switch (s) {
    case HallStatus::found: return "found";
    case HallStatus::none_exists: return "none-exists";
    case HallStatus::unresolved: return "unresolved";
  }
  return "?";
}

std::string to_string(HallMethod m) {
  switch (m) {
    case HallMethod::constructive: return "constructive";
    case HallMethod::randomized: return "randomized";
    case HallMethod::exhaustive: return "exhaustive";
  }
  return "?";
}

namespace {

HallSearchOutcome found(Subgroup h, HallMethod method, std::string route,
                        std::uint64_t attempts) {
  return {HallStatus::found, method, std::move(route), std::move(h), attempts};
}

// P_1 Sylow in G, P_2 Sylow in C_G(P_1), P_3 Sylow in C_G(P_1 P_2), ...
std::optional<Subgroup> iterated_centralizer(const Subgroup& g,
                                             const std::vector<std::uint64_t>& primes) {
  Subgroup c = g;
  Subgroup h = Subgroup::trivial(g.group_ptr());
  for (auto p : primes) {
    Subgroup sp = sylow_subgroup(c, p);
    if (sp.order() != PiSet{p}.part_of(g.order())) return std::nullopt;
    h = join(h, sp);
    c = centralizer(c, sp);
  }
  return h;
}

}  // namespace

HallSearchOutcome hall_search(const Subgroup& g, const PiSet& pi,
                              const HallBudget& budget) {
  const FiniteGroup& fg = g.group();
  const std::uint64_t target = pi.part_of(g.order());
  if (target == g.order()) return found(g, HallMethod::constructive, "whole-group", 0);
  if (target == 1)
    return found(Subgroup::trivial(g.group_ptr()), HallMethod::constructive,
                 "trivial", 0);
  const std::vector<std::uint64_t> primes = pi.intersect(prime_divisors(g)).primes();

  if (auto h = iterated_centralizer(g, primes); h && h->order() == target)
    return found(std::move(*h), HallMethod::constructive, "iterated-centralizer", 0);

  std::mt19937_64 rng(budget.seed);
  const std::vector<ElementId> members = g.elements();
  std::uniform_int_distribution<std::size_t> pick(0, members.size() - 1);
  std::uint64_t used = 0;

  // Conjugates of a fixed Sylow tuple; the first attempt is unconjugated.
  std::vector<Subgroup> sylows;
  for (auto p : primes) sylows.push_back(sylow_subgroup(g, p));
  const std::uint64_t tuple_attempts = (budget.attempts + 1) / 2;
  for (std::uint64_t a = 0; a < tuple_attempts; ++a, ++used) {
    std::vector<ElementId> gens;
    for (const auto& sp : sylows) {
      const ElementId t = a == 0 ? FiniteGroup::identity : members[pick(rng)];
      for (ElementId s : sp.generators()) gens.push_back(fg.conj(s, t));
    }
    Subgroup k = Subgroup::generated(g.group_ptr(), gens);
    if (k.order() == target)
      return found(std::move(k), HallMethod::randomized, "sylow-tuple", used + 1);
  }

  // Grow from a random pi-element while the result stays a pi-group.
  std::vector<ElementId> pi_elements;
  for (ElementId x : members)
    if (x != FiniteGroup::identity && pi.is_pi_number(fg.order(x)))
      pi_elements.push_back(x);
  std::uniform_int_distribution<std::size_t> pick_pi(0, pi_elements.size() - 1);
  for (std::uint64_t a = tuple_attempts; a < budget.attempts; ++a, ++used) {
    Subgroup k = Subgroup::trivial(g.group_ptr());
    k.extend(pi_elements[pick_pi(rng)]);
    for (std::size_t step = 0; step < 4 * pi_elements.size() && k.order() < target;
         ++step) {
      const ElementId y = pi_elements[pick_pi(rng)];
      if (k.contains(y)) continue;
      Subgroup k2 = k.with_generator(y);
      if (pi.is_pi_number(k2.order())) k = std::move(k2);
    }
    if (k.order() == target)
      return found(std::move(k), HallMethod::randomized, "random-seed", used + 1);
  }

  if (g.order() <= budget.exhaustive_cap) {
    auto classes = enumerate_subgroups_up_to_conjugacy(
        g, budget.exhaustive_cap,
        [&](std::uint64_t n) { return pi.is_pi_number(n); });
    for (auto& c : classes)
      if (c.representative.order() == target)
        return found(std::move(c.representative), HallMethod::exhaustive,
                     "exhaustive", used);
    return {HallStatus::none_exists, HallMethod::exhaustive, "exhaustive",
            std::nullopt, used};
  }
  return {HallStatus::unresolved, HallMethod::randomized, "budget-exhausted",
          std::nullopt, used};
}

}  // namespace picc
