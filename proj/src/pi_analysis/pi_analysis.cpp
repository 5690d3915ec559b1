#include "picc/pi_analysis.hpp"

#include <algorithm>

#include "picc/errors.hpp"

namespace picc {

BigInt pi_part_of_integer(const BigInt& n, const PiSet& pi) {
  return pi.part_of(n);
}

PiProfile d_pi(const ClassTable& table, const PiSet& pi) {
  PiProfile out;
  out.pi = pi;
  out.k_pi = k_pi(table, pi);
  out.order_pi = pi.part_of(table.group().order());
  out.d_pi = make_rational(out.k_pi, out.order_pi);
  return out;
}

PiProfile d_pi(const Subgroup& g, const PiSet& pi) {
  return d_pi(conjugacy_classes(g), pi);
}

Rational commuting_probability(const ClassTable& table) {
  return make_rational(table.size(), table.group().order());
}

CentralizerDecomposition k_pi_by_centralizer_decomposition(const ClassTable& table,
                                                           const PiSet& pi,
                                                           std::uint64_t p) {
  if (!pi.contains(p)) throw InvalidArgument("decomposition: p is not in pi");
  CentralizerDecomposition out;
  out.mu = pi.without(p);
  if (out.mu.empty()) throw InvalidArgument("decomposition: pi \\ {p} is empty");
  const Subgroup& g = table.group();
  const PiSet pset{p};
  std::uint64_t best = 0;
  for (const auto& c : table.classes()) {
    if (!out.mu.is_pi_number(c.element_order)) continue;
    Subgroup cx = centralizer_of_element(g, c.representative);
    const std::uint64_t kp = k_pi(conjugacy_classes(cx), pset);
    out.summands.push_back({c.representative, kp});
    out.total += kp;
    if (kp > best) {
      best = kp;
      out.argmax = out.summands.size() - 1;
      out.argmax_centralizer = std::move(cx);
    }
  }
  return out;
}

NormalComplement normal_pi_complement(const Subgroup& g, const PiSet& pi) {
  const FiniteGroup& fg = g.group();
  std::vector<ElementId> prime_elements;
  g.members().for_each([&](ElementId x) {
    if (pi.is_pi_prime_number(fg.order(x))) prime_elements.push_back(x);
  });
  NormalComplement out;
  const std::uint64_t want = g.order() / pi.part_of(g.order());
  if (prime_elements.size() != want) return out;
  Subgroup k = Subgroup::generated(g.group_ptr(), prime_elements);
  if (k.order() != want) return out;
  out.exists = true;
  out.complement = std::move(k);
  return out;
}

NormalComplement has_normal_p_complement(const Subgroup& g, std::uint64_t p) {
  NormalComplement out = normal_pi_complement(g, PiSet{p});
  const Subgroup sp = sylow_subgroup(g, p);
  out.burnside_condition = centralizer(g, sp) == normalizer(g, sp);
  return out;
}

Rational d_pi_hall_average(const Subgroup& g, const PiSet& pi, std::uint64_t p,
                           const HallBudget& budget) {
  if (!pi.contains(p)) throw InvalidArgument("hall average: p is not in pi");
  const PiSet mu = pi.without(p);
  if (mu.empty()) throw InvalidArgument("hall average: pi \\ {p} is empty");
  const ClassTable table = conjugacy_classes(g);
  if (d_pi(table, mu).d_pi != 1)
    throw PreconditionFailed("hall average: d_mu(G) != 1");
  if (!normal_pi_complement(g, mu).exists)
    throw PreconditionFailed("hall average: no normal mu-complement");
  const HallSearchOutcome hall = hall_search(g, mu, budget);
  if (hall.status != HallStatus::found || !hall.subgroup->is_abelian())
    throw PreconditionFailed("hall average: no abelian Hall mu-subgroup");

  const PiSet pset{p};
  const std::uint64_t gp = pset.part_of(g.order());
  Rational sum = 0;
  hall.subgroup->members().for_each([&](ElementId h) {
    const Subgroup c = centralizer_of_element(g, h);
    sum += make_rational(k_pi(conjugacy_classes(c), pset), gp);
  });
  return sum / hall.subgroup->order();
}

ProductBound product_lower_bound_check(const Subgroup& g, const PiSet& pi,
                                       const HallBudget& budget) {
  ProductBound out;
  const HallSearchOutcome hall = hall_search(g, pi, budget);
  if (hall.status != HallStatus::found || !hall.subgroup->is_abelian()) return out;
  const ClassTable table = conjugacy_classes(g);
  out.lhs = 1;
  for (auto p : pi.primes()) out.lhs *= d_pi(table, PiSet{p}).d_pi;
  out.rhs = d_pi(table, pi).d_pi;
  out.status = out.lhs <= out.rhs ? BoundStatus::holds : BoundStatus::violated;
  return out;
}

RobinsonBound robinson_bound(const Subgroup& g, const PiSet& pi) {
  RobinsonBound out;
  out.primes = pi.intersect(prime_divisors(g)).primes();
  std::reverse(out.primes.begin(), out.primes.end());
  const ClassTable table = conjugacy_classes(g);
  out.k_pi = k_pi(table, pi);

  for (std::size_t i = 0; i < out.primes.size(); ++i) {
    const std::uint64_t p = out.primes[i];
    std::vector<std::uint64_t> rest(out.primes.begin() + static_cast<std::ptrdiff_t>(i),
                                    out.primes.end());
    Subgroup n = g;
    if (rest.size() > 1) {
      const auto dec = k_pi_by_centralizer_decomposition(table, PiSet(rest), p);
      n = *dec.argmax_centralizer;
    }
    Subgroup q = sylow_subgroup(n, p);
    out.k_q.push_back(conjugacy_classes(q).size());
    out.product *= out.k_q.back();
    out.q.push_back(std::move(q));
  }
  out.holds = BigInt(out.k_pi) <= out.product;
  return out;
}

}  // namespace picc
