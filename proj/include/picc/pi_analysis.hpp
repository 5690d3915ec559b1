#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "picc/class_engine.hpp"
#include "picc/numeric.hpp"
#include "picc/subgroup_engine.hpp"

namespace picc {

BigInt pi_part_of_integer(const BigInt& n, const PiSet& pi);

struct PiProfile {
  PiSet pi;
  std::uint64_t k_pi = 0;
  std::uint64_t order_pi = 1;
  Rational d_pi;
};

// k_pi(G) / |G|_pi, exact. The table may belong to any subgroup.
PiProfile d_pi(const ClassTable& table, const PiSet& pi);
PiProfile d_pi(const Subgroup& g, const PiSet& pi);
// d(G) = k(G) / |G|
Rational commuting_probability(const ClassTable& table);

struct DecompositionSummand {
  ElementId representative;  // of a mu-class of G
  std::uint64_t k_p;         // k_p(C_G(representative))
};

struct CentralizerDecomposition {
  PiSet mu;
  std::vector<DecompositionSummand> summands;
  std::uint64_t total = 0;
  // index of the largest summand and its centralizer N, so that
  // k_pi(G) <= k_mu(G) * k_p(N)
  std::size_t argmax = 0;
  std::optional<Subgroup> argmax_centralizer;
};

// Sum over mu-class representatives x of k_p(C_G(x)), mu = pi \ {p}.
// Throws InvalidArgument if p is not in pi or mu is empty.
CentralizerDecomposition k_pi_by_centralizer_decomposition(const ClassTable& table,
                                                           const PiSet& pi,
                                                           std::uint64_t p);

// (1/|H|) sum_{h in H} k_p(C_G(h)) / |G|_p for an abelian Hall mu-subgroup
// H. Throws PreconditionFailed unless d_mu(G) = 1, G has a normal
// mu-complement and the Hall mu-subgroup found is abelian.
Rational d_pi_hall_average(const Subgroup& g, const PiSet& pi, std::uint64_t p,
                           const HallBudget& budget = {});

enum class BoundStatus { holds, violated, inapplicable };

struct ProductBound {
  BoundStatus status = BoundStatus::inapplicable;
  Rational lhs;  // product of d_p over p in pi
  Rational rhs;  // d_pi
};

// Applies only when an abelian Hall pi-subgroup is found.
ProductBound product_lower_bound_check(const Subgroup& g, const PiSet& pi,
                                       const HallBudget& budget = {});

struct RobinsonBound {
  std::vector<std::uint64_t> primes;  // pi meet pi(G), descending
  std::vector<Subgroup> q;            // q[i] is a p_i-group
  std::vector<std::uint64_t> k_q;     // k(q[i])
  std::uint64_t k_pi = 0;
  BigInt product = 1;
  bool holds = false;
};

// Peels the largest remaining prime p with the centralizer decomposition,
// moves to the maximizing centralizer N and takes Q = Sylow_p(N).
RobinsonBound robinson_bound(const Subgroup& g, const PiSet& pi);

struct NormalComplement {
  bool exists = false;
  std::optional<Subgroup> complement;
  // C_G(P) = N_G(P) for a Sylow p-subgroup P (p-complement only).
  bool burnside_condition = false;
};

// The pi'-elements form a subgroup of order |G|/|G|_pi.
NormalComplement normal_pi_complement(const Subgroup& g, const PiSet& pi);
NormalComplement has_normal_p_complement(const Subgroup& g, std::uint64_t p);

}  // namespace picc
