#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "picc/class_engine.hpp"
#include "picc/finite_group.hpp"

namespace picc {

// Every operation takes the ambient group G as a Subgroup of an enumerated
// parent, so the same code runs inside any subgroup of the table. Arguments
// that are subgroups of G must share G's parent.

Subgroup join(const Subgroup& a, const Subgroup& b);
Subgroup intersection(const Subgroup& a, const Subgroup& b);

// N_G(H) and C_G(H) by filtering the elements of G.
Subgroup normalizer(const Subgroup& g, const Subgroup& h);
Subgroup centralizer(const Subgroup& g, const Subgroup& h);
Subgroup center(const Subgroup& g);

bool is_normal(const Subgroup& g, const Subgroup& h);

// Smallest normal subgroup of G containing the given elements.
Subgroup normal_closure(const Subgroup& g, std::span<const ElementId> elements);
Subgroup normal_closure(const Subgroup& g, const Subgroup& h);

// [A, B] = < [a, b] : a in A, b in B >
Subgroup commutator(const Subgroup& a, const Subgroup& b);
Subgroup derived_subgroup(const Subgroup& g);
// G = G^(0) > G^(1) > ... until it stabilizes.
std::vector<Subgroup> derived_series(const Subgroup& g);
bool is_solvable(const Subgroup& g);

// All normal subgroups, ordered by order (ties by discovery order). The
// first is 1 and the last is G.
std::vector<Subgroup> normal_subgroups(const Subgroup& g);
bool is_simple(const Subgroup& g);

// G/N acting on the left cosets of N by left multiplication.
struct QuotientGroup {
  Subgroup source;
  Subgroup kernel;
  PermGroup group;
  // coset_of[x] for every x in source (other entries unused)
  std::vector<std::uint32_t> coset_of;
  std::vector<ElementId> representatives;

  // Image of x in G/N as a permutation of the cosets.
  Permutation project(ElementId x) const;
};

// Throws PreconditionFailed if N is not normal in G and ResourceLimit
// ("quotient degree cap") if |G:N| is too large.
QuotientGroup quotient(const Subgroup& g, const Subgroup& n);

// Some Sylow p-subgroup: a p-element is added from N_G(P) \ P until |P|
// reaches |G|_p. Deterministic.
Subgroup sylow_subgroup(const Subgroup& g, std::uint64_t p);

bool is_pi_subgroup(const Subgroup& h, const PiSet& pi);

// Some g in G with H1^g = H2, or nothing.
std::optional<ElementId> conjugating_element(const Subgroup& g,
                                             const Subgroup& h1,
                                             const Subgroup& h2);

// Largest normal pi-subgroup and largest normal pi'-subgroup.
Subgroup o_pi(const Subgroup& g, const PiSet& pi);
Subgroup o_pi_prime(const Subgroup& g, const PiSet& pi);
Subgroup fitting_subgroup(const Subgroup& g);
// Product of the minimal normal subgroups (1 for the trivial group).
Subgroup socle(const Subgroup& g);
// The socle S when S is non-abelian simple and C_G(S) = 1.
std::optional<Subgroup> almost_simple_socle(const Subgroup& g);

// --- subgroup enumeration --------------------------------------------------

struct SubgroupClass {
  Subgroup representative;
  std::uint64_t conjugates;
};

// Accepts a candidate subgroup order. Must be divisor-closed: if it accepts
// n it accepts every divisor of n.
using OrderFilter = std::function<bool(std::uint64_t)>;

// Conjugacy classes of subgroups by cyclic extension: each representative H
// is extended by every g outside H, skipping g whose extension was already
// produced by a generator of the same cyclic group modulo H. Classes are
// ordered by subgroup order. Throws ResourceLimit("subgroup enumeration
// cap") if |G| > cap.
std::vector<SubgroupClass> enumerate_subgroups_up_to_conjugacy(
    const Subgroup& g, std::uint64_t cap, const OrderFilter& filter = {});

// --- Hall subgroups ---------------------------------------------------------

enum class HallStatus { found, none_exists, unresolved };
enum class HallMethod { constructive, randomized, exhaustive };

struct HallBudget {
  std::uint64_t attempts = 64;
  std::uint64_t seed = 1;
  // Largest |G| for the exhaustive tier.
  std::uint64_t exhaustive_cap = 2'000;
};

struct HallSearchOutcome {
  HallStatus status = HallStatus::unresolved;
  HallMethod method = HallMethod::constructive;
  std::string route;
  std::optional<Subgroup> subgroup;
  std::uint64_t attempts_used = 0;
};

std::string to_string(HallStatus s);
std::string to_string(HallMethod m);

// A pi-subgroup of order |G|_pi. Tier 1 tries the trivial cases, the
// iterated-centralizer construction, then randomized routes within the
// budget. Tier 2 enumerates pi-subgroups up to conjugacy when |G| is within
// exhaustive_cap and so can prove non-existence. Otherwise unresolved.
HallSearchOutcome hall_search(const Subgroup& g, const PiSet& pi,
                              const HallBudget& budget = {});

}  // namespace picc
