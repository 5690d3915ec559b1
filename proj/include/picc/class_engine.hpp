#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "picc/finite_group.hpp"
#include "picc/numeric.hpp"

namespace picc {

// A finite set of primes with set semantics (sorted, no duplicates).
class PiSet {
 public:
  PiSet() = default;
  // Throws InvalidArgument if an entry is not prime.
  PiSet(std::initializer_list<std::uint64_t> primes);
  explicit PiSet(std::vector<std::uint64_t> primes);

  // "2,3" or "{2,3}" or "2 3"; throws InvalidArgument.
  static PiSet parse(std::string_view text);

  const std::vector<std::uint64_t>& primes() const noexcept { return primes_; }
  bool empty() const noexcept { return primes_.empty(); }
  std::size_t size() const noexcept { return primes_.size(); }
  bool contains(std::uint64_t p) const;

  // true iff every prime factor of n lies in the set (1 is a pi-number)
  bool is_pi_number(std::uint64_t n) const;
  bool is_pi_prime_number(std::uint64_t n) const;  // no prime factor in the set
  // Largest divisor of n composed of primes in the set.
  BigInt part_of(const BigInt& n) const;
  std::uint64_t part_of(std::uint64_t n) const;

  PiSet without(std::uint64_t p) const;
  PiSet intersect(const std::vector<std::uint64_t>& primes) const;
  bool is_subset_of(const PiSet& other) const;

  // "{2,3}"
  std::string to_string() const;

  friend bool operator==(const PiSet&, const PiSet&) = default;
  friend auto operator<=>(const PiSet&, const PiSet&) = default;

 private:
  std::vector<std::uint64_t> primes_;
};

// All non-empty subsets of `primes`, ordered by size then lexicographically.
std::vector<PiSet> nonempty_subsets(const std::vector<std::uint64_t>& primes);

// pi(G): the primes dividing |G|.
std::vector<std::uint64_t> prime_divisors(const Subgroup& g);

struct ConjugacyClass {
  ElementId representative;  // lexicographically least image sequence
  std::uint64_t size;
  std::uint32_t element_order;
};

// Conjugacy classes of a group (possibly a subgroup of an enumerated
// parent), sorted by representative. Class 0 is the identity class.
class ClassTable {
 public:
  const Subgroup& group() const noexcept { return group_; }
  std::size_t size() const noexcept { return classes_.size(); }
  const ConjugacyClass& operator[](std::size_t i) const { return classes_[i]; }
  const std::vector<ConjugacyClass>& classes() const noexcept { return classes_; }

  // Class index of a member of group(); throws NotMember otherwise.
  std::size_t class_of(ElementId x) const;
  std::size_t class_of(const Permutation& p) const;
  const Permutation& representative(std::size_t i) const;

 private:
  friend ClassTable conjugacy_classes(const Subgroup& g);
  explicit ClassTable(Subgroup g) : group_(std::move(g)) {}

  Subgroup group_;
  std::vector<ConjugacyClass> classes_;
  std::vector<std::int32_t> class_of_;
};

// Orbits of the conjugation action of the generators on the element list.
ClassTable conjugacy_classes(const Subgroup& g);
ClassTable conjugacy_classes(const PermGroup& g, const Limits& limits = {});

// C_G(x) as the stabilizer of x under conjugation: orbit of x with a
// transversal, Schreier generators absorbed only when they enlarge the
// current subgroup. Throws NotMember if x is not in g.
Subgroup centralizer_of_element(const Subgroup& g, ElementId x);
// Same subgroup by filtering every element of g.
Subgroup centralizer_of_element_by_filter(const Subgroup& g, ElementId x);

bool is_pi_element(const Permutation& x, const PiSet& pi);

// (x_pi, x_pi') with x = x_pi * x_pi' = x_pi' * x_pi, both powers of x.
std::pair<Permutation, Permutation> pi_part_of_element(const Permutation& x,
                                                       const PiSet& pi);

// Number of classes of pi-elements.
std::uint64_t k_pi(const ClassTable& table, const PiSet& pi);
std::uint64_t k_pi(const Subgroup& g, const PiSet& pi);

}  // namespace picc
