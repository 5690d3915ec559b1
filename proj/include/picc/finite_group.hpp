#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "picc/element_set.hpp"
#include "picc/limits.hpp"
#include "picc/perm_group.hpp"
#include "picc/permutation.hpp"

namespace picc {

using ElementId = std::uint32_t;

// A permutation group with its elements listed and indexed. Element 0 is
// the identity; the listing order is the BSGS traversal order. Groups up to
// Limits::cayley_table_cap also carry a full multiplication table, built
// column by column from the Cayley graph (col(e*s) = col(s) o col(e)), so
// products and conjugates become table lookups.
//
// Immutable after create(); safe to share across threads.
class FiniteGroup {
 public:
  static constexpr ElementId identity = 0;

  // Throws ResourceLimit("element enumeration cap") if |G| is too large.
  static std::shared_ptr<const FiniteGroup> create(const PermGroup& g,
                                                   const Limits& limits = {});

  const PermGroup& perm_group() const noexcept { return group_; }
  const Limits& limits() const noexcept { return limits_; }
  std::size_t size() const noexcept { return elements_.size(); }
  std::size_t degree() const noexcept { return group_.degree(); }

  const Permutation& element(ElementId i) const { return elements_[i]; }
  std::optional<ElementId> find(const Permutation& p) const;
  // Throws NotMember.
  ElementId index_of(const Permutation& p) const;

  // Indices of the non-identity generators of perm_group().
  std::span<const ElementId> generators() const noexcept { return generators_; }

  ElementId inverse(ElementId i) const { return inverse_[i]; }
  std::uint32_t order(ElementId i) const { return order_[i]; }
  // Rank of the element's image sequence in lexicographic order.
  std::uint32_t lex_rank(ElementId i) const { return lex_rank_[i]; }

  ElementId mul(ElementId a, ElementId b) const;
  // g^-1 * x * g
  ElementId conj(ElementId x, ElementId g) const;
  // a^-1 * b^-1 * a * b
  ElementId commutator(ElementId a, ElementId b) const;
  ElementId power(ElementId x, std::int64_t k) const;

  bool has_cayley_table() const noexcept { return !table_.empty(); }

 private:
  FiniteGroup(PermGroup g, const Limits& limits);
  void build_cayley_table();

  PermGroup group_;
  Limits limits_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, ElementId, PermutationHash> index_;
  std::vector<ElementId> generators_;
  std::vector<ElementId> inverse_;
  std::vector<std::uint32_t> order_;
  std::vector<std::uint32_t> lex_rank_;
  // table_[b * n + a] = a * b
  std::vector<ElementId> table_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

// A subgroup of an enumerated group: its member set plus a generating set
// (elements of the parent). Value type; order and member set are computed
// once at construction.
class Subgroup {
 public:
  static Subgroup whole(GroupPtr g);
  static Subgroup trivial(GroupPtr g);
  // Smallest subgroup containing `gens`. Redundant generators are dropped.
  static Subgroup generated(GroupPtr g, std::span<const ElementId> gens);
  static Subgroup generated(GroupPtr g, const std::vector<Permutation>& gens);
  // `members` must already be a subgroup; a generating set is chosen
  // greedily. Throws InvalidArgument if the set is not closed.
  static Subgroup from_members(GroupPtr g, ElementSet members);

  // <this, x>
  Subgroup with_generator(ElementId x) const;
  // In-place form of with_generator.
  void extend(ElementId x) { absorb(x); }

  const FiniteGroup& group() const noexcept { return *group_; }
  const GroupPtr& group_ptr() const noexcept { return group_; }
  const ElementSet& members() const noexcept { return members_; }
  const std::vector<ElementId>& generators() const noexcept { return gens_; }
  std::uint64_t order() const noexcept { return order_; }

  bool contains(ElementId x) const { return members_.test(x); }
  bool contains(const Permutation& p) const;
  bool is_trivial() const noexcept { return order_ == 1; }
  bool is_subgroup_of(const Subgroup& other) const {
    return members_.is_subset_of(other.members_);
  }

  std::vector<ElementId> elements() const { return members_.to_vector(); }
  std::vector<Permutation> generator_permutations() const;
  // The subgroup as a standalone permutation group on the parent's points.
  PermGroup as_perm_group() const;

  bool is_abelian() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.members_ == b.members_;
  }

 private:
  Subgroup(GroupPtr g, ElementSet members, std::vector<ElementId> gens);
  void absorb(ElementId x);

  GroupPtr group_;
  ElementSet members_;
  std::vector<ElementId> gens_;
  std::uint64_t order_ = 1;
};

}  // namespace picc
