#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "picc/limits.hpp"
#include "picc/perm_group.hpp"

namespace picc {

// Description of a catalog group. Names follow `family[params]` with the
// family letter directly followed by its parameter, and products joined by
// " x ":
//   C<n>   cyclic of order n              (n points)
//   D<2n>  dihedral of order 2n           (n points; D4 is the Klein group)
//   Q8     quaternion, regular action     (8 points)
//   S<n>   symmetric on n points
//   A<n>   alternating on n points
//   "A5 x C3"  direct product on the disjoint union of the factors' points
struct GroupSpec {
  enum class Family { cyclic, dihedral, quaternion, symmetric, alternating, product };

  Family family = Family::cyclic;
  std::uint64_t parameter = 1;
  std::vector<GroupSpec> factors;  // product only

  static GroupSpec cyclic(std::uint64_t n);
  static GroupSpec dihedral(std::uint64_t order);
  static GroupSpec quaternion();
  static GroupSpec symmetric(std::uint64_t n);
  static GroupSpec alternating(std::uint64_t n);
  static GroupSpec product(std::vector<GroupSpec> factors);

  // Throws InvalidArgument on an unknown family or bad parameter.
  static GroupSpec parse(std::string_view name);

  std::string name() const;
  // Closed-form order without building anything.
  BigInt expected_order() const;
  std::size_t degree() const;
};

// Throws InvalidArgument on invalid parameters and ResourceLimit("degree
// cap") when the action would need more than limits.max_degree points.
PermGroup build(const GroupSpec& spec, const Limits& limits = {});

// Direct product acting on the disjoint union of the factors' points.
PermGroup direct_product(const std::vector<PermGroup>& factors);

// --- GroupFile -------------------------------------------------------------
//
//   # comment                      ('#' to end of line, anywhere)
//   degree <n>                     first non-blank line
//   (0 1 2)(3 4)                   one generator per line, 0-based points,
//   ()                             disjoint cycles; "()" is the identity
//
// Errors carry the 1-based line number.
PermGroup parse_group_file(std::string_view text, const Limits& limits = {});
PermGroup read_group_file(const std::string& path, const Limits& limits = {});

// Canonical form: "degree n" then each generator in canonical cycle
// notation, in the original generator order, newline terminated.
std::string serialize_group_file(const PermGroup& g);

// --- Census ----------------------------------------------------------------

struct CensusConfig {
  std::vector<std::uint64_t> cyclic{1, 2, 3, 4, 5, 6, 7};
  std::vector<std::uint64_t> dihedral{6, 8, 10, 12};
  bool quaternion = true;
  std::vector<std::uint64_t> symmetric{3, 4, 5};
  std::vector<std::uint64_t> alternating{4, 5};
  bool products = true;
  // Every listed group, factor or product, has order at most this.
  std::uint64_t max_order = 2000;
};

struct CensusEntry {
  std::string name;
  GroupSpec spec;
  PermGroup group;
};

// Families in the order cyclic, dihedral, quaternion, symmetric,
// alternating, then for every pair A, B of non-trivial family groups with A
// listed no later than B and |A||B| <= max_order, the product "B x A" (so
// "D8 x C3", "A5 x C3").
std::vector<CensusEntry> census(const CensusConfig& config = {},
                                const Limits& limits = {});

}  // namespace picc
