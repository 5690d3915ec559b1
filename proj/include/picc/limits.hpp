#pragma once

#include <cstdint>

namespace picc {

// Resource caps. Exceeding any of them raises ResourceLimit naming the cap.
struct Limits {
  std::uint64_t max_degree = 128;
  // Largest group whose elements may be listed exhaustively.
  std::uint64_t element_cap = 100'000;
  // Largest group for exhaustive subgroup enumeration.
  std::uint64_t subgroup_cap = 2'000;
  // Largest coset action built for a quotient.
  std::uint64_t quotient_degree_cap = 2'000;
  // Groups up to this order get a full Cayley table (n^2 words).
  std::uint64_t cayley_table_cap = 2'048;
};

}  // namespace picc
