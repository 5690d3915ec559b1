#pragma once

// Data-parallel inner loops used by the permutation and element-set layers.
//
// Every kernel has a portable scalar reference implementation. On x86-64 an
// AVX2 variant is compiled into a separate translation unit and selected at
// runtime when the CPU supports it. Setting PICC_ISA=scalar in the
// environment forces the reference path. The equivalence of the variants is
// checked by tests/unit/test_kernels.cpp.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace picc::kernels {

enum class Isa { scalar, avx2 };

struct KernelTable {
  Isa isa;
  // out[i] = table[index[i]] for i < n. This is permutation composition when
  // `table` and `index` are image arrays.
  void (*gather)(const std::uint32_t* table, const std::uint32_t* index,
                 std::uint32_t* out, std::size_t n);
  bool (*equal)(const std::uint32_t* a, const std::uint32_t* b, std::size_t n);
  // true iff a[i] == i for all i < n
  bool (*is_iota)(const std::uint32_t* a, std::size_t n);

  std::size_t (*popcount)(const std::uint64_t* words, std::size_t n);
  std::size_t (*and_popcount)(const std::uint64_t* a, const std::uint64_t* b,
                              std::size_t n);
  // true iff every bit of a is also set in b
  bool (*is_subset)(const std::uint64_t* a, const std::uint64_t* b,
                    std::size_t n);
  void (*or_into)(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);
  void (*and_into)(std::uint64_t* dst, const std::uint64_t* src,
                   std::size_t n);
};

const KernelTable& scalar_kernels();

// nullptr when the variant was not compiled in or the CPU lacks support.
const KernelTable* avx2_kernels();

// The table chosen for this process (first call decides).
const KernelTable& active();

// Overrides the process-wide choice. Throws picc::InvalidArgument when the
// requested variant is unavailable.
void select(Isa isa);

std::string_view isa_name(Isa isa);

}  // namespace picc::kernels
