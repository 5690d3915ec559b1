// Compiled with -mavx2 on x86-64 only; callers reach these functions solely
// through avx2_kernels(), which checks CPU support first.

#include "picc/kernels.hpp"

#if defined(__AVX2__)
#include <immintrin.h>

#include <bit>

namespace picc::kernels {
namespace {

void gather(const std::uint32_t* table, const std::uint32_t* index,
            std::uint32_t* out, std::size_t n) {
  std::size_t i = 0;
  const auto* base = reinterpret_cast<const int*>(table);
  for (; i + 8 <= n; i += 8) {
    __m256i idx =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(index + i));
    __m256i v = _mm256_i32gather_epi32(base, idx, 4);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), v);
  }
  for (; i < n; ++i) out[i] = table[index[i]];
}

bool equal(const std::uint32_t* a, const std::uint32_t* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    __m256i diff = _mm256_xor_si256(va, vb);
    if (!_mm256_testz_si256(diff, diff)) return false;
  }
  for (; i < n; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

bool is_iota(const std::uint32_t* a, std::size_t n) {
  std::size_t i = 0;
  __m256i lanes = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
  const __m256i step = _mm256_set1_epi32(8);
  for (; i + 8 <= n; i += 8) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i diff = _mm256_xor_si256(va, lanes);
    if (!_mm256_testz_si256(diff, diff)) return false;
    lanes = _mm256_add_epi32(lanes, step);
  }
  for (; i < n; ++i)
    if (a[i] != i) return false;
  return true;
}

// Nibble lookup popcount over 256-bit blocks, horizontal sums via SAD.
inline __m256i popcount_bytes(__m256i v) {
  const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3,
                                       3, 4, 0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3,
                                       2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  __m256i lo = _mm256_and_si256(v, low_mask);
  __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
  return _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo),
                         _mm256_shuffle_epi8(lut, hi));
}

inline std::size_t horizontal_sum(__m256i acc) {
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  return static_cast<std::size_t>(lanes[0] + lanes[1] + lanes[2] + lanes[3]);
}

std::size_t popcount(const std::uint64_t* words, std::size_t n) {
  std::size_t i = 0;
  __m256i acc = _mm256_setzero_si256();
  for (; i + 4 <= n; i += 4) {
    __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(words + i));
    acc = _mm256_add_epi64(
        acc, _mm256_sad_epu8(popcount_bytes(v), _mm256_setzero_si256()));
  }
  std::size_t total = horizontal_sum(acc);
  for (; i < n; ++i) total += std::popcount(words[i]);
  return total;
}

std::size_t and_popcount(const std::uint64_t* a, const std::uint64_t* b,
                         std::size_t n) {
  std::size_t i = 0;
  __m256i acc = _mm256_setzero_si256();
  for (; i + 4 <= n; i += 4) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    acc = _mm256_add_epi64(
        acc, _mm256_sad_epu8(popcount_bytes(_mm256_and_si256(va, vb)),
                             _mm256_setzero_si256()));
  }
  std::size_t total = horizontal_sum(acc);
  for (; i < n; ++i) total += std::popcount(a[i] & b[i]);
  return total;
}

bool is_subset(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    // testc(b, a) == 1 iff (~b & a) == 0
    if (!_mm256_testc_si256(vb, va)) return false;
  }
  for (; i < n; ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

void or_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    auto* d = reinterpret_cast<__m256i*>(dst + i);
    __m256i v = _mm256_or_si256(
        _mm256_loadu_si256(d),
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i)));
    _mm256_storeu_si256(d, v);
  }
  for (; i < n; ++i) dst[i] |= src[i];
}

void and_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    auto* d = reinterpret_cast<__m256i*>(dst + i);
    __m256i v = _mm256_and_si256(
        _mm256_loadu_si256(d),
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i)));
    _mm256_storeu_si256(d, v);
  }
  for (; i < n; ++i) dst[i] &= src[i];
}

}  // namespace

const KernelTable* avx2_kernels_compiled() {
  static const KernelTable table{Isa::avx2, gather,       equal,
                                 is_iota,    popcount,     and_popcount,
                                 is_subset,  or_into,      and_into};
  return &table;
}

}  // namespace picc::kernels

#else

namespace picc::kernels {
const KernelTable* avx2_kernels_compiled() { return nullptr; }
}  // namespace picc::kernels

#endif
