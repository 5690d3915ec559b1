#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "picc/numeric.hpp"

namespace picc {

using Point = std::uint32_t;

// A bijection on {0, ..., degree-1} stored as its image sequence.
//
// Composition convention, used everywhere in the library:
//   (a * b)(x) = a(b(x))
// i.e. the right factor acts first. Conjugation is x^g = g^-1 * x * g and
// commutators are [a, b] = a^-1 * b^-1 * a * b.
class Permutation {
 public:
  Permutation() = default;

  // Identity on `degree` points.
  explicit Permutation(std::size_t degree);

  // Validates that `images` is a bijection; throws InvalidPermutation.
  explicit Permutation(std::vector<Point> images);

  // Skips validation. For callers that construct images from other
  // permutations.
  static Permutation from_images_unchecked(std::vector<Point> images);

  // Disjoint (or not) cycles are applied right to left, matching compose().
  // Throws InvalidPermutation on an out-of-range or repeated point.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  Point operator[](Point x) const { return images_[x]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const;

  // Cycles of length >= 2, each starting at its least point, ordered by
  // that point.
  std::vector<std::vector<Point>> cycles() const;

  // Canonical disjoint-cycle notation, e.g. "(0 1 2)(3 4)"; "()" for the
  // identity.
  std::string to_cycle_string() const;

  // Least moved point, or degree() for the identity.
  Point first_moved_point() const;

  std::size_t hash() const noexcept;

  friend bool operator==(const Permutation& a, const Permutation& b);
  // Lexicographic on image sequences (shorter degree first).
  friend std::strong_ordering operator<=>(const Permutation& a,
                                          const Permutation& b);

 private:
  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    return p.hash();
  }
};

Permutation compose(const Permutation& a, const Permutation& b);
inline Permutation operator*(const Permutation& a, const Permutation& b) {
  return compose(a, b);
}

Permutation inverse(const Permutation& p);

// p^k for any integer k (negative powers allowed).
Permutation power(const Permutation& p, std::int64_t k);

// g^-1 * x * g
Permutation conjugate(const Permutation& x, const Permutation& g);

// a^-1 * b^-1 * a * b
Permutation commutator(const Permutation& a, const Permutation& b);

// Least m >= 1 with p^m = 1: the lcm of the cycle lengths.
BigInt element_order(const Permutation& p);

// Same, for callers that know the order is bounded by a group order they
// already enumerated. Throws ResourceLimit if it does not fit.
std::uint64_t element_order_u64(const Permutation& p);

}  // namespace picc

template <>
struct std::hash<picc::Permutation> {
  std::size_t operator()(const picc::Permutation& p) const noexcept {
    return p.hash();
  }
};
