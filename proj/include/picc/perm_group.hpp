#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "picc/numeric.hpp"
#include "picc/permutation.hpp"

namespace picc {

// One level of a stabilizer chain: the orbit of `base_point` under the
// level's strong generators, with a transversal u_b (u_b(base_point) = b).
struct BsgsLevel {
  Point base_point = 0;
  std::vector<Permutation> generators;
  std::vector<Point> orbit;
  // point -> index into orbit/transversal, or -1 when outside the orbit
  std::vector<std::int32_t> slot;
  std::vector<Permutation> transversal;
  std::vector<Permutation> transversal_inverse;
};

// Base and strong generating set, built by deterministic Schreier-Sims.
// Base points are chosen as the least point moved by the element that
// forces a new level, so the base is an ascending choice of non-fixed
// points and the result depends only on the generator sequence.
class Bsgs {
 public:
  Bsgs(std::size_t degree, const std::vector<Permutation>& generators);

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<BsgsLevel>& levels() const noexcept { return levels_; }
  std::vector<Point> base() const;
  std::vector<Permutation> strong_generators() const;

  // Product of the orbit lengths.
  BigInt order() const;

  // Strips p through levels [from, end). Returns the residue and the level
  // where stripping stopped (levels().size() if it went all the way).
  std::pair<Permutation, std::size_t> sift(Permutation p,
                                           std::size_t from = 0) const;

  bool contains(const Permutation& p) const;

 private:
  void extend_orbit(BsgsLevel& level) const;

  std::size_t degree_;
  std::vector<BsgsLevel> levels_;
};

// Deterministic traversal u_1[i_1] * u_2[i_2] * ... * u_k[i_k] over all
// transversal index tuples, last level fastest. Single consumer.
class ElementIterator {
 public:
  explicit ElementIterator(std::shared_ptr<const Bsgs> bsgs);

  // Next element, or nullopt after exactly |G| elements.
  std::optional<Permutation> next();

 private:
  void rebuild_prefix(std::size_t from);

  std::shared_ptr<const Bsgs> bsgs_;
  std::vector<std::size_t> index_;
  std::vector<Permutation> prefix_;
  bool done_ = false;
};

// A permutation group given by generators. Copies share one lazily built
// BSGS; after it is built the object is immutable and safe to read from
// any number of threads.
class PermGroup {
 public:
  // An empty generator list means the trivial group. Throws DegreeMismatch
  // if a generator has the wrong degree.
  PermGroup(std::size_t degree, std::vector<Permutation> generators);

  static PermGroup trivial(std::size_t degree);

  std::size_t degree() const;
  const std::vector<Permutation>& generators() const;

  const Bsgs& bsgs() const;
  std::shared_ptr<const Bsgs> bsgs_ptr() const;
  const BigInt& order() const;

  bool contains(const Permutation& p) const;
  bool is_trivial() const { return order() == 1; }

  // Uniform over G: independent uniform transversal picks, multiplied in
  // level order. Deterministic for a fixed engine state.
  Permutation random_element(std::mt19937_64& rng) const;

  // Throws ResourceLimit("element enumeration cap") if |G| > cap.
  ElementIterator elements(std::uint64_t cap) const;

 private:
  struct State;
  std::shared_ptr<State> state_;
};

std::vector<Permutation> enumerate_elements(const PermGroup& g,
                                            std::uint64_t cap);

}  // namespace picc
