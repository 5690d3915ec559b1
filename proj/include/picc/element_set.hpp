#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace picc {

// Dense bit set over the element indices of an enumerated group.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe);

  std::size_t universe() const noexcept { return universe_; }

  bool test(std::uint32_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1U;
  }
  void set(std::uint32_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::uint32_t i) {
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  std::size_t count() const;
  std::size_t intersection_count(const ElementSet& other) const;
  bool is_subset_of(const ElementSet& other) const;
  ElementSet& operator|=(const ElementSet& other);
  ElementSet& operator&=(const ElementSet& other);

  // Ascending list of members.
  std::vector<std::uint32_t> to_vector() const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        const int b = __builtin_ctzll(bits);
        f(static_cast<std::uint32_t>(w * 64 + b));
        bits &= bits - 1;
      }
    }
  }

  const std::vector<std::uint64_t>& words() const noexcept { return words_; }
  std::size_t hash() const noexcept;

  friend bool operator==(const ElementSet& a, const ElementSet& b) = default;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept {
    return s.hash();
  }
};

}  // namespace picc
