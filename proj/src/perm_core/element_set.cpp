#include "picc/element_set.hpp"

#include "picc/errors.hpp"
#include "picc/kernels.hpp"

namespace picc {

ElementSet::ElementSet(std::size_t universe)
    : universe_(universe), words_((universe + 63) / 64, 0) {}

std::size_t ElementSet::count() const {
  return kernels::active().popcount(words_.data(), words_.size());
}

std::size_t ElementSet::intersection_count(const ElementSet& other) const {
  if (other.universe_ != universe_)
    throw InvalidArgument("element sets over different groups");
  return kernels::active().and_popcount(words_.data(), other.words_.data(),
                                        words_.size());
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  if (other.universe_ != universe_)
    throw InvalidArgument("element sets over different groups");
  return kernels::active().is_subset(words_.data(), other.words_.data(),
                                     words_.size());
}

ElementSet& ElementSet::operator|=(const ElementSet& other) {
  if (other.universe_ != universe_)
    throw InvalidArgument("element sets over different groups");
  kernels::active().or_into(words_.data(), other.words_.data(), words_.size());
  return *this;
}

ElementSet& ElementSet::operator&=(const ElementSet& other) {
  if (other.universe_ != universe_)
    throw InvalidArgument("element sets over different groups");
  kernels::active().and_into(words_.data(), other.words_.data(), words_.size());
  return *this;
}

std::vector<std::uint32_t> ElementSet::to_vector() const {
  std::vector<std::uint32_t> out;
  for_each([&](std::uint32_t i) { out.push_back(i); });
  return out;
}

std::size_t ElementSet::hash() const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL ^ universe_;
  for (std::uint64_t w : words_) {
    h ^= w;
    h *= 0x100000001b3ULL;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace picc
