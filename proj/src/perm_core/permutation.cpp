#include "picc/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "picc/errors.hpp"
#include "picc/kernels.hpp"

namespace picc {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size())
      throw InvalidPermutation("image " + std::to_string(x) +
                               " out of range for degree " +
                               std::to_string(images_.size()));
    if (seen[x])
      throw InvalidPermutation("image " + std::to_string(x) + " repeated");
    seen[x] = true;
  }
}

Permutation Permutation::from_images_unchecked(std::vector<Point> images) {
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::from_cycles(
    std::size_t degree, const std::vector<std::vector<Point>>& cycles) {
  Permutation result(degree);
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
    const auto& cycle = *it;
    std::vector<bool> seen(degree, false);
    for (Point x : cycle) {
      if (x >= degree)
        throw InvalidPermutation("point " + std::to_string(x) +
                                 " out of range");
      if (seen[x])
        throw InvalidPermutation("point " + std::to_string(x) +
                                 " repeated within a cycle");
      seen[x] = true;
    }
    if (cycle.size() < 2) continue;
    Permutation c(degree);
    for (std::size_t i = 0; i < cycle.size(); ++i)
      c.images_[cycle[i]] = cycle[(i + 1) % cycle.size()];
    result = compose(c, result);
  }
  return result;
}

bool Permutation::is_identity() const {
  return kernels::active().is_iota(images_.data(), images_.size());
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(images_.size(), false);
  for (Point start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    std::vector<Point> cycle;
    for (Point x = start; !seen[x]; x = images_[x]) {
      seen[x] = true;
      cycle.push_back(x);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::string Permutation::to_cycle_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::string s;
  for (const auto& c : cs) {
    s += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(c[i]);
    }
    s += ')';
  }
  return s;
}

Point Permutation::first_moved_point() const {
  for (Point x = 0; x < images_.size(); ++x)
    if (images_[x] != x) return x;
  return static_cast<Point>(images_.size());
}

std::size_t Permutation::hash() const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ images_.size();
  for (Point x : images_) {
    h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

bool operator==(const Permutation& a, const Permutation& b) {
  return a.images_.size() == b.images_.size() &&
         kernels::active().equal(a.images_.data(), b.images_.data(),
                                 a.images_.size());
}

std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
  if (auto c = a.images_.size() <=> b.images_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(
      a.images_.begin(), a.images_.end(), b.images_.begin(), b.images_.end());
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw DegreeMismatch(a.degree(), b.degree());
  std::vector<Point> out(a.degree());
  kernels::active().gather(a.images().data(), b.images().data(), out.data(),
                           out.size());
  return Permutation::from_images_unchecked(std::move(out));
}

Permutation inverse(const Permutation& p) {
  std::vector<Point> out(p.degree());
  for (Point x = 0; x < p.degree(); ++x) out[p(x)] = x;
  return Permutation::from_images_unchecked(std::move(out));
}

Permutation power(const Permutation& p, std::int64_t k) {
  const std::size_t n = p.degree();
  std::vector<Point> out(n);
  std::vector<bool> seen(n, false);
  std::vector<Point> cycle;
  for (Point start = 0; start < n; ++start) {
    if (seen[start]) continue;
    cycle.clear();
    for (Point x = start; !seen[x]; x = p(x)) {
      seen[x] = true;
      cycle.push_back(x);
    }
    const auto len = static_cast<std::int64_t>(cycle.size());
    const std::int64_t shift = ((k % len) + len) % len;
    for (std::int64_t i = 0; i < len; ++i)
      out[cycle[i]] = cycle[(i + shift) % len];
  }
  return Permutation::from_images_unchecked(std::move(out));
}

Permutation conjugate(const Permutation& x, const Permutation& g) {
  return inverse(g) * x * g;
}

Permutation commutator(const Permutation& a, const Permutation& b) {
  return inverse(a) * inverse(b) * a * b;
}

namespace {

template <typename Int, typename Lcm>
Int cycle_lcm(const Permutation& p, Lcm lcm) {
  Int result = 1;
  std::vector<bool> seen(p.degree(), false);
  for (Point start = 0; start < p.degree(); ++start) {
    if (seen[start]) continue;
    std::uint64_t len = 0;
    for (Point x = start; !seen[x]; x = p(x)) {
      seen[x] = true;
      ++len;
    }
    result = lcm(result, len);
  }
  return result;
}

}  // namespace

BigInt element_order(const Permutation& p) {
  return cycle_lcm<BigInt>(p, [](const BigInt& a, std::uint64_t len) {
    return BigInt(boost::multiprecision::lcm(a, BigInt(len)));
  });
}

std::uint64_t element_order_u64(const Permutation& p) {
  return cycle_lcm<std::uint64_t>(p, [](std::uint64_t a, std::uint64_t len) {
    std::uint64_t g = gcd_u64(a, len);
    std::uint64_t v = 0;
    if (__builtin_mul_overflow(a / g, len, &v))
      throw ResourceLimit("machine word", "element order overflow");
    return v;
  });
}

}  // namespace picc
