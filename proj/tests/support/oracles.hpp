#pragma once

// Brute-force reference computations for the tests. Deliberately naive and
// independent of the library: permutations are plain image vectors, groups
// are explicit element sets built by closure.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>
#include <vector>

#include "picc/perm_group.hpp"

namespace oracle {

using Perm = std::vector<std::uint32_t>;

inline Perm identity(std::size_t n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0U);
  return p;
}

// (a*b)(x) = a(b(x))
inline Perm mul(const Perm& a, const Perm& b) {
  Perm c(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) c[x] = a[b[x]];
  return c;
}

inline Perm inv(const Perm& a) {
  Perm c(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) c[a[x]] = static_cast<std::uint32_t>(x);
  return c;
}

inline std::uint64_t order(const Perm& a) {
  const Perm e = identity(a.size());
  Perm p = a;
  std::uint64_t k = 1;
  while (p != e) {
    p = mul(p, a);
    ++k;
  }
  return k;
}

inline Perm from(const picc::Permutation& p) {
  return Perm(p.images().begin(), p.images().end());
}

inline std::vector<Perm> gens_of(const picc::PermGroup& g) {
  std::vector<Perm> out;
  for (const auto& p : g.generators()) out.push_back(from(p));
  return out;
}

// All products of the generators, breadth first.
inline std::vector<Perm> closure(const std::vector<Perm>& gens, std::size_t degree) {
  std::set<Perm> seen{identity(degree)};
  std::vector<Perm> list{identity(degree)};
  for (std::size_t i = 0; i < list.size(); ++i)
    for (const auto& s : gens) {
      Perm q = mul(list[i], s);
      if (seen.insert(q).second) list.push_back(std::move(q));
    }
  return list;
}

inline std::vector<Perm> elements(const picc::PermGroup& g) {
  return closure(gens_of(g), g.degree());
}

struct PermHash {
  std::size_t operator()(const Perm& p) const {
    std::size_t h = 1469598103934665603ULL;
    for (auto x : p) h = (h ^ x) * 1099511628211ULL;
    return h;
  }
};

// An indexed copy of a group with a full multiplication table.
struct Table {
  std::vector<Perm> elems;
  std::unordered_map<Perm, std::uint32_t, PermHash> index;
  std::vector<std::uint32_t> prod;  // prod[a * n + b] = a * b
  std::vector<std::uint32_t> inverse;
  std::vector<std::uint64_t> orders;

  explicit Table(std::vector<Perm> e) : elems(std::move(e)) {
    const std::size_t n = elems.size();
    for (std::uint32_t i = 0; i < n; ++i) index[elems[i]] = i;
    prod.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) prod[a * n + b] = index.at(mul(elems[a], elems[b]));
    for (std::size_t a = 0; a < n; ++a) {
      inverse.push_back(index.at(inv(elems[a])));
      orders.push_back(order(elems[a]));
    }
  }
  std::size_t size() const { return elems.size(); }
  std::uint32_t m(std::uint32_t a, std::uint32_t b) const { return prod[a * size() + b]; }
  std::uint32_t conj(std::uint32_t x, std::uint32_t g) const {
    return m(m(inverse[g], x), g);
  }
};

// Partition into classes: x ~ y iff y = g^-1 x g for some g.
inline std::vector<std::vector<std::uint32_t>> classes(const Table& t) {
  std::vector<int> cls(t.size(), -1);
  std::vector<std::vector<std::uint32_t>> out;
  for (std::uint32_t x = 0; x < t.size(); ++x) {
    if (cls[x] >= 0) continue;
    std::set<std::uint32_t> c;
    for (std::uint32_t g = 0; g < t.size(); ++g) c.insert(t.conj(x, g));
    for (auto y : c) cls[y] = static_cast<int>(out.size());
    out.emplace_back(c.begin(), c.end());
  }
  return out;
}

inline std::uint64_t commuting_pairs(const Table& t) {
  std::uint64_t n = 0;
  for (std::uint32_t a = 0; a < t.size(); ++a)
    for (std::uint32_t b = 0; b < t.size(); ++b)
      if (t.m(a, b) == t.m(b, a)) ++n;
  return n;
}

inline bool is_pi_number(std::uint64_t n, const std::vector<std::uint64_t>& pi) {
  for (std::uint64_t q = 2; q * q <= n; ++q)
    while (n % q == 0) {
      if (std::find(pi.begin(), pi.end(), q) == pi.end()) return false;
      n /= q;
    }
  return n == 1 || std::find(pi.begin(), pi.end(), n) != pi.end();
}

inline std::uint64_t pi_part(std::uint64_t n, const std::vector<std::uint64_t>& pi) {
  std::uint64_t part = 1;
  for (auto p : pi)
    while (n % p == 0) {
      n /= p;
      part *= p;
    }
  return part;
}

// Number of classes of pi-elements.
inline std::uint64_t k_pi(const Table& t, const std::vector<std::uint64_t>& pi) {
  std::uint64_t k = 0;
  for (const auto& c : classes(t))
    if (is_pi_number(t.orders[c[0]], pi)) ++k;
  return k;
}

// d_pi as a reduced (numerator, denominator) pair.
inline std::pair<std::uint64_t, std::uint64_t> d_pi(const Table& t,
                                                    const std::vector<std::uint64_t>& pi) {
  const std::uint64_t k = k_pi(t, pi), d = pi_part(t.size(), pi);
  const std::uint64_t g = std::gcd(k, d);
  return {k / g, d / g};
}

using Set = std::set<std::uint32_t>;

inline Set generate(const Table& t, const std::vector<std::uint32_t>& gens) {
  Set s{t.index.at(identity(t.elems[0].size()))};
  std::vector<std::uint32_t> list(s.begin(), s.end());
  for (std::size_t i = 0; i < list.size(); ++i)
    for (auto g : gens) {
      auto y = t.m(list[i], g);
      if (s.insert(y).second) list.push_back(y);
    }
  return s;
}

inline Set centralizer(const Table& t, const Set& g, const Set& h) {
  Set out;
  for (auto y : g) {
    bool ok = true;
    for (auto x : h)
      if (t.m(x, y) != t.m(y, x)) ok = false;
    if (ok) out.insert(y);
  }
  return out;
}

inline Set normalizer(const Table& t, const Set& g, const Set& h) {
  Set out;
  for (auto y : g) {
    bool ok = true;
    for (auto x : h)
      if (!h.count(t.conj(x, y))) ok = false;
    if (ok) out.insert(y);
  }
  return out;
}

inline bool is_normal(const Table& t, const Set& g, const Set& h) {
  return normalizer(t, g, h).size() == g.size();
}

// Every subgroup, found by adding one element at a time to known subgroups.
inline std::set<Set> all_subgroups(const Table& t) {
  std::set<Set> seen;
  std::vector<std::pair<Set, std::vector<std::uint32_t>>> list{{generate(t, {}), {}}};
  seen.insert(list[0].first);
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (std::uint32_t g = 0; g < t.size(); ++g) {
      if (list[i].first.count(g)) continue;
      std::vector<std::uint32_t> gens = list[i].second;
      gens.push_back(g);
      Set s = generate(t, gens);
      if (seen.insert(s).second) list.emplace_back(std::move(s), std::move(gens));
    }
  }
  return seen;
}

}  // namespace oracle
