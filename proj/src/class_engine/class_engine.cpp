#include "picc/class_engine.hpp"

#include <algorithm>
#include <cctype>

#include "picc/errors.hpp"

namespace picc {

// --- PiSet -----------------------------------------------------------------

PiSet::PiSet(std::initializer_list<std::uint64_t> primes)
    : PiSet(std::vector<std::uint64_t>(primes)) {}

PiSet::PiSet(std::vector<std::uint64_t> primes) : primes_(std::move(primes)) {
  for (auto p : primes_)
    if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
  std::sort(primes_.begin(), primes_.end());
  primes_.erase(std::unique(primes_.begin(), primes_.end()), primes_.end());
}

PiSet PiSet::parse(std::string_view text) {
  std::vector<std::uint64_t> primes;
  std::uint64_t cur = 0;
  bool in_number = false;
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      cur = cur * 10 + static_cast<std::uint64_t>(c - '0');
      if (cur > 1'000'000'007ULL) throw InvalidArgument("prime too large");
      in_number = true;
    } else if (c == ',' || c == ' ' || c == '{' || c == '}') {
      if (in_number) primes.push_back(cur);
      cur = 0;
      in_number = false;
    } else {
      throw InvalidArgument("malformed prime set '" + std::string(text) + "'");
    }
  }
  if (in_number) primes.push_back(cur);
  return PiSet(std::move(primes));
}

bool PiSet::contains(std::uint64_t p) const {
  return std::binary_search(primes_.begin(), primes_.end(), p);
}

bool PiSet::is_pi_number(std::uint64_t n) const {
  for (auto p : prime_factors(n))
    if (!contains(p)) return false;
  return true;
}

bool PiSet::is_pi_prime_number(std::uint64_t n) const {
  for (auto p : primes_)
    if (n % p == 0) return false;
  return true;
}

BigInt PiSet::part_of(const BigInt& n) const {
  if (n < 1) throw InvalidArgument("pi-part of a non-positive integer");
  BigInt part = 1, rest = n;
  for (auto p : primes_) {
    while (rest % p == 0) {
      rest /= p;
      part *= p;
    }
  }
  return part;
}

std::uint64_t PiSet::part_of(std::uint64_t n) const {
  return to_u64(part_of(BigInt(n)));
}

PiSet PiSet::without(std::uint64_t p) const {
  PiSet out = *this;
  out.primes_.erase(std::remove(out.primes_.begin(), out.primes_.end(), p),
                    out.primes_.end());
  return out;
}

PiSet PiSet::intersect(const std::vector<std::uint64_t>& primes) const {
  PiSet out;
  for (auto p : primes_)
    if (std::find(primes.begin(), primes.end(), p) != primes.end())
      out.primes_.push_back(p);
  return out;
}

bool PiSet::is_subset_of(const PiSet& other) const {
  return std::includes(other.primes_.begin(), other.primes_.end(),
                       primes_.begin(), primes_.end());
}

std::string PiSet::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(primes_[i]);
  }
  return s + "}";
}

std::vector<PiSet> nonempty_subsets(const std::vector<std::uint64_t>& primes) {
  std::vector<PiSet> out;
  const std::size_t n = primes.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<std::uint64_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) s.push_back(primes[i]);
    out.emplace_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const PiSet& a, const PiSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.primes() < b.primes();
  });
  return out;
}

std::vector<std::uint64_t> prime_divisors(const Subgroup& g) {
  return prime_factors(g.order());
}

// --- ClassTable ------------------------------------------------------------

std::size_t ClassTable::class_of(ElementId x) const {
  if (x >= class_of_.size() || class_of_[x] < 0)
    throw NotMember("element is not in the group of this class table");
  return static_cast<std::size_t>(class_of_[x]);
}

std::size_t ClassTable::class_of(const Permutation& p) const {
  auto id = group_.group().find(p);
  if (!id) throw NotMember(p.to_cycle_string() + " is not in the group");
  return class_of(*id);
}

const Permutation& ClassTable::representative(std::size_t i) const {
  return group_.group().element(classes_.at(i).representative);
}

ClassTable conjugacy_classes(const Subgroup& g) {
  const FiniteGroup& fg = g.group();
  ClassTable t(g);
  t.class_of_.assign(fg.size(), -1);
  std::vector<std::vector<ElementId>> orbits;
  std::vector<bool> seen(fg.size(), false);
  g.members().for_each([&](ElementId x) {
    if (seen[x]) return;
    std::vector<ElementId> orbit{x};
    seen[x] = true;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      for (ElementId s : g.generators()) {
        const ElementId y = fg.conj(orbit[head], s);
        if (!seen[y]) {
          seen[y] = true;
          orbit.push_back(y);
        }
      }
    }
    orbits.push_back(std::move(orbit));
  });
  for (const auto& orbit : orbits) {
    ElementId rep = *std::min_element(
        orbit.begin(), orbit.end(),
        [&](ElementId a, ElementId b) { return fg.lex_rank(a) < fg.lex_rank(b); });
    t.classes_.push_back({rep, orbit.size(), fg.order(rep)});
  }
  std::vector<std::size_t> perm(orbits.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    return fg.lex_rank(t.classes_[a].representative) <
           fg.lex_rank(t.classes_[b].representative);
  });
  std::vector<ConjugacyClass> sorted;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    sorted.push_back(t.classes_[perm[i]]);
    for (ElementId x : orbits[perm[i]])
      t.class_of_[x] = static_cast<std::int32_t>(i);
  }
  t.classes_ = std::move(sorted);
  return t;
}

ClassTable conjugacy_classes(const PermGroup& g, const Limits& limits) {
  return conjugacy_classes(Subgroup::whole(FiniteGroup::create(g, limits)));
}

Subgroup centralizer_of_element(const Subgroup& g, ElementId x) {
  if (!g.contains(x)) throw NotMember("centralizer: element not in the group");
  const FiniteGroup& fg = g.group();
  // transversal[y] = t with x^t = y
  std::vector<ElementId> orbit{x};
  std::unordered_map<ElementId, ElementId> transversal{{x, FiniteGroup::identity}};
  for (std::size_t head = 0; head < orbit.size(); ++head) {
    const ElementId y = orbit[head];
    for (ElementId s : g.generators()) {
      const ElementId z = fg.conj(y, s);
      if (transversal.emplace(z, fg.mul(transversal[y], s)).second)
        orbit.push_back(z);
    }
  }
  Subgroup c = Subgroup::trivial(g.group_ptr());
  for (ElementId y : orbit) {
    const ElementId t = transversal[y];
    for (ElementId s : g.generators()) {
      const ElementId z = fg.conj(y, s);
      const ElementId schreier =
          fg.mul(fg.mul(t, s), fg.inverse(transversal[z]));
      if (!c.contains(schreier)) c = c.with_generator(schreier);
    }
  }
  return c;
}

Subgroup centralizer_of_element_by_filter(const Subgroup& g, ElementId x) {
  if (!g.contains(x)) throw NotMember("centralizer: element not in the group");
  const FiniteGroup& fg = g.group();
  ElementSet members(fg.size());
  g.members().for_each([&](ElementId y) {
    if (fg.mul(x, y) == fg.mul(y, x)) members.set(y);
  });
  return Subgroup::from_members(g.group_ptr(), std::move(members));
}

bool is_pi_element(const Permutation& x, const PiSet& pi) {
  for (auto p : prime_factors(element_order(x), x.degree()))
    if (!pi.contains(p)) return false;
  return true;
}

namespace {

// x^k for an arbitrary-precision exponent k >= 0.
Permutation power_big(const Permutation& x, const BigInt& k) {
  std::vector<Point> out(x.degree());
  std::vector<bool> seen(x.degree(), false);
  std::vector<Point> cycle;
  for (Point start = 0; start < x.degree(); ++start) {
    if (seen[start]) continue;
    cycle.clear();
    for (Point y = start; !seen[y]; y = x(y)) {
      seen[y] = true;
      cycle.push_back(y);
    }
    const std::size_t len = cycle.size();
    const auto shift = static_cast<std::size_t>(BigInt(k % len).convert_to<std::uint64_t>());
    for (std::size_t i = 0; i < len; ++i) out[cycle[i]] = cycle[(i + shift) % len];
  }
  return Permutation::from_images_unchecked(std::move(out));
}

// Inverse of a modulo m (gcd(a, m) = 1, m >= 1).
BigInt mod_inverse(BigInt a, const BigInt& m) {
  if (m == 1) return 0;
  BigInt r0 = m, r1 = a % m, s0 = 0, s1 = 1;
  while (r1 != 0) {
    BigInt q = r0 / r1;
    BigInt r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    BigInt s2 = s0 - q * s1;
    s0 = s1;
    s1 = s2;
  }
  BigInt inv = s0 % m;
  if (inv < 0) inv += m;
  return inv;
}

}  // namespace

std::pair<Permutation, Permutation> pi_part_of_element(const Permutation& x,
                                                       const PiSet& pi) {
  const BigInt order = element_order(x);
  const BigInt a = pi.part_of(order);  // order of the pi-part
  const BigInt b = order / a;          // order of the pi'-part
  // u = 1 mod a, u = 0 mod b
  const BigInt u = (b * mod_inverse(b % a, a)) % order;
  const BigInt v = (order + 1 - u) % order;
  return {power_big(x, u), power_big(x, v)};
}

std::uint64_t k_pi(const ClassTable& table, const PiSet& pi) {
  std::uint64_t k = 0;
  for (const auto& c : table.classes())
    if (pi.is_pi_number(c.element_order)) ++k;
  return k;
}

std::uint64_t k_pi(const Subgroup& g, const PiSet& pi) {
  return k_pi(conjugacy_classes(g), pi);
}

}  // namespace picc
