#include "picc/numeric.hpp"

#include <charconv>

#include "picc/errors.hpp"

namespace picc {

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw InvalidArgument("zero denominator");
  return Rational(num, den);
}

std::string to_string(const BigInt& n) { return n.str(); }

std::string to_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

namespace {

BigInt parse_integer(std::string_view s) {
  std::size_t i = 0;
  bool negative = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    negative = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) throw InvalidArgument("malformed rational");
  BigInt value = 0;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw InvalidArgument("malformed rational");
    value = value * 10 + (s[i] - '0');
  }
  return negative ? BigInt(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  BigInt num = parse_integer(text.substr(0, slash));
  BigInt den = parse_integer(text.substr(slash + 1));
  return make_rational(num, den);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<std::uint64_t> prime_factors(const BigInt& n, std::uint64_t bound) {
  if (n < 1) throw InvalidArgument("prime_factors: n must be positive");
  std::vector<std::uint64_t> out;
  BigInt rest = n;
  for (std::uint64_t p = 2; p <= bound && rest > 1; ++p) {
    if (!is_prime(p) || rest % p != 0) continue;
    out.push_back(p);
    while (rest % p == 0) rest /= p;
  }
  if (rest > 1) {
    if (rest <= BigInt(std::numeric_limits<std::uint64_t>::max())) {
      for (auto p : prime_factors(rest.convert_to<std::uint64_t>()))
        out.push_back(p);
      return out;
    }
    throw InvalidArgument("prime_factors: cofactor above bound " +
                          std::to_string(bound));
  }
  return out;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::uint64_t to_u64(const BigInt& n) {
  if (n < 0 || n > BigInt(std::numeric_limits<std::uint64_t>::max()))
    throw ResourceLimit("machine word", n.str() + " does not fit in 64 bits");
  return n.convert_to<std::uint64_t>();
}

std::uint64_t stable_hash(std::string_view bytes, std::uint64_t seed) {
  std::uint64_t h = seed;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace picc
