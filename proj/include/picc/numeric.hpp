#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace picc {

// Group orders and every count derived from them are arbitrary precision.
using BigInt = boost::multiprecision::cpp_int;

// Exact, always reduced, denominator > 0.
using Rational = boost::multiprecision::cpp_rational;

Rational make_rational(const BigInt& num, const BigInt& den);

// "num/den", always with a slash ("1/1" for one). Never a decimal.
std::string to_string(const Rational& r);
std::string to_string(const BigInt& n);

// Inverse of to_string(Rational); also accepts a bare integer. Throws
// InvalidArgument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

bool is_prime(std::uint64_t n);

// Distinct prime factors, ascending.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

// Distinct prime factors of n, found by trial division with primes up to
// `bound`. Throws InvalidArgument if a cofactor > 1 remains; permutation
// group orders on d points only have prime factors <= d.
std::vector<std::uint64_t> prime_factors(const BigInt& n, std::uint64_t bound);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

// Narrowing with a range check; throws ResourceLimit("machine word") if the
// value does not fit.
std::uint64_t to_u64(const BigInt& n);

// FNV-1a; stable across platforms and runs (unlike std::hash).
std::uint64_t stable_hash(std::string_view bytes,
                          std::uint64_t seed = 0xcbf29ce484222325ULL);

}  // namespace picc
