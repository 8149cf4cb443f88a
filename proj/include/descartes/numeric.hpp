#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace descartes {

using Integer = mpz_class;
using Rational = mpq_class;

// "num/den" (or "num" when den == 1); the wire format for witnesses.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// Accepts "n", "n/d" and finite decimals such as "-1.25".
Rational parse_rational(std::string_view text);

Integer binomial(long n, long k);

inline int sign(const Rational& q) { return sgn(q); }

// Deterministic 64-bit mixer used to derive per-item seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  return splitmix64(seed ^ splitmix64(salt));
}

}  // namespace descartes
