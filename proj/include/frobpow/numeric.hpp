#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace frobpow {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int pow_int(const Int& base, unsigned exp) {
  Int r = 1;
  Int b = base;
  while (exp) {
    if (exp & 1u) r *= b;
    b *= b;
    exp >>= 1u;
  }
  return r;
}

inline bool is_prime(long long p) {
  if (p < 2) return false;
  if (p < 4) return true;
  if (p % 2 == 0) return false;
  for (long long d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

inline void require_prime(long long p) {
  if (!is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
}

// Returns e with q == p^e, or throws.
inline unsigned log_base_p(const Int& q, long long p) {
  Int v = q;
  unsigned e = 0;
  while (v > 1) {
    if (v % p != 0) throw std::invalid_argument("q is not a power of p");
    v /= p;
    ++e;
  }
  if (v != 1) throw std::invalid_argument("q is not a power of p");
  return e;
}

inline std::string rat_str(const Rat& r) {
  std::string s = numerator(r).str();
  s += '/';
  s += denominator(r).str();
  return s;
}

}  // namespace frobpow
