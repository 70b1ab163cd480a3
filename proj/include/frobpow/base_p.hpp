#pragma once

#include <frobpow/numeric.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace frobpow {

/// Nonnegative element of Z[1/p], stored as num / p^exp in lowest
/// terms over p (p does not divide num unless exp == 0).
struct PAdicRational {
  Int num;
  unsigned exp = 0;
  long long p = 2;

  PAdicRational() = default;
  PAdicRational(Int n, unsigned e, long long prime);

  Rat value() const { return Rat(num, pow_int(p, exp)); }
  friend bool operator==(const PAdicRational&, const PAdicRational&) = default;
};

enum class Representation { canonical, nonterminating };

/// Eventually periodic base-p expansion int_part.d1 d2 ... with the
/// tail `period` repeating forever.  Terminating values carry the
/// single period digit 0 in canonical form; the nonterminating form
/// ends in repeating (p-1)s.
struct BasePExpansion {
  long long p = 2;
  Int int_part;
  std::vector<std::int64_t> preperiod;
  std::vector<std::int64_t> period{0};

  /// Digit at fractional place i (1-based).
  std::int64_t digit(std::size_t i) const;
  bool is_terminating() const;
  Rat to_rational() const;
  /// Value of the first e fractional places, as int_part.d1...de.
  Rat truncated_value(unsigned e) const;
  std::string str() const;

  friend bool operator==(const BasePExpansion&, const BasePExpansion&) = default;
};

inline Rat to_rational(const BasePExpansion& x) { return x.to_rational(); }

/// Long division with remainder-cycle detection.  The canonical form
/// never ends in repeating (p-1)s; the nonterminating form exists only
/// for r > 0.
BasePExpansion expand(const Rat& r, long long p,
                      Representation rep = Representation::canonical);

/// Truncation of the nonterminating expansion of z after e places;
/// strictly less than z.
PAdicRational trunc(const Rat& z, long long p, unsigned e);

/// Componentwise digit truncation of the given representations
/// (terminating entries keep their terminating form).
std::vector<PAdicRational> tau(const std::vector<BasePExpansion>& v, unsigned e);

/// true iff every digit-column sum of the n x e matrix is < p.
bool carry_free_sum(const std::vector<std::vector<std::int64_t>>& digits, long long p);

/// Kummer/Lucas: binom(k, u) != 0 mod p iff ||u|| = k and the base-p
/// addition of the u_i is carry-free.
bool multinomial_nonzero(const Int& k, const std::vector<Int>& u, long long p);

/// Closed Sierpinski-simplex membership: some choice of base-p
/// representations of the entries adds without carries.
bool admissible(const std::vector<Rat>& v, long long p);

}  // namespace frobpow
