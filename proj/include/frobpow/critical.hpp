#pragma once

#include <frobpow/base_p.hpp>
#include <frobpow/ideal.hpp>
#include <frobpow/oracle.hpp>

#include <cstdint>
#include <vector>

namespace frobpow {

struct CriticalOptions {
  bool cap = true;           // clamp remainder entries to Omega
  bool detect_cycles = true; // retire candidates whose remainder repeats
  bool dedup = true;         // merge candidates with equal remainder and norm
  bool reduce = false; // allow x^b in I via Skoda shifts
  bool trace = false;
  unsigned max_levels = 0;  // 0 = Omega^m + 1 pigeonhole bound
  Budget budget;
};

/// (p-1) * max entry of A; bounds every entry of A*v with ||v|| < p.
Int omega(const ExponentMatrix& A, long long p);

/// All v in N^n with A*v < p*r componentwise (strict), ||v|| <= p-1, of
/// maximal ||v||.  Requires r > 0 componentwise; never empty.
std::vector<std::vector<std::int64_t>> max_digit_vectors(const ExponentMatrix& A,
                                                         const std::vector<Int>& r,
                                                         long long p);

/// An e-witness-in-progress: base-p digit columns, exact norm, and the
/// remainder-vector history R_u.
struct Candidate {
  std::vector<std::vector<std::int64_t>> digits;  // digits[t] = column t+1
  Int norm_num;                                   // norm = norm_num / p^e
  std::vector<std::vector<Int>> history;          // r_0 .. r_{e-1}
};

struct StepperLevel {
  unsigned e = 0;
  PAdicRational lambda_e;
  std::vector<Candidate> candidates;
  std::size_t cycles = 0;  // candidates retired to Lambda at this level
};

/// One level of Algorithm-style refinement: extend every surviving
/// candidate by its maximal digit vectors, then prune below lambda_e.
/// With cap + cycle detection enabled this is the terminating loop
/// behind lambda_b; with both disabled it is the plain infinite
/// refinement of the critical exponent.
class Stepper {
 public:
  struct RetiredWitness {
    std::vector<std::vector<std::int64_t>> pre;     // digit columns
    std::vector<std::vector<std::int64_t>> period;  // nonempty
    Rat norm;
  };

  Stepper(const MonomialIdeal& ideal, const Monomial& b, long long p,
          const CriticalOptions& opts = {});

  /// Advances one level; empty candidate set afterwards means exhausted.
  StepperLevel advance();
  bool exhausted() const { return candidates_.empty(); }
  unsigned level() const { return level_; }
  const std::vector<RetiredWitness>& retired() const { return retired_; }
  const Int& cap_value() const { return omega_; }

 private:
  ExponentMatrix A_;
  long long p_;
  CriticalOptions opts_;
  Int omega_;
  unsigned level_ = 0;
  std::vector<Candidate> candidates_;
  std::vector<RetiredWitness> retired_;
};

struct TraceLevel {
  unsigned e;
  PAdicRational lambda_e;
  std::size_t candidates;
  std::size_t cycles;
};

struct CriticalResult {
  Rat lambda;
  BasePExpansion expansion;             // canonical expansion of lambda
  std::vector<BasePExpansion> witness;  // u*, one expansion per generator
  Int reduced_by;                       // Skoda shifts applied
  std::vector<TraceLevel> trace;
};

/// The terminating cycle-detecting computation of the critical
/// exponent of x^b.  Requires x^b not in I unless opts.reduce.
CriticalResult lambda_b(const MonomialIdeal& ideal, const Monomial& b, long long p,
                        const CriticalOptions& opts = {});

/// Least critical exponent lambda_0(I), in (0, 1].
CriticalResult lce(const MonomialIdeal& ideal, long long p,
                   const CriticalOptions& opts = {});

struct SkodaReduction {
  Monomial reduced;                // b' with x^b' not in I
  Int shift;                       // number of generators subtracted
  std::vector<Monomial> branches;  // dividing generators at the first step
};

/// Descends b across dividing generators until x^b' leaves I,
/// following the first dividing generator in canonical order.
SkodaReduction skoda_reduce(const MonomialIdeal& ideal, const Monomial& b);

/// Exact I^[t] for t in [0,1), via lambda_b over the candidate
/// exponent box.
MonomialIdeal power_at(const MonomialIdeal& ideal, const Rat& t, long long p,
                       const CriticalOptions& opts = {});

struct JumpTable {
  std::vector<Rat> jumps;             // sorted critical exponents in (0,1]
  std::vector<MonomialIdeal> ideals;  // ideals[i] = I^[t] on [jumps[i-1], jumps[i])
};

/// All critical exponents in (0,1] with the piecewise-constant table of
/// I^[t].  verify_depth > 0 cross-checks each interval against the
/// oracle scan at that depth.
JumpTable jumps_unit_interval(const MonomialIdeal& ideal, long long p,
                              const CriticalOptions& opts = {},
                              unsigned verify_depth = 4);

}  // namespace frobpow
