#pragma once

#include <frobpow/base_p.hpp>
#include <frobpow/ideal.hpp>

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace frobpow {

/// Cap on enumeration work; runaway instances fail cleanly.
struct Budget {
  std::uint64_t max_states = 10'000'000;
};

class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// I^[k] as the product of bracket powers over the base-p digits of k.
MonomialIdeal integer_frobenius_power(const MonomialIdeal& ideal, const Int& k,
                                      long long p, const Budget& budget = {});

/// Definition-level I^[k/q]: floors of A*u/q over all carry-free u with
/// ||u|| = k, enumerated digit-by-digit in base p.
MonomialIdeal padic_power(const MonomialIdeal& ideal, const Int& k, const Int& q,
                          long long p, const Budget& budget = {});

/// x^b in I^[k/q], with early exit over the same enumeration.
bool member(const MonomialIdeal& ideal, const Monomial& b, const Int& k,
            const Int& q, long long p, const Budget& budget = {});

struct ScanEntry {
  PAdicRational t;  // start of the run
  MonomialIdeal power;
};

/// (k/q, I^[k/q]) for k = 0..q-1 at q = p^e, run-length merged.
std::vector<ScanEntry> scan_powers(const MonomialIdeal& ideal, long long p,
                                   unsigned e, const Budget& budget = {});

/// Batch form of `member` at a fixed depth: one enumeration of all
/// carry-free digit matrices answers every (b, k) query with q = p^e.
class MemberTable {
 public:
  MemberTable(const MonomialIdeal& ideal, long long p, unsigned e,
              const Budget& budget = {});

  /// x^b in I^[k/q] for q = p^e.
  bool member(const Monomial& b, const Int& k) const;
  const Int& q() const { return q_; }

 private:
  int num_vars_;
  Int q_;
  // reached_[k] = minimal floor(A*u/q) over carry-free u with ||u|| = k.
  std::vector<std::vector<Monomial>> reached_;
};

}  // namespace frobpow
