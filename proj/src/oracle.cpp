#include <frobpow/oracle.hpp>

#include <algorithm>
#include <functional>

namespace frobpow {

namespace {

std::vector<std::int64_t> digits_base_p(Int k, long long p) {
  std::vector<std::int64_t> digits;
  while (k > 0) {
    digits.push_back(static_cast<std::int64_t>(k % p));
    k /= p;
  }
  return digits;
}

// All ways to write d as an ordered sum of n nonnegative parts.
std::vector<std::vector<Int>> compositions(std::int64_t d, std::size_t n) {
  std::vector<std::vector<Int>> out;
  std::vector<Int> cur(n, 0);
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t j,
                                                           std::int64_t rest) {
    if (j + 1 == n) {
      cur[j] = rest;
      out.push_back(cur);
      return;
    }
    for (std::int64_t t = 0; t <= rest; ++t) {
      cur[j] = t;
      rec(j + 1, rest - t);
    }
  };
  rec(0, d);
  return out;
}

// Visits every carry-free u in N^n with ||u|| = k, digit by digit in
// base p.  Stops early when visit returns true.
bool enumerate_carry_free(std::size_t n, const Int& k, long long p,
                          const Budget& budget,
                          const std::function<bool(const std::vector<Int>&)>& visit) {
  std::vector<std::int64_t> kdigits = digits_base_p(k, p);
  if (kdigits.empty()) {
    std::vector<Int> zero(n, 0);
    return visit(zero);
  }

  std::vector<std::vector<std::vector<Int>>> per_digit;
  Int leaf_count = 1;
  for (std::int64_t d : kdigits) {
    per_digit.push_back(compositions(d, n));
    leaf_count *= static_cast<std::int64_t>(per_digit.back().size());
    if (leaf_count > budget.max_states)
      throw BudgetExceeded("carry-free enumeration exceeds state budget");
  }

  std::vector<Int> u(n, 0);
  std::function<bool(std::size_t, Int)> rec = [&](std::size_t j, Int scale) -> bool {
    if (j == per_digit.size()) return visit(u);
    for (const auto& w : per_digit[j]) {
      for (std::size_t i = 0; i < n; ++i) u[i] += scale * w[i];
      bool stop = rec(j + 1, scale * p);
      for (std::size_t i = 0; i < n; ++i) u[i] -= scale * w[i];
      if (stop) return true;
    }
    return false;
  };
  return rec(0, 1);
}

Monomial floor_div(const std::vector<Int>& v, const Int& q) {
  std::vector<Int> e(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) e[i] = v[i] / q;
  return Monomial(std::move(e));
}

}  // namespace

MonomialIdeal integer_frobenius_power(const MonomialIdeal& ideal, const Int& k,
                                      long long p, const Budget& budget) {
  require_prime(p);
  if (k < 0) throw std::invalid_argument("integer_frobenius_power: k < 0");
  MonomialIdeal result = MonomialIdeal::unit(ideal.num_vars());
  Int scale = 1;
  for (std::int64_t d : digits_base_p(k, p)) {
    if (d > 0) {
      MonomialIdeal factor = bracket_power(ordinary_power(ideal, d), scale);
      if (Int(result.gens().size()) * Int(factor.gens().size()) > budget.max_states)
        throw BudgetExceeded("integer Frobenius power exceeds state budget");
      result = multiply(result, factor);
    }
    scale *= p;
  }
  return result;
}

MonomialIdeal padic_power(const MonomialIdeal& ideal, const Int& k, const Int& q,
                          long long p, const Budget& budget) {
  require_prime(p);
  log_base_p(q, p);
  if (ideal.is_unit()) return ideal;
  ExponentMatrix A = exponent_matrix(ideal);
  std::vector<Monomial> gens;
  enumerate_carry_free(A.cols, k, p, budget, [&](const std::vector<Int>& u) {
    gens.push_back(floor_div(A.apply(u), q));
    return false;
  });
  return MonomialIdeal(ideal.num_vars(), std::move(gens));
}

bool member(const MonomialIdeal& ideal, const Monomial& b, const Int& k,
            const Int& q, long long p, const Budget& budget) {
  require_prime(p);
  log_base_p(q, p);
  if (static_cast<int>(b.num_vars()) != ideal.num_vars())
    throw std::invalid_argument("member: variable count mismatch");
  if (ideal.is_unit()) return true;
  ExponentMatrix A = exponent_matrix(ideal);
  return enumerate_carry_free(A.cols, k, p, budget, [&](const std::vector<Int>& u) {
    return divides(floor_div(A.apply(u), q), b);
  });
}

std::vector<ScanEntry> scan_powers(const MonomialIdeal& ideal, long long p,
                                   unsigned e, const Budget& budget) {
  require_prime(p);
  Int q = pow_int(p, e);
  if (q > budget.max_states)
    throw BudgetExceeded("scan_powers: depth exceeds state budget");
  std::vector<ScanEntry> runs;
  for (Int k = 0; k < q; ++k) {
    MonomialIdeal power = padic_power(ideal, k, q, p, budget);
    if (runs.empty() || !(runs.back().power == power))
      runs.push_back(ScanEntry{PAdicRational(k, e, p), std::move(power)});
  }
  return runs;
}

MemberTable::MemberTable(const MonomialIdeal& ideal, long long p, unsigned e,
                         const Budget& budget)
    : num_vars_(ideal.num_vars()), q_(pow_int(p, e)) {
  require_prime(p);
  if (q_ > budget.max_states)
    throw BudgetExceeded("MemberTable: depth exceeds state budget");
  std::uint64_t qq = static_cast<std::uint64_t>(q_);
  reached_.resize(qq);
  if (ideal.is_unit()) {
    Monomial one{std::vector<Int>(num_vars_, 0)};
    for (auto& r : reached_) r.push_back(one);
    return;
  }
  ExponentMatrix A = exponent_matrix(ideal);
  std::size_t n = A.cols;

  // Every composition of every column sum < p.
  std::vector<std::vector<Int>> column_choices;
  for (std::int64_t s = 0; s < p; ++s)
    for (auto& c : compositions(s, n)) column_choices.push_back(std::move(c));

  Int leaves = 1;
  for (unsigned t = 0; t < e; ++t) {
    leaves *= static_cast<std::int64_t>(column_choices.size());
    if (leaves > budget.max_states)
      throw BudgetExceeded("MemberTable enumeration exceeds state budget");
  }

  std::vector<Int> u(n, 0);
  std::function<void(unsigned, Int)> rec = [&](unsigned t, Int scale) {
    if (t == e) {
      Int k = 0;
      for (const Int& x : u) k += x;
      Monomial c = floor_div(A.apply(u), q_);
      auto& bucket = reached_[static_cast<std::uint64_t>(k)];
      bool dominated = false;
      for (const Monomial& r : bucket)
        if (divides(r, c)) {
          dominated = true;
          break;
        }
      if (!dominated) {
        std::erase_if(bucket, [&](const Monomial& r) { return divides(c, r); });
        bucket.push_back(c);
      }
      return;
    }
    for (const auto& w : column_choices) {
      for (std::size_t i = 0; i < n; ++i) u[i] += scale * w[i];
      rec(t + 1, scale * p);
      for (std::size_t i = 0; i < n; ++i) u[i] -= scale * w[i];
    }
  };
  rec(0, 1);
}

bool MemberTable::member(const Monomial& b, const Int& k) const {
  if (static_cast<int>(b.num_vars()) != num_vars_)
    throw std::invalid_argument("MemberTable::member: variable count mismatch");
  if (k < 0 || k >= q_) throw std::invalid_argument("MemberTable::member: k out of range");
  for (const Monomial& r : reached_[static_cast<std::uint64_t>(k)])
    if (divides(r, b)) return true;
  return false;
}

}  // namespace frobpow
