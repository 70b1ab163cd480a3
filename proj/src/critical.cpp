#include <frobpow/critical.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace frobpow {

Int omega(const ExponentMatrix& A, long long p) {
  return Int(p - 1) * A.max_entry();
}

std::vector<std::vector<std::int64_t>> max_digit_vectors(const ExponentMatrix& A,
                                                         const std::vector<Int>& r,
                                                         long long p) {
  if (r.size() != A.rows) throw std::invalid_argument("max_digit_vectors: size mismatch");
  for (const Int& x : r)
    if (x < 1) throw std::invalid_argument("max_digit_vectors: r must be positive");

  const std::size_t n = A.cols;
  std::vector<Int> slack(A.rows);  // largest allowed value of (A*v)_i
  for (std::size_t i = 0; i < A.rows; ++i) slack[i] = Int(p) * r[i] - 1;

  std::vector<std::vector<std::int64_t>> best;
  std::int64_t best_norm = -1;
  std::vector<std::int64_t> cur(n, 0);
  std::vector<Int> rowsum(A.rows, 0);

  auto rec = [&](auto&& self, std::size_t j, std::int64_t used) -> void {
    if (j == n) {
      if (used > best_norm) {
        best_norm = used;
        best.clear();
      }
      if (used == best_norm) best.push_back(cur);
      return;
    }
    Int ub = p - 1 - used;
    for (std::size_t i = 0; i < A.rows; ++i)
      if (A.a[i][j] > 0) ub = std::min(ub, Int((slack[i] - rowsum[i]) / A.a[i][j]));
    for (std::int64_t t = static_cast<std::int64_t>(ub); t >= 0; --t) {
      cur[j] = t;
      for (std::size_t i = 0; i < A.rows; ++i) rowsum[i] += A.a[i][j] * t;
      self(self, j + 1, used + t);
      for (std::size_t i = 0; i < A.rows; ++i) rowsum[i] -= A.a[i][j] * t;
    }
    cur[j] = 0;
  };
  rec(rec, 0, 0);
  return best;
}

namespace {

// Digit column t (0-based) of an eventually periodic digit matrix.
const std::vector<std::int64_t>& witness_column(const Stepper::RetiredWitness& w,
                                                std::size_t t) {
  if (t < w.pre.size()) return w.pre[t];
  return w.period[(t - w.pre.size()) % w.period.size()];
}

// Column-major lexicographic order on the (infinite) digit matrices.
bool witness_matrix_less(const Stepper::RetiredWitness& a,
                         const Stepper::RetiredWitness& b) {
  std::size_t len = std::max(a.pre.size(), b.pre.size()) +
                    std::lcm(a.period.size(), b.period.size());
  for (std::size_t t = 0; t < len; ++t) {
    const auto& ca = witness_column(a, t);
    const auto& cb = witness_column(b, t);
    if (ca != cb) return ca < cb;
  }
  return false;
}

Rat witness_norm(const Stepper::RetiredWitness& w, long long p) {
  BasePExpansion sums;
  sums.p = p;
  sums.int_part = 0;
  sums.preperiod.clear();
  sums.period.clear();
  for (const auto& col : w.pre)
    sums.preperiod.push_back(std::accumulate(col.begin(), col.end(), std::int64_t{0}));
  for (const auto& col : w.period)
    sums.period.push_back(std::accumulate(col.begin(), col.end(), std::int64_t{0}));
  return sums.to_rational();
}

}  // namespace

Stepper::Stepper(const MonomialIdeal& ideal, const Monomial& b, long long p,
                 const CriticalOptions& opts)
    : p_(p), opts_(opts) {
  require_prime(p);
  if (ideal.is_unit()) throw std::invalid_argument("Stepper: ideal must be proper");
  if (static_cast<int>(b.num_vars()) != ideal.num_vars())
    throw std::invalid_argument("Stepper: variable count mismatch");
  if (ideal.contains(b))
    throw std::domain_error("Stepper: x^b lies in the ideal (use skoda_reduce)");
  A_ = exponent_matrix(ideal);
  omega_ = omega(A_, p);

  Candidate root;
  root.norm_num = 0;
  std::vector<Int> r0(A_.rows);
  for (std::size_t i = 0; i < A_.rows; ++i) {
    r0[i] = b.exps[i] + 1;
    if (opts_.cap) r0[i] = std::min(r0[i], omega_);
  }
  root.history.push_back(std::move(r0));
  candidates_.push_back(std::move(root));
}

StepperLevel Stepper::advance() {
  const unsigned e = ++level_;
  StepperLevel out;
  out.e = e;
  out.lambda_e = PAdicRational(0, 0, p_);

  // Advance each candidate's remainder, retiring the ones that cycle.
  std::vector<Candidate> alive;
  for (Candidate& cand : candidates_) {
    if (e > 1) {
      std::vector<std::int64_t> last = cand.digits.back();
      std::vector<Int> r(A_.rows);
      for (std::size_t i = 0; i < A_.rows; ++i) {
        Int av = 0;
        for (std::size_t j = 0; j < A_.cols; ++j) av += A_.a[i][j] * last[j];
        r[i] = Int(p_) * cand.history.back()[i] - av;
        if (opts_.cap && r[i] > omega_) r[i] = omega_;
      }
      if (opts_.detect_cycles) {
        std::size_t c = 0;
        bool found = false;
        for (; c < cand.history.size(); ++c)
          if (cand.history[c] == r) {
            found = true;
            break;
          }
        if (found) {
          // States repeat from r_c on, so digit columns c+1..e-1 form
          // the repeating block.
          RetiredWitness w;
          w.pre.assign(cand.digits.begin(), cand.digits.begin() + c);
          w.period.assign(cand.digits.begin() + c, cand.digits.end());
          w.norm = witness_norm(w, p_);
          retired_.push_back(std::move(w));
          ++out.cycles;
          continue;
        }
      }
      cand.history.push_back(std::move(r));
    }
    alive.push_back(std::move(cand));
  }

  if (opts_.dedup) {
    std::vector<Candidate> unique;
    for (Candidate& cand : alive) {
      bool merged = false;
      for (Candidate& kept : unique)
        if (kept.history.back() == cand.history.back() &&
            kept.norm_num == cand.norm_num) {
          if (cand.digits < kept.digits) kept = std::move(cand);
          merged = true;
          break;
        }
      if (!merged) unique.push_back(std::move(cand));
    }
    alive = std::move(unique);
  }

  // Extend by all maximal digit vectors, then prune below lambda_e.
  std::vector<Candidate> next;
  for (const Candidate& cand : alive) {
    for (auto& v : max_digit_vectors(A_, cand.history.back(), p_)) {
      Candidate ext = cand;
      std::int64_t vnorm = std::accumulate(v.begin(), v.end(), std::int64_t{0});
      ext.norm_num = cand.norm_num * p_ + vnorm;
      ext.digits.push_back(std::move(v));
      next.push_back(std::move(ext));
      if (next.size() > opts_.budget.max_states)
        throw BudgetExceeded("stepper: candidate count exceeds state budget");
    }
  }
  if (!next.empty()) {
    Int lambda_num = 0;
    for (const Candidate& c : next) lambda_num = std::max(lambda_num, c.norm_num);
    std::erase_if(next, [&](const Candidate& c) { return c.norm_num < lambda_num; });
    out.lambda_e = PAdicRational(lambda_num, e, p_);
  }
  candidates_ = std::move(next);
  out.candidates = candidates_;
  return out;
}

CriticalResult lambda_b(const MonomialIdeal& ideal, const Monomial& b, long long p,
                        const CriticalOptions& opts) {
  require_prime(p);
  if (ideal.is_unit()) throw std::invalid_argument("lambda_b: ideal must be proper");
  if (ideal.contains(b)) {
    if (!opts.reduce)
      throw std::domain_error("lambda_b: x^b lies in the ideal; pass reduce");
    // Skoda shift: lambda_b = 1 + lambda_{b - a} across a dividing
    // generator; report the max over all dividing generators.
    bool have = false;
    CriticalResult best;
    for (const Monomial& g : ideal.gens()) {
      if (!divides(g, b)) continue;
      std::vector<Int> rest(b.exps.size());
      for (std::size_t i = 0; i < rest.size(); ++i) rest[i] = b.exps[i] - g.exps[i];
      CriticalResult sub = lambda_b(ideal, Monomial(std::move(rest)), p, opts);
      sub.lambda += 1;
      sub.reduced_by += 1;
      if (!have || sub.lambda > best.lambda) {
        best = std::move(sub);
        have = true;
      }
    }
    best.expansion = expand(best.lambda, p, Representation::canonical);
    return best;
  }

  Stepper stepper(ideal, b, p, opts);
  Int level_bound = opts.max_levels
                        ? Int(opts.max_levels)
                        : pow_int(stepper.cap_value(),
                                  static_cast<unsigned>(ideal.num_vars())) + 1;
  CriticalResult result;
  result.reduced_by = 0;
  Int levels = 0;
  while (!stepper.exhausted()) {
    if (++levels > level_bound)
      throw std::logic_error("lambda_b: termination bound exceeded");
    StepperLevel lvl = stepper.advance();
    if (opts.trace)
      result.trace.push_back(
          TraceLevel{lvl.e, lvl.lambda_e, lvl.candidates.size(), lvl.cycles});
  }
  const auto& retired = stepper.retired();
  if (retired.empty()) throw std::logic_error("lambda_b: no witness found");

  const Stepper::RetiredWitness* best = &retired.front();
  for (const auto& w : retired) {
    if (w.norm > best->norm ||
        (w.norm == best->norm && witness_matrix_less(w, *best)))
      best = &w;
  }

  result.lambda = best->norm;
  result.expansion = expand(result.lambda, p, Representation::canonical);
  const std::size_t n = best->pre.empty() && best->period.empty()
                            ? 0
                            : (best->pre.empty() ? best->period.front().size()
                                                 : best->pre.front().size());
  for (std::size_t i = 0; i < n; ++i) {
    BasePExpansion x;
    x.p = p;
    x.int_part = 0;
    x.preperiod.clear();
    x.period.clear();
    for (const auto& col : best->pre) x.preperiod.push_back(col[i]);
    for (const auto& col : best->period) x.period.push_back(col[i]);
    bool all_zero = std::all_of(x.period.begin(), x.period.end(),
                                [](std::int64_t d) { return d == 0; });
    if (all_zero) x.period = {0};
    result.witness.push_back(std::move(x));
  }
  return result;
}

CriticalResult lce(const MonomialIdeal& ideal, long long p,
                   const CriticalOptions& opts) {
  return lambda_b(ideal, Monomial(std::vector<Int>(ideal.num_vars(), 0)), p, opts);
}

SkodaReduction skoda_reduce(const MonomialIdeal& ideal, const Monomial& b) {
  if (ideal.is_unit()) throw std::invalid_argument("skoda_reduce: ideal must be proper");
  SkodaReduction out;
  out.reduced = b;
  out.shift = 0;
  bool first = true;
  while (ideal.contains(out.reduced)) {
    std::vector<Monomial> divs;
    for (const Monomial& g : ideal.gens())
      if (divides(g, out.reduced)) divs.push_back(g);
    if (first) {
      out.branches = divs;
      first = false;
    }
    for (std::size_t i = 0; i < out.reduced.exps.size(); ++i)
      out.reduced.exps[i] -= divs.front().exps[i];
    out.shift += 1;
  }
  return out;
}

namespace {

// Candidate exponent box: generators of I^[t] for t < 1 have i-th
// exponent at most max_j A[i][j] - 1.
std::vector<Int> power_box(const ExponentMatrix& A) {
  std::vector<Int> box(A.rows, 0);
  for (std::size_t i = 0; i < A.rows; ++i) {
    Int mx = 0;
    for (std::size_t j = 0; j < A.cols; ++j) mx = std::max(mx, A.a[i][j]);
    box[i] = mx > 0 ? Int(mx - 1) : Int(0);
  }
  return box;
}

template <typename Fn>
void for_each_in_box(const std::vector<Int>& box, const Budget& budget, Fn&& fn) {
  Int total = 1;
  for (const Int& bnd : box) total *= bnd + 1;
  if (total > budget.max_states)
    throw BudgetExceeded("exponent box exceeds state budget");
  std::vector<Int> b(box.size(), 0);
  while (true) {
    fn(b);
    std::size_t i = 0;
    for (; i < box.size(); ++i) {
      if (++b[i] <= box[i]) break;
      b[i] = 0;
    }
    if (i == box.size()) return;
  }
}

// lambda_b over every box point with x^b outside I.
std::map<std::vector<Int>, Rat> box_lambdas(const MonomialIdeal& ideal, long long p,
                                            const CriticalOptions& opts) {
  ExponentMatrix A = exponent_matrix(ideal);
  std::map<std::vector<Int>, Rat> lambdas;
  for_each_in_box(power_box(A), opts.budget, [&](const std::vector<Int>& b) {
    Monomial mono{b};
    if (ideal.contains(mono)) return;
    lambdas[b] = lambda_b(ideal, mono, p, opts).lambda;
  });
  return lambdas;
}

MonomialIdeal ideal_above(const MonomialIdeal& ideal,
                          const std::map<std::vector<Int>, Rat>& lambdas,
                          const std::vector<Int>& box, const Rat& t,
                          const Budget& budget) {
  std::vector<Monomial> gens;
  for_each_in_box(box, budget, [&](const std::vector<Int>& b) {
    auto it = lambdas.find(b);
    // Box points inside I have lambda_b > 1 > t.
    if (it == lambdas.end() || t < it->second) gens.push_back(Monomial(b));
  });
  if (gens.empty()) throw std::logic_error("I^[t] has no generator in the box");
  return MonomialIdeal(ideal.num_vars(), std::move(gens));
}

}  // namespace

MonomialIdeal power_at(const MonomialIdeal& ideal, const Rat& t, long long p,
                       const CriticalOptions& opts) {
  require_prime(p);
  if (t < 0 || t >= 1) throw std::invalid_argument("power_at: t must lie in [0,1)");
  if (ideal.is_unit() || t == 0) return MonomialIdeal::unit(ideal.num_vars());
  ExponentMatrix A = exponent_matrix(ideal);
  return ideal_above(ideal, box_lambdas(ideal, p, opts), power_box(A), t,
                     opts.budget);
}

JumpTable jumps_unit_interval(const MonomialIdeal& ideal, long long p,
                              const CriticalOptions& opts, unsigned verify_depth) {
  require_prime(p);
  if (ideal.is_unit()) throw std::invalid_argument("jumps: ideal must be proper");
  ExponentMatrix A = exponent_matrix(ideal);
  std::vector<Int> box = power_box(A);
  auto lambdas = box_lambdas(ideal, p, opts);

  JumpTable table;
  for (const auto& [b, lam] : lambdas) table.jumps.push_back(lam);
  std::sort(table.jumps.begin(), table.jumps.end());
  table.jumps.erase(std::unique(table.jumps.begin(), table.jumps.end()),
                    table.jumps.end());
  if (table.jumps.empty() || table.jumps.back() != 1)
    table.jumps.push_back(1);  // I^[1] = I closes the unit interval

  Rat left = 0;
  for (const Rat& jump : table.jumps) {
    table.ideals.push_back(ideal_above(ideal, lambdas, box, left, opts.budget));
    left = jump;
  }

  if (verify_depth > 0) {
    auto runs = scan_powers(ideal, p, verify_depth, opts.budget);
    Int q = pow_int(p, verify_depth);
    std::size_t run = 0;
    for (Int k = 0; k < q; ++k) {
      Rat t(k, q);
      while (run + 1 < runs.size() && runs[run + 1].t.value() <= t) ++run;
      std::size_t idx = 0;
      while (idx < table.jumps.size() && table.jumps[idx] <= t) ++idx;
      if (idx >= table.ideals.size() || !(table.ideals[idx] == runs[run].power))
        throw std::logic_error("jump table disagrees with oracle scan at t = " +
                               rat_str(t));
    }
  }
  return table;
}

}  // namespace frobpow
