#include <frobpow/base_p.hpp>

#include <map>
#include <numeric>
#include <stdexcept>

namespace frobpow {

PAdicRational::PAdicRational(Int n, unsigned e, long long prime)
    : num(std::move(n)), exp(e), p(prime) {
  if (num < 0) throw std::invalid_argument("PAdicRational: negative numerator");
  while (exp > 0 && num % p == 0) {
    num /= p;
    --exp;
  }
}

std::int64_t BasePExpansion::digit(std::size_t i) const {
  if (i == 0) throw std::invalid_argument("fractional digits are 1-based");
  if (i <= preperiod.size()) return preperiod[i - 1];
  return period[(i - 1 - preperiod.size()) % period.size()];
}

bool BasePExpansion::is_terminating() const {
  return period.size() == 1 && period[0] == 0;
}

Rat BasePExpansion::to_rational() const {
  Rat acc = int_part;
  Int scale = 1;
  for (std::int64_t d : preperiod) {
    scale *= p;
    acc += Rat(d, scale);
  }
  Int pval = 0;
  for (std::int64_t d : period) pval = pval * p + d;
  Int pl = pow_int(p, static_cast<unsigned>(period.size()));
  acc += Rat(pval, scale * (pl - 1));
  return acc;
}

Rat BasePExpansion::truncated_value(unsigned e) const {
  Int acc = int_part;
  for (unsigned i = 1; i <= e; ++i) acc = acc * p + digit(i);
  return Rat(acc, pow_int(p, e));
}

std::string BasePExpansion::str() const {
  const bool wide = p > 10;
  auto join = [&](const std::vector<std::int64_t>& ds) {
    std::string s;
    for (std::size_t i = 0; i < ds.size(); ++i) {
      if (wide && i) s += ',';
      s += std::to_string(ds[i]);
    }
    return s;
  };
  std::string out = int_part.str();
  if (!is_terminating() || !preperiod.empty()) {
    out += '.';
    out += join(preperiod);
    if (!is_terminating()) {
      out += "(bar)(";
      out += join(period);
      out += ')';
    }
  }
  out += '_';
  out += std::to_string(p);
  return out;
}

BasePExpansion expand(const Rat& r, long long p, Representation rep) {
  require_prime(p);
  if (r < 0) throw std::invalid_argument("expand: negative value");
  BasePExpansion out;
  out.p = p;
  Int num = numerator(r);
  Int den = denominator(r);
  out.int_part = num / den;
  num -= out.int_part * den;  // fractional numerator in [0, den)

  if (rep == Representation::nonterminating) {
    if (r == 0)
      throw std::invalid_argument("expand: 0 has no nonterminating representation");
    if (num == 0) {  // borrow one from the integer part
      out.int_part -= 1;
      num = den;
    }
  } else if (num == 0) {
    return out;  // terminating, period {0}
  }

  // Long division; the state is the running remainder.  For the
  // nonterminating form the remainder is kept in [1, den], which
  // forces the expansion that ends in repeating digits.
  std::map<Int, std::size_t> seen;
  std::vector<std::int64_t> digits;
  while (true) {
    auto it = seen.find(num);
    if (it != seen.end()) {
      out.preperiod.assign(digits.begin(), digits.begin() + it->second);
      out.period.assign(digits.begin() + it->second, digits.end());
      return out;
    }
    seen.emplace(num, digits.size());
    Int scaled = num * p;
    Int d, rem;
    if (rep == Representation::nonterminating) {
      d = (scaled - 1) / den;
      rem = scaled - d * den;
    } else {
      d = scaled / den;
      rem = scaled - d * den;
    }
    digits.push_back(static_cast<std::int64_t>(d));
    if (rep == Representation::canonical && rem == 0) {
      out.preperiod = std::move(digits);
      out.period = {0};
      return out;
    }
    num = rem;
  }
}

PAdicRational trunc(const Rat& z, long long p, unsigned e) {
  if (z == 0 && e == 0) return PAdicRational(0, 0, p);
  if (z <= 0) throw std::invalid_argument("trunc: requires z > 0");
  BasePExpansion x = expand(z, p, Representation::nonterminating);
  Int acc = x.int_part;
  for (unsigned i = 1; i <= e; ++i) acc = acc * p + x.digit(i);
  return PAdicRational(acc, e, p);
}

std::vector<PAdicRational> tau(const std::vector<BasePExpansion>& v, unsigned e) {
  std::vector<PAdicRational> out;
  out.reserve(v.size());
  for (const BasePExpansion& x : v) {
    Int acc = x.int_part;
    for (unsigned i = 1; i <= e; ++i) acc = acc * x.p + x.digit(i);
    out.emplace_back(acc, e, x.p);
  }
  return out;
}

bool carry_free_sum(const std::vector<std::vector<std::int64_t>>& digits, long long p) {
  if (digits.empty()) return true;
  std::size_t cols = digits.front().size();
  for (const auto& row : digits)
    if (row.size() != cols) throw std::invalid_argument("carry_free_sum: ragged matrix");
  for (std::size_t c = 0; c < cols; ++c) {
    Int sum = 0;
    for (const auto& row : digits) sum += row[c];
    if (sum >= p) return false;
  }
  return true;
}

bool multinomial_nonzero(const Int& k, const std::vector<Int>& u, long long p) {
  require_prime(p);
  Int sum = 0;
  for (const Int& x : u) {
    if (x < 0) throw std::invalid_argument("multinomial_nonzero: negative entry");
    sum += x;
  }
  if (sum != k) return false;
  std::vector<Int> vals = u;
  bool nonzero = true;
  while (nonzero) {
    Int col = 0;
    nonzero = false;
    for (Int& x : vals) {
      col += x % p;
      x /= p;
      if (x != 0) nonzero = true;
    }
    if (col >= p) return false;
  }
  return true;
}

bool admissible(const std::vector<Rat>& v, long long p) {
  require_prime(p);
  for (const Rat& x : v)
    if (x < 0 || x > 1) throw std::invalid_argument("admissible: entry outside [0,1]");

  // Collect the available representations of every entry; terminating
  // positive entries have two.  Only pure fractional expansions count:
  // the simplex lives below ||v|| = 1, so an entry equal to 1 must use
  // the representation 0.(bar)(p-1).
  std::vector<std::vector<BasePExpansion>> reps;
  for (const Rat& x : v) {
    std::vector<BasePExpansion> r;
    BasePExpansion canon = expand(x, p, Representation::canonical);
    bool terminating = canon.is_terminating();
    if (canon.int_part == 0) r.push_back(std::move(canon));
    if (x > 0 && terminating)
      r.push_back(expand(x, p, Representation::nonterminating));
    reps.push_back(std::move(r));
  }

  std::vector<std::size_t> choice(v.size(), 0);
  while (true) {
    std::size_t maxpre = 0;
    std::uint64_t lcm_period = 1;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const BasePExpansion& x = reps[i][choice[i]];
      maxpre = std::max(maxpre, x.preperiod.size());
      lcm_period = std::lcm<std::uint64_t>(lcm_period, x.period.size());
    }
    // Column sums repeat with period lcm_period past the preperiods,
    // so checking through maxpre + lcm_period covers all columns.
    bool ok = true;
    {
      Int col0 = 0;
      for (std::size_t i = 0; i < v.size(); ++i)
        col0 += reps[i][choice[i]].int_part;
      if (col0 >= p) ok = false;
    }
    for (std::size_t c = 1; ok && c <= maxpre + lcm_period; ++c) {
      Int col = 0;
      for (std::size_t i = 0; i < v.size(); ++i) col += reps[i][choice[i]].digit(c);
      if (col >= p) ok = false;
    }
    if (ok) return true;

    // next representation choice
    std::size_t i = 0;
    for (; i < v.size(); ++i) {
      if (++choice[i] < reps[i].size()) break;
      choice[i] = 0;
    }
    if (i == v.size()) return false;
  }
}

}  // namespace frobpow
