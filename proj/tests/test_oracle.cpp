#include <frobpow/oracle.hpp>

#include <doctest.h>

#include <random>

using namespace frobpow;

namespace {

Monomial mono(std::vector<long long> e) {
  return Monomial(std::vector<Int>(e.begin(), e.end()));
}

MonomialIdeal make(std::initializer_list<std::vector<long long>> gens) {
  std::vector<Monomial> ms;
  for (const auto& g : gens) ms.push_back(mono(g));
  int m = static_cast<int>(ms.front().num_vars());
  return MonomialIdeal(m, std::move(ms));
}

// Definition applied literally: floors of A*u/q over every u in N^n with
// ||u|| = k and nonzero multinomial coefficient mod p.
MonomialIdeal padic_power_slow(const MonomialIdeal& ideal, long long k, const Int& q,
                               long long p) {
  ExponentMatrix A = exponent_matrix(ideal);
  std::vector<Monomial> gens;
  std::vector<Int> u(A.cols);
  auto rec = [&](auto&& self, std::size_t j, long long left) -> void {
    if (j + 1 == u.size()) {
      u[j] = left;
      if (!multinomial_nonzero(k, u, p)) return;
      std::vector<Int> Au = A.apply(u);
      for (Int& x : Au) x /= q;
      gens.emplace_back(std::move(Au));
      return;
    }
    for (long long c = 0; c <= left; ++c) {
      u[j] = c;
      self(self, j + 1, left - c);
    }
  };
  if (u.empty()) return MonomialIdeal::unit(static_cast<int>(A.rows));
  rec(rec, 0, k);
  if (gens.empty()) return MonomialIdeal::unit(static_cast<int>(A.rows));
  return MonomialIdeal(static_cast<int>(A.rows), std::move(gens));
}

}  // namespace

TEST_CASE("integer_frobenius_power") {
  MonomialIdeal xy = make({{1, 0}, {0, 1}});
  CHECK(integer_frobenius_power(xy, 0, 2).is_unit());
  CHECK(integer_frobenius_power(xy, 1, 2) == xy);
  CHECK(integer_frobenius_power(xy, 2, 2) == make({{2, 0}, {0, 2}}));
  // k = 3 = (11)_2: I * I^[2]
  CHECK(integer_frobenius_power(xy, 3, 2) ==
        make({{3, 0}, {2, 1}, {1, 2}, {0, 3}}));

  MonomialIdeal principal = make({{1, 1}});
  CHECK(integer_frobenius_power(principal, 7, 3) == make({{7, 7}}));
}

TEST_CASE("padic_power basic values") {
  MonomialIdeal I = make({{2, 2, 0}, {0, 3, 3}});
  CHECK(padic_power(I, 0, 1, 5).is_unit());
  CHECK(padic_power(I, 5, 5, 5) == I);     // I^[1] = I
  CHECK(padic_power(I, 1, 5, 5).is_unit());  // floors vanish

  MonomialIdeal xsq = make({{2}});
  CHECK(padic_power(xsq, 1, 2, 2) == make({{1}}));   // floor(2/2)
  CHECK(padic_power(xsq, 3, 4, 2) == make({{1}}));   // floor(6/4)
  CHECK(padic_power(xsq, 7, 8, 2) == make({{1}}));
  CHECK(padic_power(xsq, 4, 8, 2) == make({{1}}));
  CHECK(padic_power(xsq, 3, 8, 2).is_unit());
}

TEST_CASE("padic_power matches the literal definition") {
  std::vector<MonomialIdeal> ideals{
      make({{2, 2, 0}, {0, 3, 3}}),
      make({{1, 0}, {0, 1}}),
      make({{2, 0}, {1, 1}}),
      make({{3, 1}, {1, 2}, {0, 4}}),
  };
  for (long long p : {2, 3, 5}) {
    for (unsigned e = 1; e <= 2; ++e) {
      Int q = pow_int(p, e);
      for (const MonomialIdeal& I : ideals) {
        for (Int k = 0; k < q; ++k) {
          CAPTURE(p);
          CAPTURE(e);
          CAPTURE(k.convert_to<long long>());
          CHECK(padic_power(I, k, q, p) ==
                padic_power_slow(I, k.convert_to<long long>(), q, p));
        }
      }
    }
  }
}

TEST_CASE("member agrees with padic_power") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> edist(0, 3);
  MonomialIdeal I = make({{2, 2, 0}, {0, 3, 3}});
  for (long long p : {2, 3}) {
    Int q = pow_int(p, 2);
    for (Int k = 0; k < q; ++k) {
      MonomialIdeal power = padic_power(I, k, q, p);
      for (int trial = 0; trial < 8; ++trial) {
        Monomial b = mono({edist(rng), edist(rng), edist(rng)});
        CHECK(member(I, b, k, q, p) == power.contains(b));
      }
    }
  }
}

TEST_CASE("MemberTable agrees with member") {
  for (long long p : {2, 3, 5}) {
    for (const MonomialIdeal& I :
         {make({{2, 2, 0}, {0, 3, 3}}), make({{2, 0}, {1, 1}})}) {
      unsigned e = 2;
      MemberTable table(I, p, e);
      Int q = pow_int(p, e);
      REQUIRE(table.q() == q);
      std::mt19937 rng(37 + p);
      std::uniform_int_distribution<int> edist(0, 4);
      for (Int k = 0; k < q; ++k) {
        for (int trial = 0; trial < 6; ++trial) {
          std::vector<long long> be(I.num_vars());
          for (auto& x : be) x = edist(rng);
          Monomial b = mono(be);
          CAPTURE(p);
          CAPTURE(k.convert_to<long long>());
          CHECK(table.member(b, k) == member(I, b, k, q, p));
        }
      }
    }
  }
}

TEST_CASE("scan_powers") {
  MonomialIdeal I = make({{2, 2, 0}, {0, 3, 3}});
  auto runs = scan_powers(I, 3, 3);
  REQUIRE(!runs.empty());
  CHECK(runs.front().t.value() == 0);
  CHECK(runs.front().power.is_unit());
  for (std::size_t i = 1; i < runs.size(); ++i) {
    CHECK(runs[i - 1].t.value() < runs[i].t.value());
    CHECK(runs[i].power != runs[i - 1].power);  // runs are merged
  }
  // powers shrink as t grows: every later power lies inside every earlier one
  for (std::size_t i = 1; i < runs.size(); ++i)
    for (const Monomial& g : runs[i].power.gens())
      CHECK(runs[i - 1].power.contains(g));
  // each run reproduces the pointwise oracle at its left endpoint
  for (const ScanEntry& run : runs) {
    Int q = pow_int(3, run.t.exp);
    CHECK(padic_power(I, run.t.num, q, 3) == run.power);
  }
}

TEST_CASE("budget enforcement") {
  MonomialIdeal I = make({{2, 2, 0}, {0, 3, 3}});
  Budget tiny{4};
  CHECK_THROWS_AS(padic_power(I, 24, 25, 5, tiny), BudgetExceeded);
  CHECK_THROWS_AS(integer_frobenius_power(I, 1000000, 2, Budget{2}), BudgetExceeded);
}

TEST_CASE("oracle input validation") {
  MonomialIdeal I = make({{1, 0}, {0, 1}});
  CHECK_THROWS_AS(padic_power(I, 1, 3, 2), std::invalid_argument);  // q not a power
  CHECK_THROWS_AS(padic_power(I, 1, 2, 4), std::invalid_argument);  // p not prime
}
