#include <frobpow/fractal.hpp>

#include <doctest.h>

#include <algorithm>
#include <set>

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

}  // namespace

TEST_CASE("sierpinski_points") {
  auto s1 = sierpinski_points(SimplexSpec{2, 2, 1});
  REQUIRE(s1.size() == 3);
  std::set<std::vector<Rat>> vals;
  for (const auto& pt : s1) vals.insert({pt[0].value(), pt[1].value()});
  CHECK(vals == std::set<std::vector<Rat>>{
                    {Rat(0), Rat(0)}, {Rat(1, 2), Rat(0)}, {Rat(0), Rat(1, 2)}});

  auto s2 = sierpinski_points(SimplexSpec{2, 2, 2});
  CHECK(s2.size() == 9);
  auto s3 = sierpinski_points(SimplexSpec{3, 2, 2});
  CHECK(s3.size() == 36);  // binom(4,2)^2

  SUBCASE("every generated point is a member") {
    for (const auto& points : {s2, s3}) {
      long long p = points.front().front().p;
      for (const auto& pt : points) {
        std::vector<Rat> v{pt[0].value(), pt[1].value()};
        CAPTURE(p);
        CHECK(open_member(v, p));
        CHECK(closed_member(v, p));
      }
    }
  }

  CHECK_THROWS_AS(sierpinski_points(SimplexSpec{4, 2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(sierpinski_points(SimplexSpec{2, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(sierpinski_points(SimplexSpec{2, 2, 40}), std::invalid_argument);
}

TEST_CASE("open vs closed membership") {
  // boundary point: in the closed simplex only
  CHECK_FALSE(open_member({Rat(1, 2), Rat(1, 2)}, 2));
  CHECK(closed_member({Rat(1, 2), Rat(1, 2)}, 2));

  CHECK(open_member({Rat(1, 2), Rat(1, 4)}, 2));
  CHECK(open_member({Rat(1, 3), Rat(1, 3)}, 3));
  CHECK_FALSE(open_member({Rat(1, 2), Rat(1, 2)}, 3));  // not p-adic
  CHECK(closed_member({Rat(1, 2), Rat(1, 2)}, 3));

  CHECK(open_member({Rat(0), Rat(0)}, 2));
  CHECK(open_member({Rat(1)}, 2));
  CHECK_FALSE(open_member({Rat(3, 4), Rat(1, 2)}, 2));  // digit carry
  CHECK_FALSE(closed_member({Rat(3, 4), Rat(1, 2)}, 2));  // sum > 1

  CHECK_THROWS_AS(open_member({Rat(3, 2)}, 2), std::invalid_argument);
}

TEST_CASE("dimension") {
  FractalDimension d22 = dimension(2, 2);
  CHECK(d22.count == 3);
  CHECK(d22.p == 2);
  CHECK(d22.value == doctest::Approx(1.584962500721156).epsilon(1e-12));

  FractalDimension d32 = dimension(3, 2);
  CHECK(d32.count == 6);
  CHECK(d32.value == doctest::Approx(1.6309297535714575).epsilon(1e-12));

  FractalDimension d53 = dimension(5, 3);
  CHECK(d53.count == 35);  // binom(7,3)

  CHECK_THROWS_AS(dimension(4, 2), std::invalid_argument);
  CHECK_THROWS_AS(dimension(2, 0), std::invalid_argument);
}

TEST_CASE("plot_subdivision") {
  MonomialIdeal I = make({{2, 2, 0}, {0, 3, 3}});
  std::vector<std::string> vars{"x", "y", "z"};
  std::string svg = plot_subdivision(I, vars, 12);

  CHECK(svg.substr(0, 4) == "<svg");
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(svg.find("width=\"576.00\"") != std::string::npos);
  CHECK(svg.find("stroke-dasharray") != std::string::npos);
  CHECK(svg.find(">u1</text>") != std::string::npos);
  // the cell at the origin is labeled 1, deeper cells carry monomials
  CHECK(svg.find(">1</text>") != std::string::npos);
  CHECK(svg.find("x") != std::string::npos);

  // byte-for-byte deterministic
  CHECK(plot_subdivision(I, vars, 12) == svg);

  // labels off removes the cell text
  std::string bare = plot_subdivision(I, vars, 12, PlotOptions{false, {}});
  CHECK(bare.find(">1</text>") == std::string::npos);
  CHECK(bare.size() < svg.size());

  // overlay adds exactly one line per in-range level value
  PlotOptions over;
  over.overlay = {Rat(1, 2), Rat(1)};
  std::string with = plot_subdivision(I, vars, 12, over);
  CHECK(with.find("#1f4fd8") != std::string::npos);

  CHECK_THROWS_AS(plot_subdivision(make({{1, 1}}), {"x", "y"}, 12),
                  std::invalid_argument);
  CHECK_THROWS_AS(plot_subdivision(I, vars, 0), std::invalid_argument);
}
