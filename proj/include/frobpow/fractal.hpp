#pragma once

#include <frobpow/base_p.hpp>
#include <frobpow/ideal.hpp>

#include <string>
#include <vector>

namespace frobpow {

struct SimplexSpec {
  long long p = 2;
  int d = 2;      // dimension
  int depth = 1;  // iteration count
};

/// Points of the open (p,d)-Sierpinski simplex after `depth`
/// iterations: S_1 = X/p, S_i = S_{i-1} + X/p^i for
/// X = {w in N^d : ||w|| < p}.  |S_depth| = binom(p+d-1,d)^depth.
std::vector<std::vector<PAdicRational>> sierpinski_points(const SimplexSpec& spec);

/// Open-simplex membership: canonical terminating representations only.
bool open_member(const std::vector<Rat>& v, long long p);

/// Closed-simplex membership (admissibility).
bool closed_member(const std::vector<Rat>& v, long long p);

struct FractalDimension {
  Int count;     // binom(p+d-1, d)
  long long p;   // log base
  double value;  // log_p(count)
};

FractalDimension dimension(long long p, int d);

struct PlotOptions {
  bool labels = true;
  std::vector<Rat> overlay;  // level lines ||u|| = t
};

/// Figure-style SVG of the [0,q]^2 subdivision for a two-generator
/// ideal: dashed constraint lines (A*u)_i = c*q and per-cell monomial
/// labels x^floor(A*u/q) at cell centroids.
std::string plot_subdivision(const MonomialIdeal& ideal,
                             const std::vector<std::string>& vars, const Int& q,
                             const PlotOptions& opts = {});

}  // namespace frobpow
