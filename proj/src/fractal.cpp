#include <frobpow/fractal.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace frobpow {

namespace {

std::vector<std::vector<std::int64_t>> norm_below_p(long long p, int d) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> cur(d, 0);
  std::function<void(int, std::int64_t)> rec = [&](int j, std::int64_t used) {
    if (j == d) {
      out.push_back(cur);
      return;
    }
    for (std::int64_t t = 0; used + t < p; ++t) {
      cur[j] = t;
      rec(j + 1, used + t);
    }
  };
  rec(0, 0);
  return out;
}

}  // namespace

std::vector<std::vector<PAdicRational>> sierpinski_points(const SimplexSpec& spec) {
  require_prime(spec.p);
  if (spec.d < 1 || spec.depth < 1)
    throw std::invalid_argument("sierpinski_points: d and depth must be positive");
  auto X = norm_below_p(spec.p, spec.d);

  double est = std::pow(static_cast<double>(X.size()), spec.depth);
  if (est > 1e7) throw std::invalid_argument("sierpinski_points: depth too large");

  std::vector<std::vector<PAdicRational>> points;
  std::vector<Int> num(spec.d, 0);  // numerators at scale p^depth
  std::function<void(int)> rec = [&](int level) {
    if (level == spec.depth) {
      std::vector<PAdicRational> pt;
      pt.reserve(spec.d);
      for (const Int& n : num)
        pt.emplace_back(n, static_cast<unsigned>(spec.depth), spec.p);
      points.push_back(std::move(pt));
      return;
    }
    Int scale = pow_int(spec.p, static_cast<unsigned>(spec.depth - level - 1));
    for (const auto& w : X) {
      for (int j = 0; j < spec.d; ++j) num[j] += scale * w[j];
      rec(level + 1);
      for (int j = 0; j < spec.d; ++j) num[j] -= scale * w[j];
    }
  };
  rec(0);
  return points;
}

bool open_member(const std::vector<Rat>& v, long long p) {
  require_prime(p);
  for (const Rat& x : v)
    if (x < 0 || x > 1) throw std::invalid_argument("open_member: entry outside [0,1]");
  // The only member with a unit digit is a vertex of the simplex.
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 1) continue;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (j != i && v[j] != 0) return false;
    return true;
  }
  std::vector<BasePExpansion> reps;
  for (const Rat& x : v) {
    BasePExpansion r = expand(x, p, Representation::canonical);
    if (!r.is_terminating()) return false;  // open simplex is p-adic only
    reps.push_back(std::move(r));
  }
  std::size_t maxpre = 0;
  for (const auto& r : reps) maxpre = std::max(maxpre, r.preperiod.size());
  for (std::size_t c = 1; c <= maxpre; ++c) {
    Int col = 0;
    for (const auto& r : reps) col += r.digit(c);
    if (col >= p) return false;
  }
  return true;
}

bool closed_member(const std::vector<Rat>& v, long long p) {
  return admissible(v, p);
}

FractalDimension dimension(long long p, int d) {
  require_prime(p);
  if (d < 1) throw std::invalid_argument("dimension: d must be positive");
  // binom(p + d - 1, d)
  Int count = 1;
  for (int i = 1; i <= d; ++i) {
    count *= p - 1 + i;
    count /= i;
  }
  double value = std::log(count.convert_to<double>()) /
                 std::log(static_cast<double>(p));
  return FractalDimension{count, p, value};
}

namespace {

using Pt = std::array<Rat, 2>;

// Half-plane a*u1 + b*u2 + c >= 0.
struct HalfPlane {
  Rat a, b, c;
  Rat eval(const Pt& u) const { return a * u[0] + b * u[1] + c; }
};

std::vector<Pt> clip(const std::vector<Pt>& poly, const HalfPlane& h) {
  std::vector<Pt> out;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Pt& cur = poly[i];
    const Pt& nxt = poly[(i + 1) % poly.size()];
    Rat fc = h.eval(cur), fn = h.eval(nxt);
    if (fc >= 0) out.push_back(cur);
    if ((fc < 0) != (fn < 0)) {
      Rat t = fc / (fc - fn);
      out.push_back(Pt{cur[0] + t * (nxt[0] - cur[0]), cur[1] + t * (nxt[1] - cur[1])});
    }
  }
  return out;
}

Rat twice_area(const std::vector<Pt>& poly) {
  Rat s = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Pt& a = poly[i];
    const Pt& b = poly[(i + 1) % poly.size()];
    s += a[0] * b[1] - b[0] * a[1];
  }
  return s;
}

Pt centroid(const std::vector<Pt>& poly, const Rat& area2) {
  Rat cx = 0, cy = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Pt& a = poly[i];
    const Pt& b = poly[(i + 1) % poly.size()];
    Rat cross = a[0] * b[1] - b[0] * a[1];
    cx += (a[0] + b[0]) * cross;
    cy += (a[1] + b[1]) * cross;
  }
  return Pt{cx / (3 * area2), cy / (3 * area2)};
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

// Endpoints of the segment {a*u1 + b*u2 = c} within [0,q]^2, or empty.
std::vector<Pt> line_in_box(const Rat& a, const Rat& b, const Rat& c, const Int& q) {
  std::vector<Pt> pts;
  auto push = [&](const Rat& x, const Rat& y) {
    if (x < 0 || x > q || y < 0 || y > q) return;
    Pt pt{x, y};
    for (const Pt& e : pts)
      if (e == pt) return;
    pts.push_back(pt);
  };
  if (b != 0) {
    push(Rat(0), c / b);
    push(Rat(q), (c - a * q) / b);
  }
  if (a != 0) {
    push(c / a, Rat(0));
    push((c - b * q) / a, Rat(q));
  }
  std::sort(pts.begin(), pts.end());
  if (pts.size() < 2) return {};
  return {pts.front(), pts.back()};
}

}  // namespace

std::string plot_subdivision(const MonomialIdeal& ideal,
                             const std::vector<std::string>& vars, const Int& q,
                             const PlotOptions& opts) {
  if (ideal.is_unit() || ideal.gens().size() != 2)
    throw std::invalid_argument("plot_subdivision: ideal must have exactly 2 generators");
  if (q <= 0) throw std::invalid_argument("plot_subdivision: q must be positive");
  ExponentMatrix A = exponent_matrix(ideal);

  // Styling constants.
  const double plot_px = 480.0;
  const double margin_px = 48.0;
  const double size_px = plot_px + 2 * margin_px;
  const char* grid_style = "stroke=\"#cccccc\" stroke-width=\"0.5\"";
  const char* axis_style = "stroke=\"#000000\" stroke-width=\"1.5\"";
  const char* dash_style = "stroke=\"#333333\" stroke-width=\"1.2\" stroke-dasharray=\"8,5\"";
  const char* overlay_style = "stroke=\"#1f4fd8\" stroke-width=\"2\"";
  const char* label_style = "font-family=\"monospace\" font-size=\"14\" text-anchor=\"middle\"";

  const double qd = q.convert_to<double>();
  const double scale = plot_px / qd;
  auto px = [&](const Rat& u1) {
    return margin_px + u1.convert_to<double>() * scale;
  };
  auto py = [&](const Rat& u2) {
    return margin_px + (qd - u2.convert_to<double>()) * scale;
  };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(size_px)
      << "\" height=\"" << fmt(size_px) << "\" viewBox=\"0 0 " << fmt(size_px)
      << " " << fmt(size_px) << "\">\n";

  // Unit grid (skipped for large q).
  if (q <= 32) {
    for (Int g = 0; g <= q; ++g) {
      svg << "<line x1=\"" << fmt(px(Rat(g))) << "\" y1=\"" << fmt(py(Rat(0)))
          << "\" x2=\"" << fmt(px(Rat(g))) << "\" y2=\"" << fmt(py(Rat(q)))
          << "\" " << grid_style << "/>\n";
      svg << "<line x1=\"" << fmt(px(Rat(0))) << "\" y1=\"" << fmt(py(Rat(g)))
          << "\" x2=\"" << fmt(px(Rat(q))) << "\" y2=\"" << fmt(py(Rat(g)))
          << "\" " << grid_style << "/>\n";
    }
  }

  // Axes.
  svg << "<line x1=\"" << fmt(px(Rat(0))) << "\" y1=\"" << fmt(py(Rat(0)))
      << "\" x2=\"" << fmt(px(Rat(q))) << "\" y2=\"" << fmt(py(Rat(0))) << "\" "
      << axis_style << "/>\n";
  svg << "<line x1=\"" << fmt(px(Rat(0))) << "\" y1=\"" << fmt(py(Rat(0)))
      << "\" x2=\"" << fmt(px(Rat(0))) << "\" y2=\"" << fmt(py(Rat(q))) << "\" "
      << axis_style << "/>\n";
  svg << "<text x=\"" << fmt(px(Rat(q)) + 18) << "\" y=\"" << fmt(py(Rat(0)) + 5)
      << "\" " << label_style << ">u1</text>\n";
  svg << "<text x=\"" << fmt(px(Rat(0))) << "\" y=\"" << fmt(py(Rat(q)) - 10)
      << "\" " << label_style << ">u2</text>\n";

  // Dashed constraint lines (A*u)_i = c*q for c = 1..row sum.
  for (std::size_t i = 0; i < A.rows; ++i) {
    Rat a(A.a[i][0]), b(A.a[i][1]);
    if (a == 0 && b == 0) continue;
    Int top = A.row_sum(i);
    for (Int c = 1; c <= top; ++c) {
      auto seg = line_in_box(a, b, Rat(c * q), q);
      if (seg.empty()) continue;
      svg << "<line x1=\"" << fmt(px(seg[0][0])) << "\" y1=\"" << fmt(py(seg[0][1]))
          << "\" x2=\"" << fmt(px(seg[1][0])) << "\" y2=\"" << fmt(py(seg[1][1]))
          << "\" " << dash_style << "/>\n";
    }
  }

  // Cell labels at centroids.
  if (opts.labels) {
    std::vector<Int> top(A.rows);
    for (std::size_t i = 0; i < A.rows; ++i) top[i] = A.row_sum(i);
    std::vector<Int> cell(A.rows, 0);
    while (true) {
      std::vector<Pt> poly{{Rat(0), Rat(0)}, {Rat(q), Rat(0)}, {Rat(q), Rat(q)},
                           {Rat(0), Rat(q)}};
      for (std::size_t i = 0; i < A.rows && !poly.empty(); ++i) {
        Rat a(A.a[i][0]), b(A.a[i][1]);
        poly = clip(poly, HalfPlane{a, b, Rat(-cell[i] * q)});
        if (!poly.empty())
          poly = clip(poly, HalfPlane{-a, -b, Rat((cell[i] + 1) * q)});
      }
      if (poly.size() >= 3) {
        Rat area2 = twice_area(poly);
        if (area2 != 0) {
          Pt c = centroid(poly, area2);
          svg << "<text x=\"" << fmt(px(c[0])) << "\" y=\"" << fmt(py(c[1]) + 5)
              << "\" " << label_style << ">"
              << to_string(Monomial(cell), vars) << "</text>\n";
        }
      }
      std::size_t i = 0;
      for (; i < A.rows; ++i) {
        if (++cell[i] <= top[i]) break;
        cell[i] = 0;
      }
      if (i == A.rows) break;
    }
  }

  // Overlay level lines ||u|| = t*q.
  for (const Rat& t : opts.overlay) {
    auto seg = line_in_box(Rat(1), Rat(1), t * q, q);
    if (seg.empty()) continue;
    svg << "<line x1=\"" << fmt(px(seg[0][0])) << "\" y1=\"" << fmt(py(seg[0][1]))
        << "\" x2=\"" << fmt(px(seg[1][0])) << "\" y2=\"" << fmt(py(seg[1][1]))
        << "\" " << overlay_style << "/>\n";
  }

  svg << "</svg>\n";
  return svg.str();
}

}  // namespace frobpow
