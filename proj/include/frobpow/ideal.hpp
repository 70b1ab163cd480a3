#pragma once

#include <frobpow/numeric.hpp>

#include <string>
#include <vector>

namespace frobpow {

/// Exponent vector of a monomial x^b in m variables.
struct Monomial {
  std::vector<Int> exps;

  Monomial() = default;
  explicit Monomial(std::vector<Int> e) : exps(std::move(e)) {}

  std::size_t num_vars() const { return exps.size(); }
  bool is_one() const;
  Int degree() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// true iff a <= b componentwise; throws on length mismatch.
bool divides(const Monomial& a, const Monomial& b);

/// Minimal monomial generators, canonically sorted (descending
/// lexicographic on exponent vectors).  The unit ideal is the
/// distinguished state with generator list {(0,...,0)}.
class MonomialIdeal {
 public:
  MonomialIdeal(int num_vars, std::vector<Monomial> gens);
  static MonomialIdeal unit(int num_vars);

  int num_vars() const { return num_vars_; }
  const std::vector<Monomial>& gens() const { return gens_; }
  bool is_unit() const;

  /// true iff some generator divides b.
  bool contains(const Monomial& b) const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  int num_vars_;
  std::vector<Monomial> gens_;
};

inline MonomialIdeal minimalize(int num_vars, std::vector<Monomial> gens) {
  return MonomialIdeal(num_vars, std::move(gens));
}

/// m x n matrix whose columns are the generator exponent vectors,
/// in canonical generator order.  Requires a proper ideal.
struct ExponentMatrix {
  std::size_t rows = 0;  // m, number of variables
  std::size_t cols = 0;  // n, number of generators
  std::vector<std::vector<Int>> a;  // a[i][j]

  Int max_entry() const;
  /// Row sum sum_j a[i][j].
  Int row_sum(std::size_t i) const;
  std::vector<Int> apply(const std::vector<Int>& u) const;  // A*u
};

ExponentMatrix exponent_matrix(const MonomialIdeal& ideal);

MonomialIdeal multiply(const MonomialIdeal& lhs, const MonomialIdeal& rhs);
MonomialIdeal ordinary_power(const MonomialIdeal& ideal, const Int& k);
MonomialIdeal bracket_power(const MonomialIdeal& ideal, const Int& q);
/// Generator-wise floor division of exponents by q, minimalized.
MonomialIdeal bracket_root(const MonomialIdeal& ideal, const Int& q);

struct ParsedIdeal {
  MonomialIdeal ideal;
  std::vector<std::string> vars;
};

/// Accepts either the text grammar ("x^2*y^2, y^3*z^3") or the JSON
/// form {"vars":["x","y","z"],"gens":[[2,2,0],[0,3,3]]}.  Variables
/// are ordered by first appearance unless `vars` is supplied.
ParsedIdeal parse_ideal(const std::string& text,
                        const std::vector<std::string>& vars = {});

Monomial parse_exponent_csv(const std::string& csv, int num_vars);

std::vector<std::string> default_var_names(int m);
std::string to_string(const Monomial& mono, const std::vector<std::string>& vars);
std::string to_string(const MonomialIdeal& ideal, const std::vector<std::string>& vars);

}  // namespace frobpow
