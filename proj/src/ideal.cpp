#include <frobpow/ideal.hpp>

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

namespace frobpow {

bool Monomial::is_one() const {
  return std::all_of(exps.begin(), exps.end(), [](const Int& e) { return e == 0; });
}

Int Monomial::degree() const {
  Int d = 0;
  for (const Int& e : exps) d += e;
  return d;
}

bool divides(const Monomial& a, const Monomial& b) {
  if (a.exps.size() != b.exps.size())
    throw std::invalid_argument("divides: variable count mismatch");
  for (std::size_t i = 0; i < a.exps.size(); ++i)
    if (a.exps[i] > b.exps[i]) return false;
  return true;
}

MonomialIdeal::MonomialIdeal(int num_vars, std::vector<Monomial> gens)
    : num_vars_(num_vars) {
  if (num_vars < 1) throw std::invalid_argument("ideal needs at least one variable");
  if (gens.empty()) throw std::invalid_argument("ideal needs at least one generator");
  for (const Monomial& g : gens) {
    if (static_cast<int>(g.num_vars()) != num_vars)
      throw std::invalid_argument("generator length does not match variable count");
    for (const Int& e : g.exps)
      if (e < 0) throw std::invalid_argument("negative exponent");
  }
  // Ascending lex puts every divisor before its multiples, so a single
  // forward pass minimalizes.  The canonical order is the reverse.
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& a, const Monomial& b) { return a.exps < b.exps; });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  if (gens.front().is_one()) {  // 1 divides everything
    gens_ = {gens.front()};
    return;
  }
  for (const Monomial& g : gens) {
    bool dominated = false;
    for (const Monomial& h : gens_)
      if (divides(h, g)) {
        dominated = true;
        break;
      }
    if (!dominated) gens_.push_back(g);
  }
  std::reverse(gens_.begin(), gens_.end());
}

MonomialIdeal MonomialIdeal::unit(int num_vars) {
  return MonomialIdeal(num_vars, {Monomial(std::vector<Int>(num_vars, 0))});
}

bool MonomialIdeal::is_unit() const {
  return gens_.size() == 1 && gens_[0].is_one();
}

bool MonomialIdeal::contains(const Monomial& b) const {
  for (const Monomial& g : gens_)
    if (divides(g, b)) return true;
  return false;
}

Int ExponentMatrix::max_entry() const {
  Int m = 0;
  for (const auto& row : a)
    for (const Int& v : row) m = std::max(m, v);
  return m;
}

Int ExponentMatrix::row_sum(std::size_t i) const {
  Int s = 0;
  for (const Int& v : a[i]) s += v;
  return s;
}

std::vector<Int> ExponentMatrix::apply(const std::vector<Int>& u) const {
  if (u.size() != cols) throw std::invalid_argument("ExponentMatrix::apply: size mismatch");
  std::vector<Int> out(rows, 0);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (a[i][j] != 0) out[i] += a[i][j] * u[j];
  return out;
}

ExponentMatrix exponent_matrix(const MonomialIdeal& ideal) {
  if (ideal.is_unit())
    throw std::invalid_argument("exponent_matrix: ideal must be proper");
  ExponentMatrix mat;
  mat.rows = static_cast<std::size_t>(ideal.num_vars());
  mat.cols = ideal.gens().size();
  mat.a.assign(mat.rows, std::vector<Int>(mat.cols, 0));
  for (std::size_t j = 0; j < mat.cols; ++j)
    for (std::size_t i = 0; i < mat.rows; ++i)
      mat.a[i][j] = ideal.gens()[j].exps[i];
  return mat;
}

MonomialIdeal multiply(const MonomialIdeal& lhs, const MonomialIdeal& rhs) {
  if (lhs.num_vars() != rhs.num_vars())
    throw std::invalid_argument("multiply: variable count mismatch");
  std::vector<Monomial> gens;
  gens.reserve(lhs.gens().size() * rhs.gens().size());
  for (const Monomial& g : lhs.gens())
    for (const Monomial& h : rhs.gens()) {
      std::vector<Int> e(g.exps.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = g.exps[i] + h.exps[i];
      gens.emplace_back(std::move(e));
    }
  return MonomialIdeal(lhs.num_vars(), std::move(gens));
}

MonomialIdeal ordinary_power(const MonomialIdeal& ideal, const Int& k) {
  if (k < 0) throw std::invalid_argument("ordinary_power: negative exponent");
  MonomialIdeal result = MonomialIdeal::unit(ideal.num_vars());
  for (Int i = 0; i < k; ++i) result = multiply(result, ideal);
  return result;
}

MonomialIdeal bracket_power(const MonomialIdeal& ideal, const Int& q) {
  if (q < 1) throw std::invalid_argument("bracket_power: q must be positive");
  std::vector<Monomial> gens;
  for (const Monomial& g : ideal.gens()) {
    std::vector<Int> e(g.exps.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = g.exps[i] * q;
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(ideal.num_vars(), std::move(gens));
}

MonomialIdeal bracket_root(const MonomialIdeal& ideal, const Int& q) {
  if (q < 1) throw std::invalid_argument("bracket_root: q must be positive");
  std::vector<Monomial> gens;
  for (const Monomial& g : ideal.gens()) {
    std::vector<Int> e(g.exps.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = g.exps[i] / q;
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(ideal.num_vars(), std::move(gens));
}

namespace {

struct RawTerm {
  std::string var;
  Int exp;
};

[[noreturn]] void syntax_error(const std::string& text, std::size_t pos,
                               const std::string& what) {
  std::ostringstream os;
  os << "syntax error at position " << pos << " in \"" << text << "\": " << what;
  throw std::invalid_argument(os.str());
}

ParsedIdeal parse_ideal_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  std::vector<std::string> vars = j.at("vars").get<std::vector<std::string>>();
  if (vars.empty()) throw std::invalid_argument("JSON ideal: empty variable list");
  std::vector<Monomial> gens;
  for (const auto& g : j.at("gens")) {
    std::vector<Int> e;
    for (const auto& v : g) {
      long long x = v.get<long long>();
      if (x < 0) throw std::invalid_argument("JSON ideal: negative exponent");
      e.emplace_back(x);
    }
    if (e.size() != vars.size())
      throw std::invalid_argument("JSON ideal: generator length mismatch");
    gens.emplace_back(std::move(e));
  }
  if (gens.empty()) throw std::invalid_argument("JSON ideal: empty generator list");
  return ParsedIdeal{MonomialIdeal(static_cast<int>(vars.size()), std::move(gens)), vars};
}

}  // namespace

ParsedIdeal parse_ideal(const std::string& text, const std::vector<std::string>& vars) {
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw std::invalid_argument("empty ideal");
  if (text[first] == '{') return parse_ideal_json(text);

  std::vector<std::string> var_order = vars;
  std::map<std::string, std::size_t> var_index;
  for (std::size_t i = 0; i < var_order.size(); ++i) var_index[var_order[i]] = i;
  bool fixed_vars = !vars.empty();

  std::vector<std::vector<RawTerm>> monomials(1);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    char c = text[pos];
    if (c == ',') {
      if (monomials.back().empty()) syntax_error(text, pos, "empty generator");
      monomials.emplace_back();
      ++pos;
      skip_ws();
      continue;
    }
    if (c == '*') {
      if (monomials.back().empty()) syntax_error(text, pos, "unexpected '*'");
      ++pos;
      skip_ws();
      continue;
    }
    if (!std::isalpha(static_cast<unsigned char>(c)) && c != '_')
      syntax_error(text, pos, "expected variable name");
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    RawTerm term{text.substr(start, pos - start), 1};
    skip_ws();
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      skip_ws();
      if (pos >= text.size()) syntax_error(text, pos, "expected exponent");
      if (text[pos] == '-') syntax_error(text, pos, "negative exponent");
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        syntax_error(text, pos, "expected exponent");
      std::size_t dstart = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      term.exp = Int(text.substr(dstart, pos - dstart));
      skip_ws();
    }
    if (!var_index.count(term.var)) {
      if (fixed_vars)
        syntax_error(text, start, "unknown variable '" + term.var + "'");
      var_index[term.var] = var_order.size();
      var_order.push_back(term.var);
    }
    monomials.back().push_back(std::move(term));
  }
  if (monomials.back().empty()) syntax_error(text, text.size(), "empty generator");

  int m = static_cast<int>(var_order.size());
  std::vector<Monomial> gens;
  for (const auto& terms : monomials) {
    std::vector<Int> e(m, 0);
    for (const RawTerm& t : terms) e[var_index.at(t.var)] += t.exp;
    gens.emplace_back(std::move(e));
  }
  return ParsedIdeal{MonomialIdeal(m, std::move(gens)), var_order};
}

Monomial parse_exponent_csv(const std::string& csv, int num_vars) {
  std::vector<Int> e;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.find_first_not_of(" -0123456789") != std::string::npos)
      throw std::invalid_argument("bad exponent list: " + csv);
    Int v(item);
    if (v < 0) throw std::invalid_argument("negative exponent in: " + csv);
    e.push_back(v);
  }
  if (static_cast<int>(e.size()) != num_vars)
    throw std::invalid_argument("expected " + std::to_string(num_vars) +
                                " exponents in: " + csv);
  return Monomial(std::move(e));
}

std::vector<std::string> default_var_names(int m) {
  static const char* few[] = {"x", "y", "z", "w"};
  std::vector<std::string> names;
  if (m <= 4) {
    for (int i = 0; i < m; ++i) names.emplace_back(few[i]);
  } else {
    for (int i = 1; i <= m; ++i) names.push_back("x" + std::to_string(i));
  }
  return names;
}

std::string to_string(const Monomial& mono, const std::vector<std::string>& vars) {
  if (mono.is_one()) return "1";
  std::string out;
  for (std::size_t i = 0; i < mono.exps.size(); ++i) {
    if (mono.exps[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += vars.at(i);
    if (mono.exps[i] != 1) {
      out += '^';
      out += mono.exps[i].str();
    }
  }
  return out;
}

std::string to_string(const MonomialIdeal& ideal, const std::vector<std::string>& vars) {
  std::string out;
  for (const Monomial& g : ideal.gens()) {
    if (!out.empty()) out += ", ";
    out += to_string(g, vars);
  }
  return out;
}

}  // namespace frobpow
