#include <frobpow/critical.hpp>
#include <frobpow/fractal.hpp>
#include <frobpow/ideal.hpp>
#include <frobpow/oracle.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace frobpow;
using nlohmann::json;

json ideal_json(const MonomialIdeal& ideal, const std::vector<std::string>& vars) {
  json gens = json::array();
  for (const Monomial& g : ideal.gens()) {
    json e = json::array();
    for (const Int& x : g.exps) e.push_back(x.convert_to<long long>());
    gens.push_back(e);
  }
  return json{{"vars", vars}, {"gens", gens}};
}

Rat parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(Int(s));
  return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

void print_trace(const std::vector<TraceLevel>& trace) {
  for (const TraceLevel& lvl : trace)
    std::cout << "e=" << lvl.e << " lambda_e=" << rat_str(lvl.lambda_e.value())
              << " candidates=" << lvl.candidates << " cycles=" << lvl.cycles
              << "\n";
}

void print_critical(const CriticalResult& res, bool as_json, bool with_trace) {
  if (as_json) {
    json j{{"lambda", rat_str(res.lambda)},
           {"expansion", res.expansion.str()},
           {"reduced_by", res.reduced_by.convert_to<long long>()}};
    json witness = json::array();
    for (const BasePExpansion& w : res.witness) witness.push_back(w.str());
    j["witness"] = witness;
    if (with_trace) {
      json trace = json::array();
      for (const TraceLevel& lvl : res.trace)
        trace.push_back(json{{"e", lvl.e},
                             {"lambda_e", rat_str(lvl.lambda_e.value())},
                             {"candidates", lvl.candidates},
                             {"cycles", lvl.cycles}});
      j["trace"] = trace;
    }
    std::cout << j.dump() << "\n";
    return;
  }
  if (with_trace) print_trace(res.trace);
  std::cout << rat_str(res.lambda) << "\n";
  std::cout << "expansion: " << res.expansion.str() << "\n";
  for (const BasePExpansion& w : res.witness)
    std::cout << "witness: " << w.str() << "\n";
  if (res.reduced_by > 0) std::cout << "skoda shifts: " << res.reduced_by << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Frobenius powers and critical exponents of monomial ideals"};
  app.require_subcommand(1);

  std::string ideal_text, b_csv, t_text, out_path;
  long long p = 2;
  long long k_in = 0;
  std::string q_text = "1";
  unsigned depth = 1;
  bool as_json = false, reduce = false, with_trace = false;
  bool points_mode = false, dimension_mode = false, no_labels = false;
  int fr_d = 2;
  long long fr_p = 2;
  std::uint64_t budget_states = Budget{}.max_states;
  std::string overlay_text;

  app.add_flag("--json", as_json, "machine-readable JSON output");
  app.add_option("--budget", budget_states, "enumeration state budget")
      ->envname("FROBPOW_BUDGET");

  auto add_ideal = [&](CLI::App* cmd) {
    cmd->add_option("--ideal", ideal_text, "ideal generators")->required();
  };
  auto add_p = [&](CLI::App* cmd) { cmd->add_option("-p,--p", p, "prime")->required(); };

  CLI::App* lce_cmd = app.add_subcommand("lce", "least critical exponent");
  add_ideal(lce_cmd);
  add_p(lce_cmd);
  lce_cmd->add_flag("--trace", with_trace, "per-level trace");

  CLI::App* crit_cmd = app.add_subcommand("crit", "critical exponent of x^b");
  add_ideal(crit_cmd);
  add_p(crit_cmd);
  crit_cmd->add_option("--b", b_csv, "exponent vector, comma separated")->required();
  crit_cmd->add_flag("--reduce", reduce, "apply Skoda shifts when x^b lies in I");
  crit_cmd->add_flag("--trace", with_trace, "per-level trace");

  CLI::App* power_cmd = app.add_subcommand("power", "exact I^[t] for t in [0,1)");
  add_ideal(power_cmd);
  add_p(power_cmd);
  power_cmd->add_option("--t", t_text, "rational exponent")->required();

  CLI::App* oracle_cmd = app.add_subcommand("oracle-power", "definition-level I^[k/q]");
  add_ideal(oracle_cmd);
  add_p(oracle_cmd);
  oracle_cmd->add_option("--k", k_in, "numerator")->required();
  oracle_cmd->add_option("--q", q_text, "denominator, a power of p")->required();

  CLI::App* member_cmd = app.add_subcommand("member", "x^b in I^[k/q]");
  add_ideal(member_cmd);
  add_p(member_cmd);
  member_cmd->add_option("--b", b_csv, "exponent vector")->required();
  member_cmd->add_option("--k", k_in, "numerator")->required();
  member_cmd->add_option("--q", q_text, "denominator, a power of p")->required();

  CLI::App* jumps_cmd = app.add_subcommand("jumps", "jump table on (0,1]");
  add_ideal(jumps_cmd);
  add_p(jumps_cmd);
  unsigned verify_depth = 4;
  jumps_cmd->add_option("--verify-depth", verify_depth,
                        "oracle cross-check depth (0 disables)");

  CLI::App* scan_cmd = app.add_subcommand("scan", "resolution-limited oracle table");
  add_ideal(scan_cmd);
  add_p(scan_cmd);
  scan_cmd->add_option("-e,--e", depth, "scan depth")->required();

  CLI::App* plot_cmd = app.add_subcommand("plot", "SVG subdivision plot");
  add_ideal(plot_cmd);
  std::string q_plot = "12";
  plot_cmd->add_option("--q", q_plot, "grid size")->required();
  plot_cmd->add_option("-o,--out", out_path, "output file")->required();
  plot_cmd->add_flag("--no-labels", no_labels, "suppress cell labels");
  plot_cmd->add_option("--overlay", overlay_text, "comma-separated level line values");

  CLI::App* fractal_cmd = app.add_subcommand("fractal", "Sierpinski simplex");
  fractal_cmd->add_option("--p", fr_p, "prime")->required();
  fractal_cmd->add_option("--d", fr_d, "dimension")->required();
  fractal_cmd->add_option("--depth", depth, "iteration count");
  fractal_cmd->add_flag("--points", points_mode, "emit generated points");
  fractal_cmd->add_flag("--dimension", dimension_mode, "emit fractal dimension");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Budget budget{budget_states};
    CriticalOptions opts;
    opts.budget = budget;
    opts.trace = with_trace;
    opts.reduce = reduce;

    if (*lce_cmd) {
      ParsedIdeal parsed = parse_ideal(ideal_text);
      print_critical(lce(parsed.ideal, p, opts), as_json, with_trace);
    } else if (*crit_cmd) {
      ParsedIdeal parsed = parse_ideal(ideal_text);
      Monomial b = parse_exponent_csv(b_csv, parsed.ideal.num_vars());
      print_critical(lambda_b(parsed.ideal, b, p, opts), as_json, with_trace);
    } else if (*power_cmd) {
      ParsedIdeal parsed = parse_ideal(ideal_text);
      MonomialIdeal result = power_at(parsed.ideal, parse_rational(t_text), p, opts);
      if (as_json)
        std::cout << ideal_json(result, parsed.vars).dump() << "\n";
      else
        std::cout << to_string(result, parsed.vars) << "\n";
    } else if (*oracle_cmd) {
      ParsedIdeal parsed = parse_ideal(ideal_text);
      MonomialIdeal result = padic_power(parsed.ideal, k_in, Int(q_text), p, budget);
      if (as_json)
        std::cout << ideal_json(result, parsed.vars).dump() << "\n";
      else
        std::cout << to_string(result, parsed.vars) << "\n";
    } else if (*member_cmd) {
      ParsedIdeal parsed = parse_ideal(ideal_text);
      Monomial b = parse_exponent_csv(b_csv, parsed.ideal.num_vars());
      bool in = member(parsed.ideal, b, k_in, Int(q_text), p, budget);
      if (as_json)
        std::cout << json{{"member", in}}.dump() << "\n";
      else
        std::cout << (in ? "true" : "false") << "\n";
    } else if (*jumps_cmd) {
      ParsedIdeal parsed = parse_ideal(ideal_text);
      JumpTable table = jumps_unit_interval(parsed.ideal, p, opts, verify_depth);
      if (as_json) {
        json j{{"jumps", json::array()}, {"ideals", json::array()}};
        for (const Rat& jump : table.jumps) j["jumps"].push_back(rat_str(jump));
        for (const MonomialIdeal& id : table.ideals)
          j["ideals"].push_back(ideal_json(id, parsed.vars));
        std::cout << j.dump() << "\n";
      } else {
        Rat left = 0;
        for (std::size_t i = 0; i < table.jumps.size(); ++i) {
          std::cout << "[" << rat_str(left) << ", " << rat_str(table.jumps[i])
                    << "): " << to_string(table.ideals[i], parsed.vars) << "\n";
          left = table.jumps[i];
        }
      }
    } else if (*scan_cmd) {
      ParsedIdeal parsed = parse_ideal(ideal_text);
      auto runs = scan_powers(parsed.ideal, p, depth, budget);
      if (as_json) {
        json j = json::array();
        for (const ScanEntry& run : runs)
          j.push_back(json{{"t", rat_str(run.t.value())},
                           {"ideal", ideal_json(run.power, parsed.vars)}});
        std::cout << j.dump() << "\n";
      } else {
        for (const ScanEntry& run : runs)
          std::cout << rat_str(run.t.value()) << ": "
                    << to_string(run.power, parsed.vars) << "\n";
      }
    } else if (*plot_cmd) {
      ParsedIdeal parsed = parse_ideal(ideal_text);
      PlotOptions popts;
      popts.labels = !no_labels;
      if (!overlay_text.empty()) {
        std::stringstream ss(overlay_text);
        std::string item;
        while (std::getline(ss, item, ',')) popts.overlay.push_back(parse_rational(item));
      }
      std::string svg = plot_subdivision(parsed.ideal, parsed.vars, Int(q_plot), popts);
      std::ofstream out(out_path, std::ios::binary);
      if (!out) throw std::runtime_error("cannot open output file: " + out_path);
      out << svg;
      std::cout << out_path << "\n";
    } else if (*fractal_cmd) {
      if (dimension_mode) {
        FractalDimension dim = dimension(fr_p, fr_d);
        if (as_json)
          std::cout << json{{"count", dim.count.convert_to<long long>()},
                            {"p", dim.p},
                            {"value", dim.value}}
                           .dump()
                    << "\n";
        else
          std::cout << "log_" << dim.p << "(" << dim.count << ") = " << dim.value
                    << "\n";
      }
      if (points_mode || !dimension_mode) {
        auto points = sierpinski_points(SimplexSpec{fr_p, fr_d, static_cast<int>(depth)});
        if (as_json) {
          json j = json::array();
          for (const auto& pt : points) {
            json row = json::array();
            for (const PAdicRational& x : pt) row.push_back(rat_str(x.value()));
            j.push_back(row);
          }
          std::cout << j.dump() << "\n";
        } else {
          for (const auto& pt : points) {
            for (std::size_t i = 0; i < pt.size(); ++i)
              std::cout << (i ? " " : "") << rat_str(pt[i].value());
            std::cout << "\n";
          }
        }
      }
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
