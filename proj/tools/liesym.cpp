// liesym: Lie symmetry analysis of polynomial ODE systems.
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "liesym/errors.hpp"
#include "liesym/liealg.hpp"
#include "liesym/parse.hpp"
#include "liesym/report.hpp"

namespace {

using namespace liesym;

enum Exit { kOk = 0, kInputError = 2, kHypothesis = 3, kLimit = 4 };

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<Rat> parse_rat_list(const std::string& text) {
  std::vector<Rat> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.find('.') != std::string::npos) throw InputError("'" + item + "' is not an exact rational");
    try {
      out.push_back(parse_rat(item));
    } catch (const std::invalid_argument&) {
      throw InputError("'" + item + "' is not a rational number");
    }
  }
  if (out.empty()) throw InputError("empty list");
  return out;
}

void write_json(const std::string& path, const std::string& body) {
  if (path == "-") {
    std::cout << body;
    return;
  }
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << body;
}

VectorField single_field(const std::string& path) {
  auto fields = parse_fields(read_file(path));
  if (fields.size() != 1) throw InputError(path + " should define exactly one field");
  return fields.front().field;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lie symmetry analysis of polynomial ODE systems"};
  app.require_subcommand(1);

  std::string file, json_path;
  std::vector<std::string> sets;
  std::string weights;
  long max_degree = 0;
  bool semi = false;
  double tol = kDefaultTol;
  long k_cap = 50;
  auto* analyze = app.add_subcommand("analyze", "weights, balances, resonance bound, symmetry scan, algebra");
  analyze->add_option("file", file, "system definition")->required();
  analyze->add_option("--set", sets, "bind a parameter, name=p/q (repeatable)");
  analyze->add_option("--weights", weights, "weight exponents g1,g2,... as rationals");
  auto* max_opt = analyze->add_option("--max-degree", max_degree, "highest symmetry degree to scan");
  analyze->add_flag("--semi", semi, "treat the system as semi-quasihomogeneous and analyze its truncation");
  analyze->add_option("--json", json_path, "write the JSON report to PATH ('-' for stdout)");
  analyze->add_option("--tol", tol, "numeric tolerance")->check(CLI::PositiveNumber);
  analyze->add_option("--k-cap", k_cap, "per-coordinate cap for resonance enumeration")->check(CLI::PositiveNumber);

  std::string fx, fy;
  auto* bracket = app.add_subcommand("bracket", "Lie bracket of two fields");
  bracket->add_option("x", fx, "file with the first field")->required();
  bracket->add_option("y", fy, "file with the second field")->required();

  std::string table_file, table_json_path;
  auto* table = app.add_subcommand("table", "commutator table and derived series");
  table->add_option("file", table_file, "file with several fields")->required();
  table->add_option("--json", table_json_path, "write JSON to PATH ('-' for stdout)");

  std::string lambdas, res_json;
  long l = 1, order = 0;
  auto* res = app.add_subcommand("resonance", "solve the resonance condition for given exponents");
  res->add_option("--lambdas", lambdas, "exponents lambda_1,...,lambda_n (lambda_1 = -1)")->required()
      ->allow_extra_args(false);
  res->add_option("--l", l, "ramification degree")->check(CLI::PositiveNumber);
  res->add_option("--k-cap", k_cap, "per-coordinate cap")->check(CLI::PositiveNumber);
  res->add_option("--equilibrium", order, "equilibrium resonances of this order instead")->check(CLI::PositiveNumber);
  res->add_option("--json", res_json, "write JSON to PATH ('-' for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*analyze) {
      AnalyzeConfig cfg;
      cfg.text = read_file(file);
      for (const auto& s : sets) {
        try {
          cfg.overrides.insert(parse_override(s));
        } catch (const std::invalid_argument& e) {
          throw InputError(std::string("--set ") + s + ": " + e.what());
        }
      }
      if (!weights.empty()) cfg.weights = parse_rat_list(weights);
      if (*max_opt) cfg.max_degree = max_degree;
      cfg.tol = tol;
      cfg.k_cap = k_cap;
      AnalysisReport r = semi ? run_semi(cfg) : run_analyze(cfg);
      if (json_path != "-") std::cout << report_text(r);
      if (!json_path.empty()) write_json(json_path, report_json(r));
    } else if (*bracket) {
      VectorField x = single_field(fx), y = single_field(fy);
      std::cout << format_field(lie_bracket(x, y));
    } else if (*table) {
      auto fields = parse_fields(read_file(table_file));
      std::vector<VectorField> basis;
      std::vector<std::string> names;
      for (auto& f : fields) {
        names.push_back(f.name);
        basis.push_back(f.field);
      }
      BracketTable t = structure_constants(basis);
      if (table_json_path != "-") std::cout << table_text(t, names);
      if (!table_json_path.empty()) write_json(table_json_path, table_json(t, names));
    } else if (*res) {
      ResonanceQuery q;
      for (auto& v : parse_rat_list(lambdas)) q.lambdas.emplace_back(v);
      q.l = l;
      q.k_cap = k_cap;
      ResonanceReport r;
      if (order > 0) {
        q.mode = ResonanceMode::Equilibrium;
        q.order = order;
        r = equilibrium_resonances(q.lambdas, order, k_cap);
      } else {
        r = theorem_resonances(q);
      }
      if (res_json != "-") std::cout << resonance_text(q, r);
      if (!res_json.empty()) write_json(res_json, resonance_json(q, r));
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kInputError;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const LimitError& e) {
    std::cerr << "limit: " << e.what() << "\n";
    return kLimit;
  } catch (const HypothesisError& e) {
    std::cerr << "hypothesis: " << e.what() << "\n";
    return kHypothesis;
  } catch (const DimensionError& e) {
    std::cerr << "hypothesis: " << e.what() << "\n";
    return kHypothesis;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return kOk;
}
