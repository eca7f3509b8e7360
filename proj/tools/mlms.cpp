#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "mlms/acceptance.hpp"
#include "mlms/bivaluation.hpp"
#include "mlms/error.hpp"
#include "mlms/frame_checker.hpp"
#include "mlms/model_io.hpp"
#include "mlms/parser.hpp"

#ifndef MLMS_FIXTURE_DIR
#define MLMS_FIXTURE_DIR "fixtures"
#endif

using namespace mlms;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kBadInput = 2;

struct BadInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    const auto e = item.find_last_not_of(" \t");
    out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

// Commas inside parentheses do not separate premises.
std::vector<Formula> parse_premises(const std::string& text) {
  std::vector<Formula> out;
  std::string cur;
  int depth = 0;
  auto flush = [&] {
    if (cur.find_first_not_of(" \t") != std::string::npos) out.push_back(parse(cur));
    cur.clear();
  };
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0)
      flush();
    else
      cur += c;
  }
  flush();
  return out;
}

LogicId need_logic(const std::string& token) {
  auto l = parse_logic_or_lattice(token);
  if (!l) throw BadInput("unknown logic " + token);
  return *l;
}

DiamondVariant need_diamond(const std::string& token) {
  auto d = parse_diamond(token);
  if (!d) throw BadInput("unknown diamond variant " + token + " (expected up, down, negbox or cnegbox)");
  return *d;
}

std::vector<LogicId> need_logics(const std::string& list) {
  std::vector<LogicId> out;
  for (const auto& t : split(list)) out.push_back(need_logic(t));
  if (out.empty()) throw BadInput("empty logic list");
  return out;
}

void print_warnings(const ModelSpec& spec) {
  for (const auto& w : validate(spec).warnings) std::cerr << "warning: " << w << "\n";
}

struct TablesArgs {
  std::string logic;
  std::string conn;
};

int run_tables(const TablesArgs& a) {
  const auto& ml = MatrixLogic::get(need_logic(a.logic));
  std::vector<Connective> conns;
  if (a.conn.empty()) {
    conns = {kAllConnectives.begin(), kAllConnectives.end()};
  } else {
    for (const auto& t : split(a.conn)) {
      auto c = parse_connective(t);
      if (!c) throw BadInput("unknown connective " + t);
      conns.push_back(*c);
    }
  }
  bool first = true;
  for (Connective c : conns) {
    if (!first) std::cout << "\n";
    first = false;
    std::cout << format_table(truth_table(ml, c));
  }
  return kOk;
}

struct EvalArgs {
  std::string model;
  std::string world;
  std::string formula;
  std::string diamond;
};

int run_eval(const EvalArgs& a) {
  const ModelSpec spec = load_model_file(a.model);
  print_warnings(spec);
  Model m = Model::build(spec);
  if (!a.diamond.empty()) m.diamond = need_diamond(a.diamond);
  const Formula f = parse(a.formula);
  const auto values = eval_all(m, f);
  auto line = [&](int w) {
    const Value v = values[static_cast<std::size_t>(w)];
    return std::string(to_string(v)) + (m.frame.logic(w).is_designated(v) ? " DESIGNATED" : " NOT DESIGNATED");
  };
  if (!a.world.empty()) {
    std::cout << line(m.frame.index_of(a.world)) << "\n";
    return kOk;
  }
  for (std::size_t w = 0; w < m.frame.size(); ++w)
    std::cout << m.frame.worlds[w] << " " << line(static_cast<int>(w)) << "\n";
  return kOk;
}

struct ConsequenceArgs {
  std::string logic;
  std::string premises;
  std::string conclusion;
  std::string reading = "printed";
};

int run_consequence(const ConsequenceArgs& a) {
  const auto& ml = MatrixLogic::get(need_logic(a.logic));
  const auto r = matrix_consequence(ml, parse_premises(a.premises), parse(a.conclusion));
  if (r.valid) {
    std::cout << "VALID\n";
    return kOk;
  }
  std::cout << "INVALID " << format_assignment(r.witness) << "\n";
  return kNegative;
}

int run_biv_consequence(const ConsequenceArgs& a) {
  const LogicId logic = need_logic(a.logic);
  auto reading = parse_reading(a.reading);
  if (!reading) throw BadInput("unknown reading " + a.reading + " (expected printed, classical or classical-or)");
  const auto premises = parse_premises(a.premises);
  const Formula conclusion = parse(a.conclusion);
  const auto r = biv_consequence(logic, premises, conclusion, *reading);
  if (r.valid) {
    std::cout << "VALID\n";
    return kOk;
  }
  std::cout << "INVALID";
  std::set<std::string> atoms = atoms_of(premises);
  for (const auto& x : atoms_of(conclusion)) atoms.insert(x);
  for (const auto& name : atoms) {
    const Formula p = Formula::atom(name);
    std::cout << " " << name << "=";
    try {
      std::cout << to_string(snapshot_of(r.witness, p));
    } catch (const Error&) {
      auto it = r.witness.find(p);
      std::cout << (it != r.witness.end() && it->second ? "1" : "0");
    }
  }
  std::cout << "\n";
  for (const auto& [f, bit] : r.witness)
    if (bit) std::cout << "  1: " << to_string(f) << "\n";
  return kNegative;
}

struct CheckFrameArgs {
  std::string file;
  std::string axiom;
  std::string diamond;
  std::string logics;
  std::size_t worlds = 2;
  std::size_t vars = 0;
  bool exhaustive = false;
  std::size_t samples = 0;
  std::uint64_t seed = 0x4D4C4D53;
};

void print_counterexample(const Counterexample& c) {
  std::cout << "COUNTEREXAMPLE at " << c.model.frame.worlds[static_cast<std::size_t>(c.world)] << ": "
            << to_string(c.formula) << " = " << to_string(c.value) << "\n"
            << to_json(c.model.to_spec()) << "\n";
}

int run_check_frame(const CheckFrameArgs& a) {
  auto schema = parse_axiom(a.axiom);
  if (!schema) throw BadInput("unknown axiom " + a.axiom + " (expected K, T, 4, 5, 5c, B or D)");
  if (a.exhaustive && a.samples > 0) throw BadInput("--exhaustive and --samples are exclusive");
  CheckBudget budget;
  budget.atoms = a.vars;
  budget.seed = a.seed;
  if (a.samples > 0) {
    budget.mode = CheckBudget::Mode::sampled;
    budget.sample_count = a.samples;
  }

  if (!a.file.empty()) {
    if (!a.logics.empty()) throw BadInput("--logics applies only when no frame file is given");
    const ModelSpec spec = load_model_file(a.file);
    const Model m = Model::build(spec);
    const DiamondVariant variant = a.diamond.empty() ? m.diamond : need_diamond(a.diamond);
    const auto v = axiom_valid_on_frame(m.frame, *schema, variant, budget);
    if (v.valid) {
      std::cout << "VALID (" << v.valuations_checked << " valuations)\n";
      return kOk;
    }
    print_counterexample(*v.counterexample);
    return kNegative;
  }

  if (a.logics.empty()) throw BadInput("give a frame file or --logics");
  const auto logics = need_logics(a.logics);
  const DiamondVariant variant = a.diamond.empty() ? DiamondVariant::up : need_diamond(a.diamond);
  std::size_t frames = 0;
  std::optional<Counterexample> found;
  for (std::size_t n = 1; n <= a.worlds && !found; ++n)
    for_each_frame(n, logics, [&](const Frame& f) {
      if (found) return;
      ++frames;
      auto v = axiom_valid_on_frame(f, *schema, variant, budget);
      if (!v.valid) found = std::move(v.counterexample);
    });
  if (!found) {
    std::cout << "VALID on " << frames << " frames\n";
    return kOk;
  }
  print_counterexample(*found);
  return kNegative;
}

int run_verify(const std::string& fixtures) {
  acceptance::Options o{fixtures};
  bool all = true;
  acceptance::run_all(o, [&](const acceptance::Result& r) {
    all = all && r.passed;
    std::cout << acceptance::format_line(r) << "\n";
    for (const auto& d : r.details) std::cout << "      " << d << "\n";
    std::cout.flush();
  });
  return all ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Many-logic modal structures: tables, evaluation, consequence and frame checks"};
  app.require_subcommand(1);

  TablesArgs ta;
  auto* tables = app.add_subcommand("tables", "Print truth tables of a logic");
  tables->add_option("logic", ta.logic, "Logic or lattice (LETK, FDE, LJ4, K3, L3, LP, J3, CLW, CLS)")->required();
  tables->add_option("--conn", ta.conn, "Connectives: and, or, imp, impL, neg, circ, nabla, cneg");

  EvalArgs ea;
  auto* ev = app.add_subcommand("eval", "Evaluate a formula in a model");
  ev->add_option("model", ea.model, "Model JSON file")->required();
  ev->add_option("--world", ea.world, "World name; all worlds when omitted");
  ev->add_option("--formula", ea.formula, "Formula")->required();
  ev->add_option("--diamond", ea.diamond, "up, down, negbox or cnegbox");

  ConsequenceArgs ca;
  auto* cons = app.add_subcommand("consequence", "Matrix consequence by enumeration");
  cons->add_option("logic", ca.logic)->required();
  cons->add_option("--premises", ca.premises, "Comma-separated premises");
  cons->add_option("--conclusion", ca.conclusion)->required();

  ConsequenceArgs ba;
  auto* biv = app.add_subcommand("biv-consequence", "Consequence over two-valued bivaluations");
  biv->add_option("logic", ba.logic)->required();
  biv->add_option("--premises", ba.premises, "Comma-separated premises");
  biv->add_option("--conclusion", ba.conclusion)->required();
  biv->add_option("--reading", ba.reading, "printed, classical or classical-or");

  CheckFrameArgs fa;
  auto* cf = app.add_subcommand("check-frame", "Check an axiom schema on a frame, or on every small frame");
  cf->add_option("frame", fa.file, "Model or frame JSON file");
  cf->add_option("--axiom", fa.axiom, "K, T, 4, 5, 5c, B or D")->required();
  cf->add_option("--diamond", fa.diamond, "up, down, negbox or cnegbox");
  cf->add_option("--logics", fa.logics, "Comma-separated logics for frame enumeration");
  cf->add_option("--worlds", fa.worlds, "Largest frame size for enumeration")->check(CLI::Range(1, 3));
  cf->add_option("--vars", fa.vars, "Number of atoms (default: those of the schema)");
  cf->add_flag("--exhaustive", fa.exhaustive, "Visit every valuation (default)");
  cf->add_option("--samples", fa.samples, "Sample this many valuations instead");
  cf->add_option("--seed", fa.seed, "Seed for sampling");

  std::string fixtures = MLMS_FIXTURE_DIR;
  auto* ver = app.add_subcommand("verify", "Run the acceptance checklist");
  ver->add_option("--fixtures", fixtures, "Directory holding the example models");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (*tables) return run_tables(ta);
    if (*ev) return run_eval(ea);
    if (*cons) return run_consequence(ca);
    if (*biv) return run_biv_consequence(ba);
    if (*cf) return run_check_frame(fa);
    if (*ver) return run_verify(fixtures);
  } catch (const BadInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return kBadInput;
}
