#include "mlms/frame_checker.hpp"

#include <algorithm>
#include <numeric>

#include "mlms/bivaluation.hpp"
#include "mlms/error.hpp"
#include "mlms/model_io.hpp"

namespace mlms {

FrameProperties frame_properties(const Frame& f) {
  const int n = static_cast<int>(f.size());
  FrameProperties p{true, true, true, true, true};
  for (int a = 0; a < n; ++a) {
    if (!f.related(a, a)) p.reflexive = false;
    if (f.successors[static_cast<std::size_t>(a)].empty()) p.serial = false;
    for (int b : f.successors[static_cast<std::size_t>(a)]) {
      if (!f.related(b, a)) p.symmetric = false;
      for (int c : f.successors[static_cast<std::size_t>(b)])
        if (!f.related(a, c)) p.transitive = false;
      for (int c : f.successors[static_cast<std::size_t>(a)])
        if (!f.related(b, c)) p.euclidean = false;
    }
  }
  return p;
}

Frame euclidean_closure(const Frame& frame) {
  Frame f = frame;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t a = 0; a < f.size(); ++a) {
      const auto succ = f.successors[a];
      for (int b : succ)
        for (int c : succ)
          if (!f.related(b, c)) {
            auto& s = f.successors[static_cast<std::size_t>(b)];
            s.insert(std::lower_bound(s.begin(), s.end(), c), c);
            changed = true;
          }
    }
  }
  return f;
}

std::string_view to_string(AxiomSchema s) noexcept {
  switch (s) {
    case AxiomSchema::K: return "K";
    case AxiomSchema::T: return "T";
    case AxiomSchema::FOUR: return "4";
    case AxiomSchema::FIVE: return "5";
    case AxiomSchema::FIVE_C: return "5c";
    case AxiomSchema::B: return "B";
    case AxiomSchema::D: return "D";
  }
  return "?";
}

std::optional<AxiomSchema> parse_axiom(std::string_view token) noexcept {
  for (AxiomSchema s : kAllSchemas)
    if (to_string(s) == token) return s;
  if (token == "FOUR") return AxiomSchema::FOUR;
  if (token == "FIVE") return AxiomSchema::FIVE;
  if (token == "FIVE_C") return AxiomSchema::FIVE_C;
  return std::nullopt;
}

Formula schema_template(AxiomSchema s) {
  using F = Formula;
  const F p = F::atom("p"), q = F::atom("q");
  switch (s) {
    case AxiomSchema::K: return F::imp(F::box(F::imp(p, q)), F::imp(F::box(p), F::box(q)));
    case AxiomSchema::T: return F::imp(F::box(p), p);
    case AxiomSchema::FOUR: return F::imp(F::box(p), F::box(F::box(p)));
    case AxiomSchema::FIVE: return F::imp(F::diamond(p), F::box(F::diamond(p)));
    case AxiomSchema::FIVE_C: return F::imp(F::diamond(F::cneg(p)), F::box(F::diamond(F::cneg(p))));
    case AxiomSchema::B: return F::imp(p, F::box(F::diamond(p)));
    case AxiomSchema::D: return F::imp(F::box(p), F::diamond(p));
  }
  return p;
}

namespace {

Model blank_model(const Frame& frame, std::vector<std::string> atoms, DiamondVariant variant) {
  Model m;
  m.frame = frame;
  m.atoms = std::move(atoms);
  m.diamond = variant;
  for (std::size_t w = 0; w < frame.size(); ++w)
    m.valuation.emplace_back(m.atoms.size(), frame.logic(static_cast<int>(w)).bottom());
  return m;
}

std::vector<std::string> schema_atoms(const Formula& f, std::size_t wanted) {
  const auto own = atoms_of(f);
  std::vector<std::string> atoms(own.begin(), own.end());
  for (std::size_t k = 1; atoms.size() < wanted; ++k) atoms.push_back("x" + std::to_string(k));
  std::sort(atoms.begin(), atoms.end());
  return atoms;
}

// First world where `f` is not designated, if any.
std::optional<Counterexample> refute(const Model& m, const Formula& f) {
  const auto vals = eval_all(m, f);
  for (std::size_t w = 0; w < vals.size(); ++w)
    if (!m.frame.logic(static_cast<int>(w)).is_designated(vals[w]))
      return Counterexample{m, static_cast<int>(w), vals[w], f};
  return std::nullopt;
}

void randomize(Model& m, std::mt19937_64& rng) {
  for (std::size_t w = 0; w < m.frame.size(); ++w) {
    const auto& elems = m.frame.logic(static_cast<int>(w)).lattice->elements();
    std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
    for (auto& v : m.valuation[w]) v = elems[pick(rng)];
  }
}

// Visits every valuation of m's atoms, world-major, values in canonical order.
template <class Visit>
void for_each_valuation(Model& m, Visit&& visit) {
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t w = 0; w < m.frame.size(); ++w)
    for (std::size_t k = 0; k < m.atoms.size(); ++k) cells.emplace_back(w, k);
  std::vector<std::size_t> digit(cells.size(), 0);
  auto elems = [&](std::size_t c) -> const std::vector<Value>& {
    return m.frame.logic(static_cast<int>(cells[c].first)).lattice->elements();
  };
  for (std::size_t c = 0; c < cells.size(); ++c) m.valuation[cells[c].first][cells[c].second] = elems(c)[0];
  while (true) {
    if (!visit()) return;
    std::size_t c = cells.size();
    while (true) {
      if (c == 0) return;
      --c;
      if (++digit[c] < elems(c).size()) {
        m.valuation[cells[c].first][cells[c].second] = elems(c)[digit[c]];
        break;
      }
      digit[c] = 0;
      m.valuation[cells[c].first][cells[c].second] = elems(c)[0];
    }
  }
}

}  // namespace

AxiomVerdict axiom_valid_on_frame(const Frame& frame, AxiomSchema schema, DiamondVariant variant,
                                  const CheckBudget& budget) {
  const Formula f = schema_template(schema);
  Model m = blank_model(frame, schema_atoms(f, budget.atoms), variant);
  AxiomVerdict verdict;
  if (budget.mode == CheckBudget::Mode::exhaustive) {
    if (frame.size() > kMaxExhaustiveWorlds || m.atoms.size() > kMaxExhaustiveAtoms)
      throw Error(ErrorKind::budget_exceeded,
                  "exhaustive checks allow at most " + std::to_string(kMaxExhaustiveWorlds) + " worlds and " +
                      std::to_string(kMaxExhaustiveAtoms) + " atoms; use sampling");
    for_each_valuation(m, [&] {
      ++verdict.valuations_checked;
      if (auto c = refute(m, f)) {
        verdict.valid = false;
        verdict.counterexample = std::move(c);
        return false;
      }
      return true;
    });
    return verdict;
  }
  std::mt19937_64 rng(budget.seed);
  for (std::size_t i = 0; i < budget.sample_count; ++i) {
    randomize(m, rng);
    ++verdict.valuations_checked;
    if (auto c = refute(m, f)) {
      verdict.valid = false;
      verdict.counterexample = std::move(c);
      break;
    }
  }
  return verdict;
}

void for_each_frame(std::size_t worlds, const std::vector<LogicId>& logics,
                    const std::function<void(const Frame&)>& visit) {
  const std::size_t cells = worlds * worlds;
  std::vector<std::uint32_t> masks(std::size_t{1} << cells);
  std::iota(masks.begin(), masks.end(), 0u);
  std::stable_sort(masks.begin(), masks.end(),
                   [](std::uint32_t a, std::uint32_t b) { return __builtin_popcount(a) < __builtin_popcount(b); });
  for (std::uint32_t mask : masks) {
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t c = 0; c < cells; ++c)
      if (mask & (1u << c)) pairs.emplace_back(static_cast<int>(c / worlds), static_cast<int>(c % worlds));
    std::vector<std::size_t> digit(worlds, 0);
    while (true) {
      std::vector<LogicId> interp;
      for (std::size_t d : digit) interp.push_back(logics[d]);
      visit(Frame::from_relation(std::move(interp), pairs));
      std::size_t i = worlds;
      while (i > 0 && ++digit[i - 1] == logics.size()) digit[--i] = 0;
      if (i == 0) break;
    }
  }
}

Frame random_frame(std::size_t worlds, const std::vector<LogicId>& logics, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<std::size_t> pick(0, logics.size() - 1);
  std::vector<LogicId> interp;
  for (std::size_t w = 0; w < worlds; ++w) interp.push_back(logics[pick(rng)]);
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t a = 0; a < worlds; ++a)
    for (std::size_t b = 0; b < worlds; ++b)
      if (coin(rng)) pairs.emplace_back(static_cast<int>(a), static_cast<int>(b));
  return Frame::from_relation(std::move(interp), pairs);
}

namespace {

Frame with_pairs(const Frame& f, bool reflexive, bool transitive) {
  Frame g = f;
  const std::size_t n = g.size();
  auto add = [&](std::size_t a, int b) {
    auto& s = g.successors[a];
    if (!std::binary_search(s.begin(), s.end(), b)) s.insert(std::lower_bound(s.begin(), s.end(), b), b);
  };
  if (reflexive)
    for (std::size_t a = 0; a < n; ++a) add(a, static_cast<int>(a));
  if (transitive) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t a = 0; a < n; ++a)
        for (int b : std::vector<int>(g.successors[a]))
          for (int c : g.successors[static_cast<std::size_t>(b)])
            if (!g.related(static_cast<int>(a), c)) {
              add(a, c);
              changed = true;
            }
    }
  }
  return g;
}

void record(SuiteCheck& check, std::optional<Counterexample> c) {
  if (!c) return;
  ++check.failures;
  if (!check.first) check.first = std::move(c);
}

// Exhaustive over small frames satisfying `keep`, then sampled frames made to satisfy it by `fix`.
SuiteCheck schema_on_class(const SuiteOptions& o, std::string name, AxiomSchema schema,
                           const std::function<bool(const FrameProperties&)>& keep,
                           const std::function<Frame(const Frame&)>& fix) {
  SuiteCheck check;
  check.name = std::move(name);
  for (std::size_t n = 1; n <= o.exhaustive_worlds; ++n)
    for_each_frame(n, o.logics, [&](const Frame& f) {
      if (!keep(frame_properties(f))) return;
      const auto v = axiom_valid_on_frame(f, schema, DiamondVariant::up);
      check.cases += v.valuations_checked;
      record(check, v.counterexample);
    });
  std::mt19937_64 rng(o.seed);
  for (std::size_t i = 0; i < o.samples; ++i) {
    const Frame f = fix(random_frame(o.sampled_worlds, o.logics, rng));
    CheckBudget b;
    b.mode = CheckBudget::Mode::sampled;
    b.sample_count = 1;
    b.seed = rng();
    const auto v = axiom_valid_on_frame(f, schema, DiamondVariant::up, b);
    check.cases += v.valuations_checked;
    record(check, v.counterexample);
  }
  return check;
}

struct EuclidRun {
  SuiteCheck characterization;
  SuiteCheck range;
};

bool classical_range(Value v) { return v == Value::T || v == Value::T0 || v == Value::F0 || v == Value::F; }

EuclidRun run_euclid(const SuiteOptions& o, DiamondVariant variant) {
  EuclidRun run;
  run.characterization.name = "5c valid iff Euclidean (" + std::string(to_string(variant)) + ")";
  run.range.name = "values of <>~p and []<>~p stay in {T,T0,F0,F} (" + std::string(to_string(variant)) + ")";
  const Formula f = schema_template(AxiomSchema::FIVE_C);
  const Formula dia = f.lhs(), boxdia = f.rhs();
  for (std::size_t n = 1; n <= o.euclid_worlds; ++n)
    for_each_frame(n, o.euclid_logics, [&](const Frame& frame) {
      const bool euclidean = frame_properties(frame).euclidean;
      Model m = blank_model(frame, {"p"}, variant);
      std::optional<Counterexample> refutation;
      std::optional<Counterexample> out_of_range;
      for_each_valuation(m, [&] {
        const auto vals = eval_many(m, {f, dia, boxdia});
        ++run.range.cases;
        for (std::size_t w = 0; w < frame.size(); ++w) {
          if (!out_of_range && (!classical_range(vals[1][w]) || !classical_range(vals[2][w])))
            out_of_range = Counterexample{m, static_cast<int>(w), classical_range(vals[1][w]) ? vals[2][w] : vals[1][w],
                                          classical_range(vals[1][w]) ? boxdia : dia};
          if (!refutation && !frame.logic(static_cast<int>(w)).is_designated(vals[0][w]))
            refutation = Counterexample{m, static_cast<int>(w), vals[0][w], f};
        }
        return true;
      });
      ++run.characterization.cases;
      if (out_of_range) record(run.range, out_of_range);
      if (euclidean && refutation) {
        record(run.characterization, refutation);
      } else if (!euclidean && !refutation) {
        ++run.characterization.failures;
        if (!run.characterization.first && run.characterization.note.empty())
          run.characterization.note = "non-Euclidean frame on which 5c is valid: " + to_json(blank_model(frame, {}, variant).to_spec(), -1);
      }
    });
  return run;
}

}  // namespace

SuiteCheck check_k(const SuiteOptions& o) {
  return schema_on_class(o, "K on all frames", AxiomSchema::K, [](const FrameProperties&) { return true; },
                         [](const Frame& f) { return f; });
}

SuiteCheck check_t(const SuiteOptions& o) {
  return schema_on_class(o, "T on reflexive frames", AxiomSchema::T,
                         [](const FrameProperties& p) { return p.reflexive; },
                         [](const Frame& f) { return with_pairs(f, true, false); });
}

SuiteCheck check_four(const SuiteOptions& o) {
  return schema_on_class(o, "4 on transitive frames", AxiomSchema::FOUR,
                         [](const FrameProperties& p) { return p.transitive; },
                         [](const Frame& f) { return with_pairs(f, false, true); });
}

SuiteCheck check_euclidean_characterization(const SuiteOptions& o) {
  return run_euclid(o, DiamondVariant::up).characterization;
}

SuiteCheck observe_cneg_range(const SuiteOptions& o, DiamondVariant variant) { return run_euclid(o, variant).range; }

SuiteCheck check_duality(const SuiteOptions& o, DiamondVariant variant, bool homogeneous_only) {
  SuiteCheck check;
  check.name = std::string("<>A = !([]!A) (") + std::string(to_string(variant)) +
               (homogeneous_only ? ", single-logic frames)" : ")");
  std::vector<Formula> corpus = formula_corpus({"p"}, 2, false);
  const Formula p = Formula::atom("p");
  for (const Formula& m : {Formula::box(p), Formula::diamond(p), Formula::neg(Formula::box(p))}) corpus.push_back(m);
  std::vector<Formula> queries;
  for (const auto& a : corpus) {
    queries.push_back(Formula::diamond(a));
    queries.push_back(Formula::neg(Formula::box(Formula::neg(a))));
  }
  for (std::size_t n = 1; n <= o.exhaustive_worlds; ++n)
    for_each_frame(n, o.logics, [&](const Frame& frame) {
      if (homogeneous_only &&
          std::any_of(frame.logics.begin(), frame.logics.end(), [&](LogicId l) { return l != frame.logics[0]; }))
        return;
      Model m = blank_model(frame, {"p"}, variant);
      for_each_valuation(m, [&] {
        const auto vals = eval_many(m, queries);
        for (std::size_t k = 0; k < corpus.size(); ++k) {
          ++check.cases;
          for (std::size_t w = 0; w < frame.size(); ++w)
            if (vals[2 * k][w] != vals[2 * k + 1][w]) {
              record(check, Counterexample{m, static_cast<int>(w), vals[2 * k][w], queries[2 * k]});
              break;
            }
        }
        return true;
      });
    });
  return check;
}

bool SuiteReport::all_passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const SuiteCheck& c) { return !c.gating || c.passed(); });
}

SuiteReport theorem_suite(const SuiteOptions& o) {
  SuiteReport r;
  r.checks.push_back(check_k(o));
  r.checks.push_back(check_t(o));
  r.checks.push_back(check_four(o));
  EuclidRun e = run_euclid(o, DiamondVariant::up);
  r.checks.push_back(std::move(e.characterization));
  r.checks.push_back(check_duality(o));
  e.range.gating = false;
  e.range.note = "observation only";
  r.checks.push_back(std::move(e.range));
  return r;
}

std::string describe(const Counterexample& c) {
  return to_string(c.formula) + " is " + std::string(to_string(c.value)) + " at " +
         c.model.frame.worlds[static_cast<std::size_t>(c.world)] + " (" +
         std::string(to_string(c.model.frame.logics[static_cast<std::size_t>(c.world)])) + ") in " +
         to_json(c.model.to_spec(), -1);
}

}  // namespace mlms
