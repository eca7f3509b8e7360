#include "mlms/bivaluation.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <unordered_map>

#include "mlms/error.hpp"

namespace mlms {

std::string to_string(ClauseId c) {
  if (c == ClauseId::bot) return "bot";
  return "v" + std::to_string(static_cast<int>(c));
}

std::string_view to_string(NegationReading r) noexcept {
  switch (r) {
    case NegationReading::printed: return "printed";
    case NegationReading::classical: return "classical";
    case NegationReading::classical_or: return "classical-or";
  }
  return "?";
}

std::optional<NegationReading> parse_reading(std::string_view token) noexcept {
  for (auto r : {NegationReading::printed, NegationReading::classical, NegationReading::classical_or})
    if (to_string(r) == token) return r;
  return std::nullopt;
}

std::vector<ClauseId> clause_set(LogicId logic, NegationReading reading) {
  auto range = [](int lo, int hi) {
    std::vector<ClauseId> out;
    for (int i = lo; i <= hi; ++i) out.push_back(static_cast<ClauseId>(i));
    return out;
  };
  auto plus = [](std::vector<ClauseId> a, std::initializer_list<ClauseId> more) {
    a.insert(a.end(), more.begin(), more.end());
    return a;
  };
  using C = ClauseId;
  switch (logic) {
    case LogicId::LETK: return plus(range(1, 7), {C::v16, C::v17, C::v18, C::v19, C::v20, C::v21});
    case LogicId::FDE: return range(1, 9);
    case LogicId::LJ4: return plus(range(1, 7), {C::v10, C::v11, C::v22});
    case LogicId::LP: return plus(range(1, 9), {C::v12});
    case LogicId::J3: return plus(range(1, 7), {C::v10, C::v11, C::v12, C::v22});
    case LogicId::K3: return plus(range(1, 9), {C::v13});
    case LogicId::L3: return plus(range(1, 7), {C::v10, C::v11, C::v13, C::v22});
    case LogicId::CLW:
      if (reading == NegationReading::classical_or) return {C::v1, C::v2, C::v3, C::v4, C::v8, C::v14};
      return {C::v1, C::v3, C::v4, C::v8, C::v14};
    case LogicId::CLS:
      if (reading == NegationReading::classical_or) return {C::v1, C::v2, C::v3, C::v4, C::v14, C::v15};
      return {C::v1, C::v3, C::v4, C::v14, C::v15};
  }
  return {};
}

namespace {

struct Instance {
  ClauseId clause;
  int subject;
  std::array<int, 7> vars{};
  int arity = 0;
};

// The closure laid out as an indexed variable set, with all clause instances.
class Problem {
 public:
  Problem(LogicId logic, const FormulaSet& domain, NegationReading reading)
      : reading_(reading), bottom_third_(snapshot_of(MatrixLogic::get(logic).bottom()).z3) {
    vars_.assign(domain.begin(), domain.end());
    for (std::size_t i = 0; i < vars_.size(); ++i) index_.emplace(vars_[i], static_cast<int>(i));
    auto clauses = clause_set(logic, reading);
    clauses.insert(clauses.begin(), ClauseId::bot);
    for (std::size_t i = 0; i < vars_.size(); ++i)
      for (ClauseId c : clauses) generate(c, static_cast<int>(i));
  }

  const std::vector<Formula>& vars() const noexcept { return vars_; }
  const std::vector<Instance>& instances() const noexcept { return instances_; }

  int find(const Formula& f) const {
    auto it = index_.find(f);
    return it == index_.end() ? -1 : it->second;
  }

  bool holds(const Instance& in, const std::vector<std::int8_t>& val) const {
    auto b = [&](int k) { return val[in.vars[k]] == 1; };
    switch (in.clause) {
      case ClauseId::bot: {
        // vars: ⊥ or ¬⊥ or ∘⊥, tagged by arity 1 and the subject's operator.
        const Formula& f = vars_[in.subject];
        if (f.op() == Op::bottom) return !b(0);
        if (f.op() == Op::neg) return b(0);
        return b(0) == bottom_third_;
      }
      case ClauseId::v1: return b(0) == (b(1) && b(2));
      case ClauseId::v2: return b(0) == (b(1) || b(2));
      case ClauseId::v3: return b(0) == (!b(1) || b(2));
      case ClauseId::v4: return b(0) == (b(1) || b(2));
      case ClauseId::v5: return b(0) == (b(1) && b(2));
      case ClauseId::v6: return b(0) == (b(1) && b(2));
      case ClauseId::v7: return b(0) == b(1);
      case ClauseId::v8: return !b(0);
      case ClauseId::v9: return b(0);
      case ClauseId::v10: return b(0) == (b(1) == !b(2));
      case ClauseId::v11: return b(0) == !b(1);
      case ClauseId::v12: return b(0) || b(1);
      case ClauseId::v13: return !b(0) || !b(1);
      case ClauseId::v14: return reading_ == NegationReading::printed ? b(0) == b(1) : b(0) != b(1);
      case ClauseId::v15: return b(0);
      case ClauseId::v16: return !b(0) || (b(1) == !b(2));
      case ClauseId::v17: return b(0);
      case ClauseId::v18: return b(0) == b(1);
      // vars for v19..v21: ∘X, ∘A, ∘B, A, B, ¬A, ¬B
      case ClauseId::v19: return b(0) == ((b(1) && b(2) && b(3) && b(4)) || (b(1) && b(5)) || (b(2) && b(6)));
      case ClauseId::v20: return b(0) == ((b(1) && b(2) && b(5) && b(6)) || (b(1) && b(3)) || (b(2) && b(4)));
      case ClauseId::v21: return b(0) == ((b(3) && b(2) && b(6)) || (b(1) && b(5)) || (b(2) && b(4)));
      case ClauseId::v22: return b(0) == (!b(1) || b(2));
    }
    return true;
  }

 private:
  void add(ClauseId c, int subject, std::initializer_list<std::optional<Formula>> fs) {
    Instance in{c, subject, {}, 0};
    for (const auto& f : fs) {
      if (!f) return;
      int k = find(*f);
      if (k < 0) return;
      in.vars[in.arity++] = k;
    }
    instances_.push_back(in);
  }

  void generate(ClauseId c, int i) {
    const Formula& x = vars_[i];
    const Op op = x.op();
    // Pieces of x used by the clause shapes below.
    auto inner = [&](Op want) -> std::optional<Formula> {
      if (op == Op::neg && x.operand().op() == want) return x.operand();
      return std::nullopt;
    };
    auto neg = [](const Formula& f) { return Formula::neg(f); };
    auto circ = [](const Formula& f) { return Formula::circ(f); };
    switch (c) {
      case ClauseId::bot:
        if (op == Op::bottom || (op == Op::neg && x.operand().op() == Op::bottom) ||
            (op == Op::circ && x.operand().op() == Op::bottom))
          add(c, i, {x});
        break;
      case ClauseId::v1:
        if (op == Op::conj) add(c, i, {x, x.lhs(), x.rhs()});
        break;
      case ClauseId::v2:
        if (op == Op::disj) add(c, i, {x, x.lhs(), x.rhs()});
        break;
      case ClauseId::v3:
        if (op == Op::imp) add(c, i, {x, x.lhs(), x.rhs()});
        break;
      case ClauseId::v4:
        if (auto y = inner(Op::conj)) add(c, i, {x, neg(y->lhs()), neg(y->rhs())});
        break;
      case ClauseId::v5:
        if (auto y = inner(Op::disj)) add(c, i, {x, neg(y->lhs()), neg(y->rhs())});
        break;
      case ClauseId::v6:
        if (auto y = inner(Op::imp)) add(c, i, {x, y->lhs(), neg(y->rhs())});
        break;
      case ClauseId::v7:
        if (auto y = inner(Op::neg)) add(c, i, {x, y->operand()});
        break;
      case ClauseId::v8:
      case ClauseId::v15:
        if (op == Op::circ) add(c, i, {x});
        break;
      case ClauseId::v9:
        if (inner(Op::circ)) add(c, i, {x});
        break;
      case ClauseId::v10:
      case ClauseId::v16:
        if (op == Op::circ) add(c, i, {x, x.operand(), neg(x.operand())});
        break;
      case ClauseId::v11:
        if (op == Op::circ) add(c, i, {x, neg(x)});
        break;
      case ClauseId::v12:
      case ClauseId::v13:
      case ClauseId::v14:
        if (op == Op::neg) add(c, i, {x, x.operand()});
        break;
      case ClauseId::v17:
        if (op == Op::circ && x.operand().op() == Op::circ) add(c, i, {x});
        break;
      case ClauseId::v18:
        if (op == Op::circ && x.operand().op() == Op::neg) add(c, i, {x, circ(x.operand().operand())});
        break;
      case ClauseId::v19:
      case ClauseId::v20:
      case ClauseId::v21: {
        const Op want = c == ClauseId::v19 ? Op::conj : c == ClauseId::v20 ? Op::disj : Op::imp;
        if (op == Op::circ && x.operand().op() == want) {
          const Formula a = x.operand().lhs(), b = x.operand().rhs();
          add(c, i, {x, circ(a), circ(b), a, b, neg(a), neg(b)});
        }
        break;
      }
      case ClauseId::v22:
        if (op == Op::circ && x.operand().op() == Op::imp)
          add(c, i, {x, x.operand().lhs(), circ(x.operand().rhs())});
        break;
    }
  }

  NegationReading reading_;
  bool bottom_third_;
  std::vector<Formula> vars_;
  std::unordered_map<Formula, int, FormulaHash> index_;
  std::vector<Instance> instances_;
};

// Depth-first search over assignments to a Problem's variables.
class Search {
 public:
  explicit Search(const Problem& p) : p_(p), val_(p.vars().size(), -1), attached_(p.vars().size()) {
    for (std::size_t k = 0; k < p.instances().size(); ++k) {
      const auto& in = p.instances()[k];
      int last = *std::max_element(in.vars.begin(), in.vars.begin() + in.arity);
      attached_[last].push_back(k);
    }
    choices_.assign(p.vars().size(), 3);  // bit 0: may be 0, bit 1: may be 1
    for (std::size_t i = 0; i < p.vars().size(); ++i)
      if (!constrained(i)) free_.push_back(i);
  }

  void fix(int var, bool value) { choices_[var] &= value ? 2 : 1; }
  // Variables mentioned by no instance are set to 0 without branching unless marked.
  void branch_on(int var) { branch_free_.push_back(var); }

  // Visits satisfying assignments until `visit` returns false or `limit` is reached.
  template <class Visit>
  std::size_t run(std::size_t limit, Visit&& visit) {
    for (int i : free_)
      if (std::find(branch_free_.begin(), branch_free_.end(), i) == branch_free_.end()) choices_[i] &= 1;
    count_ = 0;
    limit_ = limit;
    stop_ = false;
    dfs(0, visit);
    return count_;
  }

  PartialBivaluation current() const {
    PartialBivaluation out;
    for (std::size_t i = 0; i < val_.size(); ++i) out.emplace(p_.vars()[i], val_[i] == 1);
    return out;
  }

 private:
  bool constrained(std::size_t i) const {
    for (const auto& in : p_.instances())
      for (int k = 0; k < in.arity; ++k)
        if (in.vars[k] == static_cast<int>(i)) return true;
    return false;
  }

  template <class Visit>
  void dfs(std::size_t i, Visit& visit) {
    if (stop_) return;
    if (i == val_.size()) {
      ++count_;
      if (!visit(*this) || count_ >= limit_) stop_ = true;
      return;
    }
    for (int v = 0; v <= 1 && !stop_; ++v) {
      if (!(choices_[i] & (1 << v))) continue;
      val_[i] = static_cast<std::int8_t>(v);
      bool ok = true;
      for (std::size_t k : attached_[i])
        if (!p_.holds(p_.instances()[k], val_)) {
          ok = false;
          break;
        }
      if (ok) dfs(i + 1, visit);
    }
    val_[i] = -1;
  }

  const Problem& p_;
  std::vector<std::int8_t> val_;
  std::vector<std::vector<std::size_t>> attached_;
  std::vector<std::uint8_t> choices_;
  std::vector<int> free_;
  std::vector<int> branch_free_;
  std::size_t count_ = 0;
  std::size_t limit_ = 0;
  bool stop_ = false;
};

bool subformula_closed(const PartialBivaluation& rho) {
  for (const auto& [f, _] : rho) {
    if (f.op() == Op::atom || f.op() == Op::bottom) continue;
    if (!rho.count(f.lhs())) return false;
    if (is_binary(f.op()) && !rho.count(f.rhs())) return false;
  }
  return true;
}

std::vector<Formula> desugared(const std::vector<Formula>& fs, LogicId logic) {
  std::vector<Formula> out;
  out.reserve(fs.size());
  for (const auto& f : fs) out.push_back(desugar(f, logic));
  return out;
}

}  // namespace

std::string describe(const ClauseViolation& v) { return to_string(v.clause) + " at " + to_string(v.subject); }

ClauseVerdict check_clauses(LogicId logic, const PartialBivaluation& rho, NegationReading reading) {
  if (!subformula_closed(rho))
    throw Error(ErrorKind::domain_not_closed, "assignment domain is not closed under subformulas");
  FormulaSet domain;
  for (const auto& [f, _] : rho) domain.insert(f);
  Problem p(logic, domain, reading);
  std::vector<std::int8_t> val(p.vars().size());
  for (std::size_t i = 0; i < val.size(); ++i) val[i] = rho.at(p.vars()[i]) ? 1 : 0;
  ClauseVerdict verdict;
  for (const auto& in : p.instances()) {
    if (!p.holds(in, val)) {
      verdict.ok = false;
      verdict.violations.push_back({in.clause, p.vars()[in.subject]});
    }
  }
  return verdict;
}

Value snapshot_of(const PartialBivaluation& rho, const Formula& f) {
  auto get = [&](const Formula& g) {
    auto it = rho.find(g);
    if (it == rho.end()) throw Error(ErrorKind::unknown_atom, to_string(g) + " is not in the assignment");
    return it->second;
  };
  const Snapshot s{get(f), get(Formula::neg(f)), get(Formula::circ(f))};
  auto v = value_of(s);
  if (!v)
    throw Error(ErrorKind::illegal_snapshot, "triple (" + std::to_string(s.z1) + "," + std::to_string(s.z2) +
                                                 "," + std::to_string(s.z3) + ") of " + to_string(f) +
                                                 " is not a legal snapshot");
  return *v;
}

BivConsequenceResult biv_consequence(LogicId logic, const std::vector<Formula>& premises, const Formula& conclusion,
                                     NegationReading reading) {
  std::vector<Formula> all = premises;
  all.push_back(conclusion);
  for (const auto& f : all)
    if (!f.modal_free()) throw Error(ErrorKind::modal_operator_present, "modal operator in " + to_string(f));
  if (atoms_of(all).size() > kMaxConsequenceAtoms)
    throw Error(ErrorKind::too_many_atoms,
                "consequence check supports at most " + std::to_string(kMaxConsequenceAtoms) + " atoms");
  const auto prem = desugared(premises, logic);
  const Formula concl = desugar(conclusion, logic);
  std::vector<Formula> roots = prem;
  roots.push_back(concl);
  const FormulaSet closure = subformula_closure(roots);
  if (closure.size() > kMaxClosure)
    throw Error(ErrorKind::closure_too_large, "closure has " + std::to_string(closure.size()) +
                                                  " formulas, limit is " + std::to_string(kMaxClosure));
  Problem p(logic, closure, reading);
  Search search(p);
  for (const auto& f : prem) search.fix(p.find(f), true);
  search.fix(p.find(concl), false);
  BivConsequenceResult result;
  search.run(1, [&](const Search& s) {
    result.valid = false;
    result.witness = s.current();
    return false;
  });
  return result;
}

std::size_t enumerate_bivaluations(LogicId logic, const std::vector<Formula>& fs, NegationReading reading,
                                   std::size_t limit, const std::function<void(const PartialBivaluation&)>& visit) {
  const FormulaSet closure = subformula_closure(desugared(fs, logic));
  if (closure.size() > kMaxClosure)
    throw Error(ErrorKind::closure_too_large, "closure has " + std::to_string(closure.size()) + " formulas");
  Problem p(logic, closure, reading);
  Search search(p);
  // Snapshot coordinates of subformulas matter even when no clause mentions them.
  for (const auto& f : fs)
    for (const auto& b : subformulas(desugar(f, logic)))
      for (const Formula& g : {b, Formula::neg(b), Formula::circ(b)}) search.branch_on(p.find(g));
  return search.run(limit, [&](const Search& s) {
    visit(s.current());
    return true;
  });
}

std::vector<Formula> formula_corpus(const std::vector<std::string>& atoms, std::size_t depth, bool with_bottom) {
  // levels[d] holds the formulas of depth exactly d.
  std::vector<std::vector<Formula>> levels(1);
  for (const auto& a : atoms) levels[0].push_back(Formula::atom(a));
  if (with_bottom) levels[0].push_back(Formula::bottom());
  std::vector<Formula> upto = levels[0];
  for (std::size_t d = 1; d <= depth; ++d) {
    std::vector<Formula> next;
    for (const auto& a : levels[d - 1]) {
      next.push_back(Formula::neg(a));
      next.push_back(Formula::circ(a));
    }
    for (Op op : {Op::conj, Op::disj, Op::imp}) {
      for (const auto& a : upto)
        for (const auto& b : upto)
          if (a.depth() == d - 1 || b.depth() == d - 1) next.push_back(Formula::binary(op, a, b));
    }
    levels.push_back(next);
    upto.insert(upto.end(), next.begin(), next.end());
  }
  return upto;
}

namespace {

Formula random_formula(std::mt19937_64& rng, std::size_t depth, const std::vector<Formula>& leaves) {
  if (depth == 0) return leaves[std::uniform_int_distribution<std::size_t>(0, leaves.size() - 1)(rng)];
  const int pick = std::uniform_int_distribution<int>(0, 4)(rng);
  // Keep the requested depth on at least one branch.
  auto full = [&] { return random_formula(rng, depth - 1, leaves); };
  auto any = [&] {
    return random_formula(rng, std::uniform_int_distribution<std::size_t>(0, depth - 1)(rng), leaves);
  };
  switch (pick) {
    case 0: return Formula::neg(full());
    case 1: return Formula::circ(full());
    default: {
      const Op op = pick == 2 ? Op::conj : pick == 3 ? Op::disj : Op::imp;
      if (std::uniform_int_distribution<int>(0, 1)(rng)) return Formula::binary(op, full(), any());
      Formula a = any();
      return Formula::binary(op, a, full());
    }
  }
}

struct Issues {
  CorrespondenceReport& report;
  void add(std::string kind, std::string detail) {
    if (report.issues.size() < 20) report.issues.push_back({std::move(kind), std::move(detail)});
    ++report.issue_count;
  }
};

std::string valuation_text(const Assignment& a) { return format_assignment(a); }

}  // namespace

CorrespondenceReport correspondence_check(LogicId logic, NegationReading reading, const CorrespondenceOptions& options) {
  const MatrixLogic& ml = MatrixLogic::get(logic);
  CorrespondenceReport report;
  report.logic = logic;
  report.reading = reading;
  Issues issues{report};
  const std::vector<std::string> atoms = {"p", "q"};

  // Part (a): one closure holding the whole corpus, checked under every valuation.
  std::vector<Formula> corpus = formula_corpus(atoms, options.depth);
  {
    std::vector<Formula> leaves = {Formula::atom("p"), Formula::atom("q"), Formula::bottom()};
    std::mt19937_64 rng(options.seed);
    std::vector<Formula> extended = corpus;
    for (std::size_t k = 0; k < options.sampled_depth3; ++k) extended.push_back(random_formula(rng, 3, leaves));
    const FormulaSet closure = subformula_closure(extended);
    Problem p(logic, closure, reading);
    std::vector<std::int8_t> val(p.vars().size());
    for (Value x : ml.lattice->elements()) {
      for (Value y : ml.lattice->elements()) {
        const Assignment a = {{"p", x}, {"q", y}};
        for (std::size_t i = 0; i < val.size(); ++i) val[i] = snapshot_of(evaluate(ml, p.vars()[i], a)).z1 ? 1 : 0;
        for (const auto& in : p.instances())
          if (!p.holds(in, val))
            issues.add("clause", to_string(in.clause) + " fails at " + to_string(p.vars()[in.subject]) +
                                     " under " + valuation_text(a));
        ++report.valuations_checked;
      }
    }
  }

  // Part (b): every clause-satisfying assignment over each formula's closure.
  for (const auto& f : corpus) {
    const FormulaSet subs = subformulas(f);
    ++report.formulas_checked;
    report.bivaluations_checked +=
        enumerate_bivaluations(logic, {f}, reading, options.enumeration_limit, [&](const PartialBivaluation& rho) {
          std::map<Formula, Value> snap;
          for (const auto& b : subs) {
            try {
              const Value v = snapshot_of(rho, b);
              if (!ml.lattice->contains(v)) {
                issues.add("snapshot", to_string(b) + " has snapshot " + std::string(to_string(v)) + " outside " +
                                           std::string(to_string(ml.lattice->id())));
                return;
              }
              snap.emplace(b, v);
            } catch (const Error& e) {
              issues.add("snapshot", e.what());
              return;
            }
          }
          for (const auto& b : subs) {
            const Value got = snap.at(b);
            std::optional<Value> want;
            switch (b.op()) {
              case Op::bottom: want = ml.bottom(); break;
              case Op::neg: want = apply(ml, Connective::neg, snap.at(b.operand())); break;
              case Op::circ: want = apply(ml, Connective::circ, snap.at(b.operand())); break;
              case Op::conj: want = apply(ml, Connective::conj, snap.at(b.lhs()), snap.at(b.rhs())); break;
              case Op::disj: want = apply(ml, Connective::disj, snap.at(b.lhs()), snap.at(b.rhs())); break;
              case Op::imp: want = apply(ml, Connective::imp, snap.at(b.lhs()), snap.at(b.rhs())); break;
              default: break;
            }
            if (want && *want != got) {
              issues.add("commute", to_string(b) + " has snapshot " + std::string(to_string(got)) +
                                        " but the matrix gives " + std::string(to_string(*want)));
              return;
            }
          }
        });
  }
  return report;
}

std::string to_string(const Sequent& s) {
  std::string out;
  for (std::size_t i = 0; i < s.premises.size(); ++i) {
    if (i) out += ", ";
    out += to_string(s.premises[i]);
  }
  return out + (out.empty() ? "|- " : " |- ") + to_string(s.conclusion);
}

std::vector<Sequent> sequent_corpus(std::size_t count, std::uint64_t seed) {
  const Formula p = Formula::atom("p"), q = Formula::atom("q"), bot = Formula::bottom();
  using F = Formula;
  std::vector<Sequent> out = {
      {{p, F::neg(p)}, q},
      {{}, F::disj(p, F::neg(p))},
      {{F::circ(p), p, F::neg(p)}, q},
      {{p}, p},
      {{p, F::imp(p, q)}, q},
      {{F::conj(p, q)}, p},
      {{p}, F::disj(p, q)},
      {{F::neg(F::neg(p))}, p},
      {{p}, F::neg(F::neg(p))},
      {{F::neg(F::conj(p, q))}, F::disj(F::neg(p), F::neg(q))},
      {{F::neg(F::disj(p, q))}, F::neg(p)},
      {{F::neg(F::imp(p, q))}, F::conj(p, F::neg(q))},
      {{}, F::imp(p, p)},
      {{q}, F::imp(p, q)},
      {{F::circ(p)}, F::disj(p, F::neg(p))},
      {{}, F::neg(F::circ(p))},
      {{}, F::circ(F::circ(p))},
      {{F::circ(p)}, F::circ(F::neg(p))},
      {{bot}, p},
      {{}, F::neg(bot)},
      {{}, F::disj(F::cneg(p), p)},
      {{F::cneg(F::cneg(p))}, p},
      {{p, F::neg(p)}, bot},
      {{}, F::nabla(p)},
      {{F::impl(p, q), p}, q},
  };
  const std::vector<Formula> pool = formula_corpus({"p", "q"}, 2);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> how_many(0, 2);
  while (out.size() < count) {
    std::vector<Formula> prem;
    for (int k = how_many(rng); k > 0; --k) prem.push_back(pool[pick(rng)]);
    out.push_back({std::move(prem), pool[pick(rng)]});
  }
  if (out.size() > count) out.erase(out.begin() + static_cast<std::ptrdiff_t>(count), out.end());
  return out;
}

CrossOracleReport cross_oracle(LogicId logic, const std::vector<Sequent>& corpus, NegationReading reading) {
  const MatrixLogic& ml = MatrixLogic::get(logic);
  CrossOracleReport report;
  report.logic = logic;
  report.reading = reading;
  for (const auto& s : corpus) {
    const bool matrix = matrix_consequence(ml, s.premises, s.conclusion).valid;
    const bool biv = biv_consequence(logic, s.premises, s.conclusion, reading).valid;
    if (matrix == biv)
      ++report.agreements;
    else
      report.disagreements.emplace_back(s, matrix);
  }
  return report;
}

}  // namespace mlms
