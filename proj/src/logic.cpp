#include "mlms/logic.hpp"

#include <algorithm>
#include <sstream>

#include "mlms/error.hpp"

namespace mlms {

std::string_view to_string(LogicId id) noexcept {
  switch (id) {
    case LogicId::LETK: return "LETK";
    case LogicId::FDE: return "FDE";
    case LogicId::LJ4: return "LJ4";
    case LogicId::K3: return "K3";
    case LogicId::L3: return "L3";
    case LogicId::LP: return "LP";
    case LogicId::J3: return "J3";
    case LogicId::CLW: return "CLW";
    case LogicId::CLS: return "CLS";
  }
  return "?";
}

std::optional<LogicId> parse_logic(std::string_view token) noexcept {
  for (LogicId id : kAllLogics)
    if (to_string(id) == token) return id;
  return std::nullopt;
}

std::string_view to_string(Connective c) noexcept {
  switch (c) {
    case Connective::conj: return "and";
    case Connective::disj: return "or";
    case Connective::imp: return "imp";
    case Connective::impl: return "impL";
    case Connective::neg: return "neg";
    case Connective::circ: return "circ";
    case Connective::nabla: return "nabla";
    case Connective::cneg: return "cneg";
  }
  return "?";
}

std::optional<Connective> parse_connective(std::string_view token) noexcept {
  for (Connective c : kAllConnectives)
    if (to_string(c) == token) return c;
  return std::nullopt;
}

int arity(Connective c) noexcept {
  switch (c) {
    case Connective::conj:
    case Connective::disj:
    case Connective::imp:
    case Connective::impl: return 2;
    default: return 1;
  }
}

namespace {

MatrixLogic make(LogicId id, LatticeId lat, ImplicationFamily imp, CircThird third) {
  const Lattice& l = Lattice::get(lat);
  ValueSet designated = 0;
  for (Value v : l.elements())
    if (snapshot_of(v).z1) designated |= bit(v);
  return MatrixLogic{id, &l, designated, imp, third};
}

}  // namespace

const MatrixLogic& MatrixLogic::get(LogicId id) {
  using IF = ImplicationFamily;
  static const std::array<MatrixLogic, 9> all = {
      make(LogicId::LETK, LatticeId::L6, IF::material, CircThird::one),
      make(LogicId::FDE, LatticeId::L4w, IF::material, CircThird::zero),
      make(LogicId::LJ4, LatticeId::L4s, IF::lukasiewicz, CircThird::one),
      make(LogicId::K3, LatticeId::N3w, IF::material, CircThird::zero),
      make(LogicId::L3, LatticeId::N3s, IF::lukasiewicz, CircThird::one),
      make(LogicId::LP, LatticeId::B3w, IF::material, CircThird::zero),
      make(LogicId::J3, LatticeId::B3s, IF::lukasiewicz, CircThird::one),
      make(LogicId::CLW, LatticeId::C2w, IF::material, CircThird::zero),
      make(LogicId::CLS, LatticeId::C2s, IF::material, CircThird::one),
  };
  return all[static_cast<std::size_t>(id)];
}

LogicId logic_for_lattice(LatticeId id) noexcept {
  for (LogicId l : kAllLogics)
    if (MatrixLogic::get(l).lattice->id() == id) return l;
  return LogicId::LETK;
}

std::optional<LogicId> parse_logic_or_lattice(std::string_view token) noexcept {
  if (auto l = parse_logic(token)) return l;
  if (auto lat = parse_lattice(token)) return logic_for_lattice(*lat);
  return std::nullopt;
}

Snapshot twist_conj(Snapshot z, Snapshot w) noexcept {
  return {z.z1 && w.z1, z.z2 || w.z2, (z.z1 && z.z3 && w.z1 && w.z3) || (z.z2 && z.z3) || (w.z2 && w.z3)};
}

Snapshot twist_disj(Snapshot z, Snapshot w) noexcept {
  return {z.z1 || w.z1, z.z2 && w.z2, (z.z2 && z.z3 && w.z2 && w.z3) || (z.z1 && z.z3) || (w.z1 && w.z3)};
}

Snapshot twist_neg(Snapshot z) noexcept { return {z.z2, z.z1, z.z3}; }

Snapshot twist_imp(ImplicationFamily family, Snapshot z, Snapshot w) noexcept {
  const bool first = !z.z1 || w.z1;
  const bool second = z.z1 && w.z2;
  if (family == ImplicationFamily::lukasiewicz) return {first, second, !z.z1 || w.z3};
  return {first, second, (z.z1 && w.z2 && w.z3) || (z.z2 && z.z3) || (w.z1 && w.z3)};
}

Snapshot twist_circ(CircThird third, Snapshot z) noexcept { return {z.z3, !z.z3, third == CircThird::one}; }

namespace {

Value back(const MatrixLogic& logic, Snapshot s) {
  auto v = value_of(s);
  if (v && logic.lattice->contains(*v)) return *v;
  // Outside L6 the proper sublattices have at most one element per (z1, z2),
  // which then fixes the third coordinate (LJ4 needs this for b ∧ n and b ∨ n).
  if (logic.lattice->id() != LatticeId::L6) {
    for (Value x : logic.lattice->elements()) {
      const Snapshot t = snapshot_of(x);
      if (t.z1 == s.z1 && t.z2 == s.z2) return x;
    }
  }
  std::ostringstream msg;
  msg << "twist result (" << s.z1 << "," << s.z2 << "," << s.z3 << ") outside " << to_string(logic.lattice->id());
  throw Error(ErrorKind::closure_violation, msg.str());
}

void require_member(const MatrixLogic& logic, Value v) {
  if (!logic.lattice->contains(v))
    throw Error(ErrorKind::value_not_in_logic,
                std::string(to_string(v)) + " is not a value of " + std::string(to_string(logic.id)));
}

Value neg(const MatrixLogic& l, Value a) { return back(l, twist_neg(snapshot_of(a))); }
Value circ(const MatrixLogic& l, Value a) { return back(l, twist_circ(l.circ_third, snapshot_of(a))); }
Value conj(const MatrixLogic& l, Value a, Value b) { return back(l, twist_conj(snapshot_of(a), snapshot_of(b))); }
Value disj(const MatrixLogic& l, Value a, Value b) { return back(l, twist_disj(snapshot_of(a), snapshot_of(b))); }
Value imp(const MatrixLogic& l, Value a, Value b) {
  return back(l, twist_imp(l.implication, snapshot_of(a), snapshot_of(b)));
}
Value nabla(const MatrixLogic& l, Value a) { return disj(l, a, neg(l, circ(l, a))); }

}  // namespace

Value apply(const MatrixLogic& logic, Connective conn, std::span<const Value> args) {
  if (args.size() != static_cast<std::size_t>(arity(conn)))
    throw Error(ErrorKind::value_not_in_logic, "wrong number of arguments for " + std::string(to_string(conn)));
  for (Value v : args) require_member(logic, v);
  switch (conn) {
    case Connective::conj: return conj(logic, args[0], args[1]);
    case Connective::disj: return disj(logic, args[0], args[1]);
    case Connective::imp: return imp(logic, args[0], args[1]);
    case Connective::impl: {
      const Value a = args[0], b = args[1];
      return conj(logic, disj(logic, nabla(logic, neg(logic, a)), b), disj(logic, nabla(logic, b), neg(logic, a)));
    }
    case Connective::neg: return neg(logic, args[0]);
    case Connective::circ: return circ(logic, args[0]);
    case Connective::nabla: return nabla(logic, args[0]);
    case Connective::cneg: return imp(logic, args[0], logic.bottom());
  }
  return args[0];
}

Value apply(const MatrixLogic& logic, Connective conn, Value a) {
  const Value args[] = {a};
  return apply(logic, conn, args);
}

Value apply(const MatrixLogic& logic, Connective conn, Value a, Value b) {
  const Value args[] = {a, b};
  return apply(logic, conn, args);
}

TruthTable truth_table(const MatrixLogic& logic, Connective conn) {
  TruthTable t;
  t.logic = logic.id;
  t.connective = conn;
  t.axis = logic.lattice->elements();
  for (Value x : t.axis) {
    std::vector<Value> row;
    if (arity(conn) == 1) {
      row.push_back(apply(logic, conn, x));
    } else {
      for (Value y : t.axis) row.push_back(apply(logic, conn, x, y));
    }
    t.cells.push_back(std::move(row));
  }
  return t;
}

std::string format_table(const TruthTable& table) {
  const std::string head(to_string(table.connective));
  const std::size_t first = std::max<std::size_t>(head.size(), 2);
  auto pad = [](std::string s, std::size_t w) {
    s.resize(std::max(w, s.size()), ' ');
    return s;
  };
  std::ostringstream out;
  const bool unary = arity(table.connective) == 1;
  std::string header = pad(head, first) + " |";
  if (!unary)
    for (Value v : table.axis) header += " " + pad(std::string(to_string(v)), 2);
  while (!header.empty() && header.back() == ' ') header.pop_back();
  out << header << "\n";
  const std::size_t cols = unary ? 1 : table.axis.size();
  out << std::string(first + 1, '-') << "+" << std::string(3 * cols, '-') << "\n";
  for (std::size_t r = 0; r < table.axis.size(); ++r) {
    std::string line = pad(std::string(to_string(table.axis[r])), first) + " |";
    for (Value v : table.cells[r]) line += " " + pad(std::string(to_string(v)), 2);
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << "\n";
  }
  return out.str();
}

Value evaluate(const MatrixLogic& logic, const Formula& f, const Assignment& assignment) {
  switch (f.op()) {
    case Op::atom: {
      auto it = assignment.find(f.name());
      if (it == assignment.end()) throw Error(ErrorKind::unknown_atom, "no value for atom " + f.name());
      require_member(logic, it->second);
      return it->second;
    }
    case Op::bottom: return logic.bottom();
    case Op::box:
    case Op::diamond:
      throw Error(ErrorKind::modal_operator_present, "modal operator in " + to_string(f));
    case Op::neg: return apply(logic, Connective::neg, evaluate(logic, f.operand(), assignment));
    case Op::circ: return apply(logic, Connective::circ, evaluate(logic, f.operand(), assignment));
    case Op::cneg: return apply(logic, Connective::cneg, evaluate(logic, f.operand(), assignment));
    case Op::nabla: return apply(logic, Connective::nabla, evaluate(logic, f.operand(), assignment));
    case Op::conj:
    case Op::disj:
    case Op::imp:
    case Op::impl: {
      const Value a = evaluate(logic, f.lhs(), assignment);
      const Value b = evaluate(logic, f.rhs(), assignment);
      const Connective c = f.op() == Op::conj   ? Connective::conj
                           : f.op() == Op::disj ? Connective::disj
                           : f.op() == Op::imp  ? Connective::imp
                                                : Connective::impl;
      return apply(logic, c, a, b);
    }
  }
  return logic.bottom();
}

ConsequenceResult matrix_consequence(const MatrixLogic& logic, const std::vector<Formula>& premises,
                                     const Formula& conclusion) {
  std::vector<Formula> all = premises;
  all.push_back(conclusion);
  for (const auto& f : all)
    if (!f.modal_free()) throw Error(ErrorKind::modal_operator_present, "modal operator in " + to_string(f));
  const auto atom_set = atoms_of(all);
  if (atom_set.size() > kMaxConsequenceAtoms)
    throw Error(ErrorKind::too_many_atoms, "consequence check supports at most " +
                                               std::to_string(kMaxConsequenceAtoms) + " atoms");
  const std::vector<std::string> atoms(atom_set.begin(), atom_set.end());
  const auto& values = logic.lattice->elements();

  std::vector<std::size_t> digits(atoms.size(), 0);
  Assignment a;
  while (true) {
    for (std::size_t i = 0; i < atoms.size(); ++i) a[atoms[i]] = values[digits[i]];
    bool premises_hold = std::all_of(premises.begin(), premises.end(),
                                     [&](const Formula& p) { return logic.is_designated(evaluate(logic, p, a)); });
    if (premises_hold && !logic.is_designated(evaluate(logic, conclusion, a))) return {false, a};
    // Odometer with the first atom as the most significant digit.
    std::size_t i = atoms.size();
    while (i > 0) {
      --i;
      if (++digits[i] < values.size()) break;
      digits[i] = 0;
      if (i == 0) return {true, {}};
    }
    if (atoms.empty()) return {true, {}};
  }
}

std::string format_assignment(const Assignment& a) {
  std::string out;
  for (const auto& [atom, v] : a) {
    if (!out.empty()) out += " ";
    out += atom + "=" + std::string(to_string(v));
  }
  return out;
}

}  // namespace mlms
