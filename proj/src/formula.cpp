#include "mlms/formula.hpp"

#include <algorithm>
#include <functional>

#include "mlms/error.hpp"

namespace mlms {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) noexcept {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Formula Formula::atom(std::string name) {
  auto node = std::make_shared<Node>();
  node->op = Op::atom;
  node->hash = mix(std::hash<std::string>{}(name), 0x61);
  node->name = std::move(name);
  return Formula(std::move(node));
}

Formula Formula::bottom() {
  static const Formula b = [] {
    auto node = std::make_shared<Node>();
    node->op = Op::bottom;
    node->hash = 0x5f5f;
    return Formula(std::move(node));
  }();
  return b;
}

Formula Formula::unary(Op op, Formula operand) {
  auto node = std::make_shared<Node>();
  node->op = op;
  node->size = operand.size() + 1;
  node->depth = operand.depth() + 1;
  node->modal_depth = operand.modal_depth() + (is_modal(op) ? 1 : 0);
  node->hash = mix(mix(static_cast<std::size_t>(op) * 0x100000001b3ULL, operand.hash()), 1);
  node->kids[0] = std::move(operand.node_);
  return Formula(std::move(node));
}

Formula Formula::binary(Op op, Formula lhs, Formula rhs) {
  auto node = std::make_shared<Node>();
  node->op = op;
  node->size = lhs.size() + rhs.size() + 1;
  node->depth = std::max(lhs.depth(), rhs.depth()) + 1;
  node->modal_depth = std::max(lhs.modal_depth(), rhs.modal_depth());
  node->hash = mix(mix(mix(static_cast<std::size_t>(op) * 0x100000001b3ULL, lhs.hash()), rhs.hash()), 2);
  node->kids[0] = std::move(lhs.node_);
  node->kids[1] = std::move(rhs.node_);
  return Formula(std::move(node));
}

bool Formula::equal(const Node* a, const Node* b) noexcept {
  if (a == b) return true;
  if (a->hash != b->hash || a->op != b->op || a->size != b->size) return false;
  switch (a->op) {
    case Op::atom: return a->name == b->name;
    case Op::bottom: return true;
    default: break;
  }
  if (!equal(a->kids[0].get(), b->kids[0].get())) return false;
  return !is_binary(a->op) || equal(a->kids[1].get(), b->kids[1].get());
}

int Formula::compare(const Node* a, const Node* b) noexcept {
  if (a == b) return 0;
  if (a->size != b->size) return a->size < b->size ? -1 : 1;
  if (a->op != b->op) return a->op < b->op ? -1 : 1;
  if (a->op == Op::atom) return a->name.compare(b->name);
  if (a->op == Op::bottom) return 0;
  if (int c = compare(a->kids[0].get(), b->kids[0].get()); c != 0) return c;
  return is_binary(a->op) ? compare(a->kids[1].get(), b->kids[1].get()) : 0;
}

bool operator==(const Formula& a, const Formula& b) noexcept { return Formula::equal(a.node_.get(), b.node_.get()); }

bool operator<(const Formula& a, const Formula& b) noexcept {
  return Formula::compare(a.node_.get(), b.node_.get()) < 0;
}

namespace {

const char* symbol(Op op) {
  switch (op) {
    case Op::neg: return "!";
    case Op::circ: return "@";
    case Op::cneg: return "~";
    case Op::nabla: return "N";
    case Op::box: return "[]";
    case Op::diamond: return "<>";
    case Op::conj: return " & ";
    case Op::disj: return " | ";
    case Op::imp: return " -> ";
    case Op::impl: return " => ";
    default: return "";
  }
}

void print(const Formula& f, std::string& out, bool top) {
  switch (f.op()) {
    case Op::atom: out += f.name(); return;
    case Op::bottom: out += "#"; return;
    default: break;
  }
  if (is_unary(f.op())) {
    out += symbol(f.op());
    print(f.operand(), out, false);
    return;
  }
  if (!top) out += "(";
  print(f.lhs(), out, false);
  out += symbol(f.op());
  print(f.rhs(), out, false);
  if (!top) out += ")";
}

void collect_atoms(const Formula& f, std::set<std::string>& out) {
  if (f.op() == Op::atom) {
    out.insert(f.name());
    return;
  }
  if (f.op() == Op::bottom) return;
  collect_atoms(f.lhs(), out);
  if (is_binary(f.op())) collect_atoms(f.rhs(), out);
}

void collect_subformulas(const Formula& f, FormulaSet& out) {
  if (!out.insert(f).second) return;
  if (f.op() == Op::atom || f.op() == Op::bottom) return;
  collect_subformulas(f.lhs(), out);
  if (is_binary(f.op())) collect_subformulas(f.rhs(), out);
}

}  // namespace

std::string to_string(const Formula& f) {
  std::string out;
  print(f, out, true);
  return out;
}

std::set<std::string> atoms_of(const Formula& f) {
  std::set<std::string> out;
  collect_atoms(f, out);
  return out;
}

std::set<std::string> atoms_of(const std::vector<Formula>& fs) {
  std::set<std::string> out;
  for (const auto& f : fs) collect_atoms(f, out);
  return out;
}

FormulaSet subformulas(const Formula& f) {
  FormulaSet out;
  collect_subformulas(f, out);
  return out;
}

FormulaSet subformula_closure(const std::vector<Formula>& fs) {
  FormulaSet base;
  for (const auto& f : fs) {
    if (!f.modal_free())
      throw Error(ErrorKind::modal_operator_present, "modal operator in " + to_string(f));
    collect_subformulas(f, base);
  }
  FormulaSet out = base;
  for (const auto& b : base) {
    out.insert(Formula::neg(b));
    out.insert(Formula::circ(b));
    out.insert(Formula::neg(Formula::circ(b)));
    out.insert(Formula::neg(Formula::neg(b)));
  }
  return out;
}

Formula desugar(const Formula& f, LogicId logic) {
  switch (f.op()) {
    case Op::atom:
    case Op::bottom: return f;
    case Op::cneg: return Formula::imp(desugar(f.operand(), logic), Formula::bottom());
    case Op::nabla: {
      Formula a = desugar(f.operand(), logic);
      return Formula::disj(a, Formula::neg(Formula::circ(a)));
    }
    case Op::impl: {
      Formula a = desugar(f.lhs(), logic);
      Formula b = desugar(f.rhs(), logic);
      auto nab = [](const Formula& x) { return Formula::disj(x, Formula::neg(Formula::circ(x))); };
      return Formula::conj(Formula::disj(nab(Formula::neg(a)), b), Formula::disj(nab(b), Formula::neg(a)));
    }
    default: break;
  }
  if (is_unary(f.op())) return Formula::unary(f.op(), desugar(f.operand(), logic));
  return Formula::binary(f.op(), desugar(f.lhs(), logic), desugar(f.rhs(), logic));
}

Formula bottom_sugar(LogicId logic, const Formula& a) {
  switch (logic) {
    case LogicId::LETK:
    case LogicId::LJ4:
    case LogicId::J3: return Formula::conj(Formula::conj(a, Formula::neg(a)), Formula::circ(a));
    case LogicId::FDE:
    case LogicId::LP:
    case LogicId::CLW: return Formula::circ(a);
    case LogicId::K3:
    case LogicId::L3:
    case LogicId::CLS: return Formula::conj(a, Formula::neg(a));
  }
  return Formula::bottom();
}

}  // namespace mlms
