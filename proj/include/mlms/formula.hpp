#pragma once

#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "mlms/logic_id.hpp"

namespace mlms {

enum class Op : std::uint8_t {
  atom,
  bottom,
  neg,      // ¬
  circ,     // ∘
  cneg,     // ~ (classical negation, A → ⊥)
  nabla,    // ∇
  box,      // □
  diamond,  // ◇
  conj,     // ∧
  disj,     // ∨
  imp,      // →
  impl,     // →_L
};

constexpr bool is_unary(Op op) noexcept { return op >= Op::neg && op <= Op::diamond; }
constexpr bool is_binary(Op op) noexcept { return op >= Op::conj; }
constexpr bool is_modal(Op op) noexcept { return op == Op::box || op == Op::diamond; }

/// Immutable formula tree with structural equality.
///
/// Nodes are shared, so copying a Formula is cheap. The hash and size are
/// computed once at construction.
class Formula {
 public:
  static Formula atom(std::string name);
  static Formula bottom();
  static Formula unary(Op op, Formula operand);
  static Formula binary(Op op, Formula lhs, Formula rhs);

  static Formula neg(Formula a) { return unary(Op::neg, std::move(a)); }
  static Formula circ(Formula a) { return unary(Op::circ, std::move(a)); }
  static Formula cneg(Formula a) { return unary(Op::cneg, std::move(a)); }
  static Formula nabla(Formula a) { return unary(Op::nabla, std::move(a)); }
  static Formula box(Formula a) { return unary(Op::box, std::move(a)); }
  static Formula diamond(Formula a) { return unary(Op::diamond, std::move(a)); }
  static Formula conj(Formula a, Formula b) { return binary(Op::conj, std::move(a), std::move(b)); }
  static Formula disj(Formula a, Formula b) { return binary(Op::disj, std::move(a), std::move(b)); }
  static Formula imp(Formula a, Formula b) { return binary(Op::imp, std::move(a), std::move(b)); }
  static Formula impl(Formula a, Formula b) { return binary(Op::impl, std::move(a), std::move(b)); }

  Op op() const noexcept { return node_->op; }
  // Atom name; empty for non-atoms.
  const std::string& name() const noexcept { return node_->name; }
  // Operand of a unary node, left operand of a binary node.
  Formula lhs() const { return Formula(node_->kids[0]); }
  Formula rhs() const { return Formula(node_->kids[1]); }
  Formula operand() const { return lhs(); }

  std::size_t hash() const noexcept { return node_->hash; }
  std::size_t size() const noexcept { return node_->size; }
  std::size_t depth() const noexcept { return node_->depth; }
  std::size_t modal_depth() const noexcept { return node_->modal_depth; }
  bool modal_free() const noexcept { return node_->modal_depth == 0; }
  // Identity of the shared node, stable while any copy is alive.
  const void* id() const noexcept { return node_.get(); }

  friend bool operator==(const Formula& a, const Formula& b) noexcept;
  // Total order: by size, then operator, then atom name, then operands.
  friend bool operator<(const Formula& a, const Formula& b) noexcept;

 private:
  struct Node {
    Op op;
    std::string name;
    std::shared_ptr<const Node> kids[2];
    std::size_t hash = 0;
    std::size_t size = 1;
    std::size_t depth = 0;
    std::size_t modal_depth = 0;
  };

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static int compare(const Node* a, const Node* b) noexcept;
  static bool equal(const Node* a, const Node* b) noexcept;

  std::shared_ptr<const Node> node_;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const noexcept { return f.hash(); }
};

using FormulaSet = std::set<Formula>;

// Fully parenthesised except at the top level; parse(to_string(f)) == f.
std::string to_string(const Formula& f);

std::set<std::string> atoms_of(const Formula& f);
std::set<std::string> atoms_of(const std::vector<Formula>& fs);

FormulaSet subformulas(const Formula& f);

/// Subformulas of `fs` together with ¬B, ∘B, ¬∘B and ¬¬B for every subformula B.
///
/// Exactly one such layer is added, so the result has at most five times as
/// many members as there are subformulas. Throws modal_operator_present.
FormulaSet subformula_closure(const std::vector<Formula>& fs);

/// Rewrites ~, ∇ and →_L into {¬, ∘, ∧, ∨, →, ⊥}:
///   ~A      := A → ⊥
///   ∇A      := A ∨ ¬∘A
///   A →_L B := (∇¬A ∨ B) ∧ (∇B ∨ ¬A)
/// ⊥ stays a constant denoting the least element of the logic's lattice, so the
/// rewrite is the same for every logic; the parameter is kept for symmetry with
/// bottom_sugar. Idempotent.
Formula desugar(const Formula& f, LogicId logic);

// The formula each logic uses to define a bottom particle from `a`:
// A∧¬A∧∘A for LETK, LJ4, J3; ∘A for FDE, LP, CLW; A∧¬A for K3, L3, CLS.
Formula bottom_sugar(LogicId logic, const Formula& a);

}  // namespace mlms
