#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mlms/formula.hpp"
#include "mlms/lattice.hpp"
#include "mlms/logic_id.hpp"

namespace mlms {

// Which twist clause defines →: the material one, or the Łukasiewicz-style one
// whose third coordinate is ∼z1 ⊔ w3.
enum class ImplicationFamily { material, lukasiewicz };

// Third coordinate produced by ∘: 1 for logics with certified values, 0 otherwise.
enum class CircThird { one, zero };

enum class Connective { conj, disj, imp, impl, neg, circ, nabla, cneg };

inline constexpr std::array<Connective, 8> kAllConnectives = {
    Connective::conj, Connective::disj, Connective::imp,   Connective::impl,
    Connective::neg,  Connective::circ, Connective::nabla, Connective::cneg};

std::string_view to_string(Connective c) noexcept;
std::optional<Connective> parse_connective(std::string_view token) noexcept;
int arity(Connective c) noexcept;

struct MatrixLogic {
  LogicId id;
  const Lattice* lattice;
  ValueSet designated;
  ImplicationFamily implication;
  CircThird circ_third;

  static const MatrixLogic& get(LogicId id);

  bool is_designated(Value v) const noexcept { return contains(designated, v); }
  Value bottom() const noexcept { return lattice->bottom(); }
};

// Each lattice carries exactly one of the nine logics.
LogicId logic_for_lattice(LatticeId id) noexcept;

// Accepts a logic token (LETK, FDE, ...) or a lattice token (L6, L4w, ...).
std::optional<LogicId> parse_logic_or_lattice(std::string_view token) noexcept;

/// Applies a connective through the twist structure of `logic`.
///
/// The primitive connectives are computed coordinatewise on snapshots; ∇, →_L
/// and ~ are computed through their definitions. When a twist triple falls
/// outside a proper sublattice, the element with the same first two
/// coordinates is taken (this happens only in LJ4, for b ∧ n and b ∨ n).
/// Throws value_not_in_logic for arguments outside the logic's lattice, and
/// closure_violation if no such element exists.
Value apply(const MatrixLogic& logic, Connective conn, std::span<const Value> args);
Value apply(const MatrixLogic& logic, Connective conn, Value a);
Value apply(const MatrixLogic& logic, Connective conn, Value a, Value b);

// Raw twist operations on snapshots, shared by all logics.
Snapshot twist_conj(Snapshot z, Snapshot w) noexcept;
Snapshot twist_disj(Snapshot z, Snapshot w) noexcept;
Snapshot twist_neg(Snapshot z) noexcept;
Snapshot twist_imp(ImplicationFamily family, Snapshot z, Snapshot w) noexcept;
Snapshot twist_circ(CircThird third, Snapshot z) noexcept;

struct TruthTable {
  LogicId logic{};
  Connective connective{};
  std::vector<Value> axis;                // elements in canonical order
  std::vector<std::vector<Value>> cells;  // [row][col]; unary tables have one column
};

TruthTable truth_table(const MatrixLogic& logic, Connective conn);

// Aligned text grid with a header row and column of value tokens.
std::string format_table(const TruthTable& table);

using Assignment = std::map<std::string, Value>;

// Value of a modal-free formula. Throws unknown_atom / modal_operator_present.
Value evaluate(const MatrixLogic& logic, const Formula& f, const Assignment& assignment);

struct ConsequenceResult {
  bool valid = true;
  Assignment witness;  // set when invalid
};

inline constexpr std::size_t kMaxConsequenceAtoms = 8;

/// Γ ⊨ A by enumeration of all assignments of lattice elements to the atoms of
/// Γ ∪ {A}. Assignments are visited in lexicographic order (atoms sorted by
/// name, values in canonical order), so the witness is the first counter-
/// assignment in that order.
ConsequenceResult matrix_consequence(const MatrixLogic& logic, const std::vector<Formula>& premises,
                                     const Formula& conclusion);

std::string format_assignment(const Assignment& a);

}  // namespace mlms
