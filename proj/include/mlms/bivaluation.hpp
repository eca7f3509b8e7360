#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mlms/formula.hpp"
#include "mlms/logic.hpp"
#include "mlms/value.hpp"

namespace mlms {

// Clauses v1..v22 of the two-valued semantics, plus `bot`, which pins the
// snapshot of the constant ⊥ to the lattice bottom (ρ(⊥)=0, ρ(¬⊥)=1, ρ(∘⊥)
// equal to the bottom's third coordinate).
enum class ClauseId : std::uint8_t {
  bot = 0,
  v1 = 1, v2, v3, v4, v5, v6, v7, v8, v9, v10, v11,
  v12, v13, v14, v15, v16, v17, v18, v19, v20, v21, v22,
};

std::string to_string(ClauseId c);

// How v14 is read for CLW and CLS.
//   printed:   ρ(¬A) = 1 iff ρ(A) = 1
//   classical: ρ(¬A) = 1 iff ρ(A) = 0
//   classical_or: the classical reading together with v2 for ∨
enum class NegationReading { printed, classical, classical_or };

std::string_view to_string(NegationReading r) noexcept;
std::optional<NegationReading> parse_reading(std::string_view token) noexcept;

// Clauses a bivaluation for `logic` must satisfy (without `bot`, which applies to all).
std::vector<ClauseId> clause_set(LogicId logic, NegationReading reading = NegationReading::printed);

using PartialBivaluation = std::map<Formula, bool>;

struct ClauseViolation {
  ClauseId clause;
  Formula subject;  // the formula the instance is generated from
};

struct ClauseVerdict {
  bool ok = true;
  std::vector<ClauseViolation> violations;
};

std::string describe(const ClauseViolation& v);

/// Checks every instance of the logic's clauses whose formulas all lie in the
/// domain of `rho`. Throws domain_not_closed if some member has a proper
/// subformula outside the domain.
ClauseVerdict check_clauses(LogicId logic, const PartialBivaluation& rho,
                            NegationReading reading = NegationReading::printed);

// (ρ(f), ρ(¬f), ρ(∘f)). Throws illegal_snapshot for (0,0,1) and (1,1,1), and
// unknown_atom if one of the three formulas is outside the domain.
Value snapshot_of(const PartialBivaluation& rho, const Formula& f);

inline constexpr std::size_t kMaxClosure = 512;

struct BivConsequenceResult {
  bool valid = true;
  PartialBivaluation witness;  // set when invalid
};

/// Γ ⊨² A over the subformula closure of Γ ∪ {A} (after desugaring ~, ∇ and →_L).
///
/// The search is a depth-first walk through the closure in size order. Premises
/// are fixed to 1 and the conclusion to 0, and each clause instance is checked
/// as soon as its last formula is assigned, so the result is the same as
/// filtering all 2^|closure| assignments but without visiting them.
/// Throws modal_operator_present, too_many_atoms (more than 8) and
/// closure_too_large (closure above kMaxClosure).
BivConsequenceResult biv_consequence(LogicId logic, const std::vector<Formula>& premises,
                                     const Formula& conclusion,
                                     NegationReading reading = NegationReading::printed);

// Calls `visit` for every clause-satisfying assignment over the closure of
// `fs`, stopping after `limit` assignments. Returns the number visited.
std::size_t enumerate_bivaluations(LogicId logic, const std::vector<Formula>& fs, NegationReading reading,
                                   std::size_t limit,
                                   const std::function<void(const PartialBivaluation&)>& visit);

// Every formula over `atoms` built from ⊥, ¬, ∘, ∧, ∨, → with depth at most `depth`.
std::vector<Formula> formula_corpus(const std::vector<std::string>& atoms, std::size_t depth,
                                    bool with_bottom = true);

struct CorrespondenceIssue {
  std::string kind;  // "clause", "snapshot", "commute"
  std::string detail;
};

struct CorrespondenceReport {
  LogicId logic{};
  NegationReading reading{};
  std::size_t valuations_checked = 0;   // part (a): matrix valuation × formula set
  std::size_t formulas_checked = 0;     // part (b): formulas whose bivaluations were enumerated
  std::size_t bivaluations_checked = 0; // part (b): assignments visited
  std::vector<CorrespondenceIssue> issues;  // first few only
  std::size_t issue_count = 0;

  bool ok() const noexcept { return issue_count == 0; }
};

struct CorrespondenceOptions {
  std::size_t depth = 2;              // exhaustive corpus depth
  std::size_t sampled_depth3 = 300;   // extra random depth-3 formulas for part (a)
  std::size_t enumeration_limit = 4096;
  std::uint64_t seed = 0x4D4C4D53;
};

/// (a) Valuations induced by the matrix, ρ(f) := first coordinate of v(f),
/// satisfy every clause; (b) every clause-satisfying assignment has legal
/// snapshots inside the lattice that commute with the twist operations.
CorrespondenceReport correspondence_check(LogicId logic, NegationReading reading = NegationReading::printed,
                                          const CorrespondenceOptions& options = {});

struct Sequent {
  std::vector<Formula> premises;
  Formula conclusion;
};

std::string to_string(const Sequent& s);

// A deterministic corpus of sequents over {p, q}: a fixed core of familiar
// sequents followed by seeded draws of premises and conclusions of depth ≤ 2.
std::vector<Sequent> sequent_corpus(std::size_t count, std::uint64_t seed = 0x4D4C4D53);

struct CrossOracleReport {
  LogicId logic{};
  NegationReading reading{};
  std::size_t agreements = 0;
  std::vector<std::pair<Sequent, bool>> disagreements;  // with the matrix verdict

  std::size_t total() const noexcept { return agreements + disagreements.size(); }
  double rate() const noexcept { return total() == 0 ? 1.0 : double(agreements) / double(total()); }
};

CrossOracleReport cross_oracle(LogicId logic, const std::vector<Sequent>& corpus,
                               NegationReading reading = NegationReading::printed);

}  // namespace mlms
