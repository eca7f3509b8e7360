#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mlms/formula.hpp"
#include "mlms/logic.hpp"

namespace mlms {

// How ◇ is evaluated at a world w with successors S:
//   up:      ⋁_{L_w} { up(v(w',A), L_w)   : w' ∈ S }
//   down:    ⋁_{L_w} { down(v(w',A), L_w) : w' ∈ S }
//   negbox:  ¬□¬A
//   cnegbox: ~□~A
enum class DiamondVariant { up, down, negbox, cnegbox };

std::string_view to_string(DiamondVariant d) noexcept;
std::optional<DiamondVariant> parse_diamond(std::string_view token) noexcept;

/// A model as written in a file: everything keyed by world and atom names.
struct ModelSpec {
  std::vector<std::string> worlds;
  std::map<std::string, std::string> logics;  // world -> logic or lattice token
  std::vector<std::pair<std::string, std::string>> relation;
  std::map<std::string, std::map<std::string, std::string>> valuation;  // world -> atom -> value token
  std::optional<DiamondVariant> diamond;
};

struct Validation {
  std::vector<std::string> errors;
  std::vector<std::string> warnings;

  bool ok() const noexcept { return errors.empty(); }
};

// Every violated invariant, each naming the world and atom involved. Atoms that
// have a value somewhere but not at every world produce warnings.
Validation validate(const ModelSpec& spec);

/// Worlds, accessibility and the logic of each world, all indexed by position.
struct Frame {
  std::vector<std::string> worlds;
  std::vector<LogicId> logics;
  std::vector<std::vector<int>> successors;  // sorted, no duplicates

  std::size_t size() const noexcept { return worlds.size(); }
  bool related(int from, int to) const;
  int index_of(const std::string& world) const;  // throws unknown_world
  const MatrixLogic& logic(int w) const { return MatrixLogic::get(logics[static_cast<std::size_t>(w)]); }

  static Frame from_relation(std::vector<LogicId> logics, const std::vector<std::pair<int, int>>& pairs);
};

struct Model {
  Frame frame;
  std::vector<std::string> atoms;              // sorted
  std::vector<std::vector<Value>> valuation;   // [world][atom]
  DiamondVariant diamond = DiamondVariant::up;

  int atom_index(const std::string& atom) const;  // -1 when absent
  Value value(int world, const std::string& atom) const;

  // Throws invalid_model listing every validation error. Missing atoms get the bottom of the world's lattice.
  static Model build(const ModelSpec& spec);
  ModelSpec to_spec() const;
};

// Values of `f` at every world, in world order. Throws unknown_atom for atoms
// without a value anywhere in the model.
std::vector<Value> eval_all(const Model& model, const Formula& f);

// Several formulas at once; shared subformulas are evaluated once.
std::vector<std::vector<Value>> eval_many(const Model& model, const std::vector<Formula>& fs);

Value eval(const Model& model, int world, const Formula& f);
Value eval(const Model& model, const std::string& world, const Formula& f);

bool holds(const Model& model, int world, const Formula& f);
bool holds(const Model& model, const std::string& world, const Formula& f);

}  // namespace mlms
