#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mlms/model.hpp"

namespace mlms {

struct FrameProperties {
  bool reflexive = false;
  bool transitive = false;
  bool euclidean = false;
  bool symmetric = false;
  bool serial = false;
};

FrameProperties frame_properties(const Frame& frame);

// Smallest Euclidean relation containing the frame's relation.
Frame euclidean_closure(const Frame& frame);

enum class AxiomSchema { K, T, FOUR, FIVE, FIVE_C, B, D };

inline constexpr std::array<AxiomSchema, 7> kAllSchemas = {AxiomSchema::K,    AxiomSchema::T,      AxiomSchema::FOUR,
                                                           AxiomSchema::FIVE, AxiomSchema::FIVE_C, AxiomSchema::B,
                                                           AxiomSchema::D};

// CLI tokens: K, T, 4, 5, 5c, B, D. The long names (FOUR, FIVE, FIVE_C) parse too.
std::string_view to_string(AxiomSchema s) noexcept;
std::optional<AxiomSchema> parse_axiom(std::string_view token) noexcept;

//   K: □(p→q)→(□p→□q)   T: □p→p        4: □p→□□p      5: ◇p→□◇p
//   5c: ◇~p→□◇~p        B: p→□◇p       D: □p→◇p
Formula schema_template(AxiomSchema s);

struct CheckBudget {
  enum class Mode { exhaustive, sampled };
  Mode mode = Mode::exhaustive;
  std::size_t sample_count = 1000;
  std::size_t atoms = 0;  // 0: just the schema's own atoms
  std::uint64_t seed = 0x4D4C4D53;
};

inline constexpr std::size_t kMaxExhaustiveWorlds = 3;
inline constexpr std::size_t kMaxExhaustiveAtoms = 2;

struct Counterexample {
  Model model;
  int world = 0;
  Value value{};
  Formula formula;
};

struct AxiomVerdict {
  bool valid = true;
  std::optional<Counterexample> counterexample;
  std::size_t valuations_checked = 0;
};

/// Checks the schema at every world of every valuation of the frame.
///
/// Exhaustive mode visits all ∏_w |L_w|^atoms valuations in a fixed order, so
/// the counterexample is the first one in that order; sampled mode draws
/// `sample_count` valuations from a seeded generator. Throws budget_exceeded
/// for exhaustive runs beyond kMaxExhaustiveWorlds or kMaxExhaustiveAtoms.
AxiomVerdict axiom_valid_on_frame(const Frame& frame, AxiomSchema schema, DiamondVariant variant,
                                  const CheckBudget& budget = {});

// Calls `visit` for every frame with `worlds` worlds whose logics are drawn
// from `logics`, relations ordered by number of pairs and then bit pattern.
void for_each_frame(std::size_t worlds, const std::vector<LogicId>& logics, const std::function<void(const Frame&)>& visit);

// A uniformly random relation and interpretation on `worlds` worlds.
Frame random_frame(std::size_t worlds, const std::vector<LogicId>& logics, std::mt19937_64& rng);

struct SuiteCheck {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::optional<Counterexample> first;  // minimal in enumeration order
  std::string note;
  bool gating = true;  // observations are reported but do not fail a suite

  bool passed() const noexcept { return failures == 0; }
};

struct SuiteOptions {
  std::size_t exhaustive_worlds = 2;      // frames up to this size are enumerated
  std::size_t sampled_worlds = 3;         // sampled frames have this many worlds
  std::size_t samples = 10000;            // sampled (frame, valuation) cases per check
  std::vector<LogicId> logics{kAllLogics.begin(), kAllLogics.end()};
  std::vector<LogicId> euclid_logics = {LogicId::FDE, LogicId::K3, LogicId::LP, LogicId::LJ4, LogicId::CLW};
  std::size_t euclid_worlds = 3;          // exhaustive bound for the Euclidean characterization
  std::uint64_t seed = 0x4D4C4D53;
};

// K on all frames.
SuiteCheck check_k(const SuiteOptions& o);
// T on reflexive frames, 4 on transitive frames.
SuiteCheck check_t(const SuiteOptions& o);
SuiteCheck check_four(const SuiteOptions& o);
// 5c valid exactly on Euclidean frames, under the up variant.
SuiteCheck check_euclidean_characterization(const SuiteOptions& o);
// ◇A = ¬□¬A under the up variant for every formula of depth ≤ 2 over p.
SuiteCheck check_duality(const SuiteOptions& o, DiamondVariant variant = DiamondVariant::up,
                         bool homogeneous_only = false);
// How often ◇~p or □◇~p leaves {T, T0, F0, F} on the Euclidean run; an observation, not a theorem.
SuiteCheck observe_cneg_range(const SuiteOptions& o, DiamondVariant variant = DiamondVariant::up);

struct SuiteReport {
  std::vector<SuiteCheck> checks;
  bool all_passed() const noexcept;
};

SuiteReport theorem_suite(const SuiteOptions& o = {});

std::string describe(const Counterexample& c);

}  // namespace mlms
