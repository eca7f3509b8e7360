#pragma once

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mlms/value.hpp"

namespace mlms {

enum class LatticeId : std::uint8_t { L6 = 0, L4w, L4s, B3w, B3s, N3w, N3s, C2w, C2s };

inline constexpr std::array<LatticeId, 9> kAllLattices = {
    LatticeId::L6,  LatticeId::L4w, LatticeId::L4s, LatticeId::B3w, LatticeId::B3s,
    LatticeId::N3w, LatticeId::N3s, LatticeId::C2w, LatticeId::C2s};

// The eight proper dc-sublattices of L6.
inline constexpr std::array<LatticeId, 8> kSublattices = {
    LatticeId::L4w, LatticeId::L4s, LatticeId::B3w, LatticeId::B3s,
    LatticeId::N3w, LatticeId::N3s, LatticeId::C2w, LatticeId::C2s};

std::string_view to_string(LatticeId id) noexcept;
std::optional<LatticeId> parse_lattice(std::string_view token) noexcept;

// Order of the base lattice L6: F < F0 < {n, b} < T0 < T, with n and b incomparable.
bool l6_leq(Value x, Value y) noexcept;

/// A finite complete lattice carried by a subset of L6.
///
/// The order is the restriction of the L6 order. Binary meets and joins are
/// recomputed inside the element set, so they can differ from the L6 ones
/// (in L4s, b · n is F, whereas it is F0 in L6).
class Lattice {
 public:
  static const Lattice& get(LatticeId id);

  LatticeId id() const noexcept { return id_; }
  ValueSet element_set() const noexcept { return elements_; }
  // Elements in canonical order T, T0, b, n, F0, F.
  const std::vector<Value>& elements() const noexcept { return ordered_; }
  std::size_t size() const noexcept { return ordered_.size(); }
  bool contains(Value v) const noexcept { return mlms::contains(elements_, v); }

  Value top() const noexcept { return top_; }
  Value bottom() const noexcept { return bottom_; }

  // These throw Error(element_not_in_lattice) for foreign arguments.
  bool leq(Value x, Value y) const;
  Value meet(Value x, Value y) const;
  Value join(Value x, Value y) const;
  // Empty meet is top, empty join is bottom.
  Value meet_set(std::span<const Value> xs) const;
  Value join_set(std::span<const Value> xs) const;

  // Unchecked table lookups for inner loops; both arguments must be members.
  Value meet_unchecked(Value x, Value y) const noexcept { return meet_[index_of(x)][index_of(y)]; }
  Value join_unchecked(Value x, Value y) const noexcept { return join_[index_of(x)][index_of(y)]; }

  // ⋁ {y ∈ this : y ≤ x}, or bottom if that set is empty. Total over L6.
  Value down(Value x) const noexcept { return down_[index_of(x)]; }
  // ⋀ {y ∈ this : y ≥ x}, or top if that set is empty. Total over L6.
  Value up(Value x) const noexcept { return up_[index_of(x)]; }

 private:
  Lattice(LatticeId id, ValueSet elements);

  void require(Value v) const;

  LatticeId id_;
  ValueSet elements_;
  std::vector<Value> ordered_;
  Value top_{};
  Value bottom_{};
  std::array<std::array<Value, kValueCount>, kValueCount> meet_{};
  std::array<std::array<Value, kValueCount>, kValueCount> join_{};
  std::array<Value, kValueCount> down_{};
  std::array<Value, kValueCount> up_{};
};

Value meet_set(std::span<const Value> xs, const Lattice& lat);
Value join_set(std::span<const Value> xs, const Lattice& lat);
Value down_interpret(Value x, const Lattice& sub) noexcept;
Value up_interpret(Value x, const Lattice& sub) noexcept;

struct LawResult {
  std::string law;
  bool passed = true;
  std::size_t cases = 0;
  std::string witness;  // first failing instance, empty when passed
};

struct LawReport {
  LatticeId lattice{};
  std::vector<LawResult> laws;

  bool all_passed() const noexcept;
};

// Exhaustively checks the order-theoretic laws relating `sub` to L6: completeness,
// monotonicity of the down-interpretation, agreement of sublattice meets/joins with
// the interpreted L6 ones, the set-level inequalities, the binary meet/join
// comparison, infinite meet-distributivity, and preservation of binary meets.
LawReport verify_lattice_laws(const Lattice& sub);

}  // namespace mlms
