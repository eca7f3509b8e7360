#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace mlms {

// The six semantic values of the base lattice, in canonical table order.
enum class Value : std::uint8_t { T = 0, T0, b, n, F0, F };

inline constexpr std::size_t kValueCount = 6;

inline constexpr std::array<Value, kValueCount> kAllValues = {Value::T,  Value::T0, Value::b,
                                                              Value::n,  Value::F0, Value::F};

constexpr std::size_t index_of(Value v) noexcept { return static_cast<std::size_t>(v); }

// A snapshot (z1, z2, z3): the values of A, ¬A and ∘A under a bivaluation.
struct Snapshot {
  bool z1 = false;
  bool z2 = false;
  bool z3 = false;

  friend constexpr bool operator==(const Snapshot&, const Snapshot&) = default;
};

constexpr Snapshot snapshot_of(Value v) noexcept {
  switch (v) {
    case Value::T: return {true, false, true};
    case Value::T0: return {true, false, false};
    case Value::b: return {true, true, false};
    case Value::n: return {false, false, false};
    case Value::F0: return {false, true, false};
    case Value::F: return {false, true, true};
  }
  return {};
}

// (0,0,1) and (1,1,1) name no value.
constexpr std::optional<Value> value_of(Snapshot s) noexcept {
  for (Value v : kAllValues) {
    if (snapshot_of(v) == s) return v;
  }
  return std::nullopt;
}

std::string_view to_string(Value v) noexcept;
std::optional<Value> parse_value(std::string_view token) noexcept;

// Bitmask over the six values; bit i stands for kAllValues[i].
using ValueSet = std::uint8_t;

constexpr ValueSet bit(Value v) noexcept { return static_cast<ValueSet>(1u << index_of(v)); }
constexpr bool contains(ValueSet set, Value v) noexcept { return (set & bit(v)) != 0; }

}  // namespace mlms
