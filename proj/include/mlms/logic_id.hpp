#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace mlms {

enum class LogicId : std::uint8_t { LETK = 0, FDE, LJ4, K3, L3, LP, J3, CLW, CLS };

inline constexpr std::array<LogicId, 9> kAllLogics = {LogicId::LETK, LogicId::FDE, LogicId::LJ4,
                                                      LogicId::K3,   LogicId::L3,  LogicId::LP,
                                                      LogicId::J3,   LogicId::CLW, LogicId::CLS};

std::string_view to_string(LogicId id) noexcept;
std::optional<LogicId> parse_logic(std::string_view token) noexcept;

}  // namespace mlms
