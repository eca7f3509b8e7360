#pragma once

#include <string_view>

#include "mlms/formula.hpp"

namespace mlms {

// Grammar (lowest to highest precedence):
//   formula := imp
//   imp     := disj (("->" | "=>") imp)?      right-associative
//   disj    := conj ("|" conj)*               left-associative
//   conj    := unary ("&" unary)*             left-associative
//   unary   := ("!" | "@" | "~" | "N" | "[]" | "<>") unary | atom
//   atom    := ident | "#" | "(" formula ")"
//   ident   := [a-z][a-zA-Z0-9_]*
//
// Throws Error(syntax_error) or Error(unknown_token); the message carries the
// 1-based column of the offending character.
Formula parse(std::string_view text);

}  // namespace mlms
