#pragma once

#include <stdexcept>
#include <string>

namespace mlms {

enum class ErrorKind {
  element_not_in_lattice,
  value_not_in_logic,
  closure_violation,
  modal_operator_present,
  too_many_atoms,
  syntax_error,
  unknown_token,
  domain_not_closed,
  closure_too_large,
  illegal_snapshot,
  unknown_world,
  unknown_atom,
  invalid_model,
  budget_exceeded,
  io_error,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace mlms
