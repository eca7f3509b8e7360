#include "mlms/error.hpp"

namespace mlms {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::element_not_in_lattice: return "element-not-in-lattice";
    case ErrorKind::value_not_in_logic: return "value-not-in-logic";
    case ErrorKind::closure_violation: return "closure-violation";
    case ErrorKind::modal_operator_present: return "modal-operator-present";
    case ErrorKind::too_many_atoms: return "too-many-atoms";
    case ErrorKind::syntax_error: return "syntax-error";
    case ErrorKind::unknown_token: return "unknown-token";
    case ErrorKind::domain_not_closed: return "domain-not-closed";
    case ErrorKind::closure_too_large: return "closure-too-large";
    case ErrorKind::illegal_snapshot: return "triple-not-a-legal-snapshot";
    case ErrorKind::unknown_world: return "unknown-world";
    case ErrorKind::unknown_atom: return "unknown-atom";
    case ErrorKind::invalid_model: return "invalid-model";
    case ErrorKind::budget_exceeded: return "budget-exceeded";
    case ErrorKind::io_error: return "io-error";
  }
  return "unknown";
}

}  // namespace mlms
