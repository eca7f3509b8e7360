#pragma once

#include <string>

#include "mlms/model.hpp"

namespace mlms {

// JSON model documents: members worlds, logics, relation, valuation and an
// optional diamond. Unknown members are rejected with invalid_model; frame
// files are the same documents without valuation.
ModelSpec parse_model_json(const std::string& text);
ModelSpec load_model_file(const std::string& path);  // io_error when unreadable

std::string to_json(const ModelSpec& spec, int indent = 2);

}  // namespace mlms
