#pragma once

#include <string>

#include "cdk/formula.hpp"

namespace cdk {

// Concrete syntax for a formula; parses back to a structurally equal AST.
std::string render_formula(const Formula& f);

}  // namespace cdk
