// Canonical text form for terms, literals, cubes and formulas.
#pragma once

#include <string>

#include "core/ast.hpp"

namespace tsl {

std::string print_term(const TermPtr& t);
std::string print_literal(const Literal& l);
// (and ...) for several literals, the bare literal for one, "true" for none.
std::string print_cube_body(const Cube& c);
// Declarations (one per line, in decl order) followed by the formula body.
std::string print_formula(const Formula& f);

}  // namespace tsl
