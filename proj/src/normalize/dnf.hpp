// Disjunctive normal form conversion.
#pragma once

#include "core/ast.hpp"
#include "core/parser.hpp"

namespace tsl {

// Distributes conjunctions over disjunctions. The result's cubes preserve the
// literal order of the input (left-to-right).
std::vector<Cube> to_dnf(const FTree& t);

// Identity on formulas that are already cube lists.
Formula to_dnf(const Formula& f);

}  // namespace tsl
