// Sanitation: every array-update level gets a successor witness l' = l + 1.
#pragma once

#include "core/ast.hpp"

namespace tsl {

// For each literal B = A{l <- a} without a companion l' = l + 1, appends one
// with a fresh level variable. Idempotent; input must be normalized.
Cube sanitize(const Cube& c, FreshSupply& fresh);

bool is_sanitized(const Cube& c);

}  // namespace tsl
