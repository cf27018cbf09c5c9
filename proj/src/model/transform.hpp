// Level-structure transformations on models: gap detection and removal,
// top reduction, and level replication.
#pragma once

#include <map>

#include "core/ast.hpp"
#include "model/model.hpp"

namespace tsl {

// Ascending list of naturals strictly between two level-variable values of the
// cube that no level variable takes.
std::vector<Nat> gaps(const FiniteModel& model, const Cube& cube);

// Removes the gap at n: level values above n drop by one, arrays lose index n.
// Requires n to be a gap of model w.r.t. cube and the cube to be free of level
// constants; throws std::invalid_argument otherwise.
FiniteModel gap_reduce(const FiniteModel& model, const Cube& cube, const Nat& n);

// Nulls every array entry strictly above all level-variable values.
FiniteModel top_reduce(const FiniteModel& model, const Cube& cube);

// Stretches the level structure so each level variable takes its target value;
// missing levels replicate the nearest lower represented level. The target
// must induce the same order arrangement as the model (throws
// std::invalid_argument otherwise); the model must be gap-less.
FiniteModel replicate_levels(const FiniteModel& model, const Cube& cube,
                             const std::map<Var, Nat>& target);

}  // namespace tsl
