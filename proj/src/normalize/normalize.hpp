// Reduction of arbitrary cubes to the flat normalized literal kinds:
// term flattening, substitution of variable equalities, and the rewrite
// table for every surface literal (selectors, reach, memberships, and the
// negations of ordList / skiplist / reach / equality on compound sorts).
#pragma once

#include <map>

#include "core/ast.hpp"

namespace tsl {

struct NormCube {
  Cube cube;
  // variables eliminated by substitution, mapped to their representative
  std::map<Var, Var> subst;
};

// Rewrites the cube into a disjunction of normalized cubes; the disjunction is
// equisatisfiable with the input (fresh variables are existential). An empty
// result means the cube is unsatisfiable on syntactic grounds. Throws
// std::invalid_argument for literal shapes outside the surface language.
std::vector<NormCube> normalize_full(const Cube& c, FreshSupply& fresh);

// normalize_full without the substitution records.
std::vector<Cube> normalize(const Cube& c, FreshSupply& fresh);

// True when every literal is a normalized kind or l1 = l2 + 1.
bool is_normalized(const Cube& c);

}  // namespace tsl
