// Exhaustive eval-equivalence checks of the normalizer's rewrite table against
// the model-semantics evaluator.
#pragma once

#include <cstdint>

#include "support/oracle.hpp"

namespace tsl::oracle {

struct EquivStats {
  uint64_t models = 0;
  uint64_t mismatches = 0;
};

// not-ordList expansion vs direct evaluation, over all (memory, path) pairs.
EquivStats check_not_ordlist(const Bounds& b);

// One NSL cube (1..6) vs the negation of the corresponding skiplist clause.
EquivStats check_nsl(int which, const Bounds& b);

// The six-cube disjunction vs !skiplist, exhaustively (keep bounds small).
EquivStats check_not_skiplist_joint(const Bounds& b);

// Same, on `samples` random models drawn with the given seed.
EquivStats check_not_skiplist_random(const Bounds& b, int samples, uint64_t seed);

// reach and !reach rewrites over all (memory, a1, a2, l, p).
EquivStats check_reach_rewrites(const Bounds& b);

// memberships, order/level negations, selector rewrites, and disequality
// expansions on Set / Array / Cell / Mem.
EquivStats check_small_rewrites(const Bounds& b);

}  // namespace tsl::oracle
