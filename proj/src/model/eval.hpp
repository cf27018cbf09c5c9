// Literal evaluation over explicit finite interpretations.
#pragma once

#include "core/ast.hpp"
#include "model/model.hpp"

namespace tsl {

// Successor of a at level l (null-safe: rd(null) is the error cell, whose
// pointers are all null).
AddrV mem_succ(const MemV& m, AddrV a, const Nat& l);

// The reaching path from a1 to a2 at level l: the empty path when a1 == a2 or
// when a2 cannot be reached, otherwise the unique duplicate-free chain
// [a1 ... a2] following level-l pointers (both endpoints included).
PathV model_getp(const MemV& m, AddrV a1, AddrV a2, const Nat& l);

// Addresses reachable from a by following level-l pointers (including a).
SetV model_addr2set(const MemV& m, AddrV a, const Nat& l);

SetV path2set(const PathV& p);

// reach(m,a1,a2,l,p): p is empty and a1 == a2, or p is a duplicate-free
// level-l chain from a1 to a2 inclusive.
bool model_reach(const MemV& m, AddrV a1, AddrV a2, const Nat& l, const PathV& p);

// No pair a,b in path2set(p) with b the level-0 successor of a and
// key(b) strictly below key(a).
bool model_ord_list(const MemV& m, const PathV& p);

// SL1..SL5 conjunction.
bool model_skiplist(const MemV& m, SetV r, const Nat& l, AddrV a1, AddrV a2);

// Term evaluation. Returns nullopt only for selectors applied to the error
// cell. Throws EvalError for unvalued variables.
std::optional<Value> eval_term(const FiniteModel& model, const TermPtr& t);

// Literal truth value; a literal with an undefined argument is false.
bool eval(const FiniteModel& model, const Literal& l);
bool eval(const FiniteModel& model, const Cube& c);
bool eval_formula(const FiniteModel& model, const Formula& f);

}  // namespace tsl
