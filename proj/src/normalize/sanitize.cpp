#include "normalize/sanitize.hpp"

namespace tsl {

namespace {

bool has_succ_of(const Cube& c, const Var& l) {
  for (const Literal& lit : c)
    if (classify(lit) == LitKind::level_succ_eq &&
        lit.args[1]->args[0]->v == l)
      return true;
  return false;
}

}  // namespace

Cube sanitize(const Cube& c, FreshSupply& fresh) {
  Cube out = c;
  for (const Literal& lit : c) {
    if (classify(lit) != LitKind::array_upd) continue;
    Var level = lit.args[1]->args[1]->v;
    if (has_succ_of(out, level)) continue;
    Var lnew = fresh.fresh(Sort::Level, "sanitize");
    out.push_back(mk::level_succ_eq(lnew, level));
  }
  return out;
}

bool is_sanitized(const Cube& c) {
  for (const Literal& lit : c) {
    if (classify(lit) != LitKind::array_upd) continue;
    if (!has_succ_of(c, lit.args[1]->args[1]->v)) return false;
  }
  return true;
}

}  // namespace tsl
