#include "normalize/normalize.hpp"

#include <algorithm>
#include <functional>

#include "core/printer.hpp"

namespace tsl {

namespace {

TermPtr tv(const Var& v) { return Term::mk_var(v); }

// ---- term flattening -------------------------------------------------------

struct Flattener {
  FreshSupply& fresh;
  std::vector<Literal> defs;

  Var flatten(const TermPtr& t) {
    if (t->is_var()) return t->v;
    if (t->is_const()) {
      Var l = fresh.fresh(Sort::Level, "normalize");
      defs.push_back(mk::level_const_eq(l, t->num));
      return l;
    }
    std::vector<Var> args;
    for (const auto& a : t->args) args.push_back(flatten(a));
    switch (t->fn) {
      case Fn::rd: {
        Var c = fresh.fresh(Sort::Cell, "normalize");
        defs.push_back(mk::cell_rd(c, args[0], args[1]));
        return c;
      }
      case Fn::upd: {
        Var m = fresh.fresh(Sort::Mem, "normalize");
        defs.push_back(mk::mem_upd(m, args[0], args[1], args[2]));
        return m;
      }
      case Fn::mkcell: {
        Var c = fresh.fresh(Sort::Cell, "normalize");
        defs.push_back(mk::cell_mkcell(c, args[0], args[1], args[2], args[3]));
        return c;
      }
      case Fn::arr_rd: {
        Var a = fresh.fresh(Sort::Addr, "normalize");
        defs.push_back(mk::array_rd(a, args[0], args[1]));
        return a;
      }
      case Fn::arr_upd: {
        Var b = fresh.fresh(Sort::Array, "normalize");
        defs.push_back(mk::array_upd(b, args[0], args[1], args[2]));
        return b;
      }
      case Fn::getp: {
        Var p = fresh.fresh(Sort::Path, "normalize");
        defs.push_back(mk::getp(p, args[0], args[1], args[2], args[3]));
        return p;
      }
      case Fn::addr2set: {
        Var s = fresh.fresh(Sort::Set, "normalize");
        defs.push_back(mk::addr2set(s, args[0], args[1], args[2]));
        return s;
      }
      case Fn::path2set: {
        Var s = fresh.fresh(Sort::Set, "normalize");
        defs.push_back(mk::path2set(s, args[0]));
        return s;
      }
      case Fn::rev: {
        Var p = fresh.fresh(Sort::Path, "normalize");
        defs.push_back(mk::path_rev(p, args[0]));
        return p;
      }
      case Fn::single_path: {
        Var p = fresh.fresh(Sort::Path, "normalize");
        defs.push_back(mk::path_singleton(p, args[0]));
        return p;
      }
      case Fn::set_union: {
        Var s = fresh.fresh(Sort::Set, "normalize");
        defs.push_back(mk::set_union(s, args[0], args[1]));
        return s;
      }
      case Fn::set_diff: {
        Var s = fresh.fresh(Sort::Set, "normalize");
        defs.push_back(mk::set_diff(s, args[0], args[1]));
        return s;
      }
      case Fn::singleton: {
        Var s = fresh.fresh(Sort::Set, "normalize");
        defs.push_back(mk::set_singleton(s, args[0]));
        return s;
      }
      case Fn::sel_data: {
        Var e = fresh.fresh(Sort::Elem, "normalize");
        defs.push_back(Literal{Pred::eq, true, {tv(e), Term::mk_app(Fn::sel_data, {tv(args[0])})}});
        return e;
      }
      case Fn::sel_key: {
        Var k = fresh.fresh(Sort::Ord, "normalize");
        defs.push_back(Literal{Pred::eq, true, {tv(k), Term::mk_app(Fn::sel_key, {tv(args[0])})}});
        return k;
      }
      case Fn::sel_arr: {
        Var a = fresh.fresh(Sort::Array, "normalize");
        defs.push_back(Literal{Pred::eq, true, {tv(a), Term::mk_app(Fn::sel_arr, {tv(args[0])})}});
        return a;
      }
      case Fn::sel_max: {
        Var l = fresh.fresh(Sort::Level, "normalize");
        defs.push_back(Literal{Pred::eq, true, {tv(l), Term::mk_app(Fn::sel_max, {tv(args[0])})}});
        return l;
      }
      case Fn::level_succ: {
        Var l = fresh.fresh(Sort::Level, "normalize");
        defs.push_back(mk::level_succ_eq(l, args[0]));
        return l;
      }
    }
    throw std::logic_error("flatten: unhandled function");
  }
};

// Flattens one literal into an equivalent list of flat literals (defining
// literals first). May signal a trivially false literal via `ok = false`
// (constant mismatch) or produce nothing (trivially true).
struct FlatResult {
  bool ok = true;
  std::vector<Literal> lits;
};

FlatResult flatten_literal(const Literal& l, FreshSupply& fresh) {
  FlatResult out;
  Flattener fl{fresh, {}};

  auto finish = [&](Literal lit) {
    out.lits = std::move(fl.defs);
    out.lits.push_back(std::move(lit));
  };

  if (l.pred == Pred::eq && l.positive) {
    TermPtr lhs = l.args[0], rhs = l.args[1];
    if (lhs->is_const() && rhs->is_const()) {
      if (lhs->num != rhs->num) out.ok = false;
      return out;  // trivially true or false
    }
    if ((lhs->is_app() || lhs->is_const()) && rhs->is_var()) std::swap(lhs, rhs);
    if (lhs->is_var()) {
      if (rhs->is_var() || rhs->is_const()) {
        finish(Literal{Pred::eq, true, {lhs, rhs}});
        return out;
      }
      // var = f(args): flatten the arguments only
      std::vector<TermPtr> fargs;
      for (const auto& a : rhs->args) fargs.push_back(tv(fl.flatten(a)));
      finish(Literal{Pred::eq, true, {lhs, Term::mk_app(rhs->fn, fargs)}});
      return out;
    }
    // app = app: flatten both sides to variables and equate
    Var x = fl.flatten(lhs);
    Var y = fl.flatten(rhs);
    finish(mk::var_eq(x, y));
    return out;
  }

  // all other predicates (and disequalities): flatten arguments to variables
  std::vector<TermPtr> fargs;
  for (const auto& a : l.args) fargs.push_back(tv(fl.flatten(a)));
  if (l.pred == Pred::neq && !l.positive) {
    finish(Literal{Pred::eq, true, std::move(fargs)});
  } else if (l.pred == Pred::eq && !l.positive) {
    finish(Literal{Pred::neq, true, std::move(fargs)});
  } else {
    finish(Literal{l.pred, l.positive, std::move(fargs)});
  }
  return out;
}

// ---- substitution ----------------------------------------------------------

struct UnionFind {
  std::map<Var, Var> parent;

  Var find(const Var& v) {
    auto it = parent.find(v);
    if (it == parent.end()) return v;
    Var r = find(it->second);
    parent[v] = r;
    return r;
  }

  // Representative preference: builtin constants, then user variables, then
  // fresh; ties by name.
  static int rank(const Var& v) {
    if (is_builtin_const_name(v.name)) return 0;
    return v.is_fresh() ? 2 : 1;
  }

  // Returns false on a contradiction (two distinct builtin constants merged).
  bool merge(const Var& a, const Var& b) {
    Var ra = find(a), rb = find(b);
    if (ra == rb) return true;
    if (rank(ra) == 0 && rank(rb) == 0) return false;
    Var rep = ra, other = rb;
    if (rank(rb) < rank(ra) || (rank(rb) == rank(ra) && rb.name < ra.name)) {
      rep = rb;
      other = ra;
    }
    parent[other] = rep;
    return true;
  }
};

TermPtr subst_term(const TermPtr& t, UnionFind& uf) {
  switch (t->kind) {
    case Term::Kind::var: {
      Var r = uf.find(t->v);
      return r == t->v ? t : tv(r);
    }
    case Term::Kind::level_const:
      return t;
    case Term::Kind::app: {
      std::vector<TermPtr> args;
      for (const auto& a : t->args) args.push_back(subst_term(a, uf));
      return Term::mk_app(t->fn, std::move(args));
    }
  }
  return t;
}

// Applies variable-equality substitution to the cube. Returns false when the
// cube became contradictory on syntactic grounds.
bool substitution_pass(Cube& cube, std::map<Var, Var>& subst) {
  UnionFind uf;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Literal& l : cube) {
      if (classify(l) != LitKind::var_eq) continue;
      Var a = l.args[0]->v, b = l.args[1]->v;
      if (uf.find(a) == uf.find(b)) continue;
      if (!uf.merge(a, b)) return false;
      changed = true;
    }
  }
  Cube out;
  for (const Literal& l : cube) {
    LitKind k = classify(l);
    if (k == LitKind::var_eq) continue;  // consumed by the substitution
    Literal s = l;
    for (auto& t : s.args) t = subst_term(t, uf);
    // drop literals that became trivially true; fail on trivially false
    LitKind sk = classify(s);
    if ((sk == LitKind::elem_neq || sk == LitKind::addr_neq ||
         sk == LitKind::level_neq || sk == LitKind::ord_neq ||
         sk == LitKind::path_neq || sk == LitKind::var_neq) &&
        s.args[0]->v == s.args[1]->v)
      return false;
    if (sk == LitKind::var_eq && s.args[0]->v == s.args[1]->v) continue;
    if (sk == LitKind::ord_leq && s.args[0]->v == s.args[1]->v) continue;
    if ((sk == LitKind::level_less || sk == LitKind::not_ord_leq) &&
        s.args[0]->v == s.args[1]->v)
      return false;
    out.push_back(std::move(s));
  }
  cube = std::move(out);
  for (const auto& [v, p] : uf.parent) subst[v] = uf.find(v);
  return true;
}

// ---- surface rewrites ------------------------------------------------------

// Replacement of one literal by a disjunction of literal lists.
using Alternatives = std::vector<std::vector<Literal>>;

Alternatives rewrite_surface(const Literal& l, LitKind k, FreshSupply& fr) {
  auto v = [&](size_t i) { return l.args[i]->v; };
  switch (k) {
    case LitKind::sel_data: {
      // e = c.data  ->  c = mkcell(e, k, A, l)
      Var c = l.args[1]->args[0]->v;
      Var kk = fr.fresh(Sort::Ord, "normalize");
      Var A = fr.fresh(Sort::Array, "normalize");
      Var lv = fr.fresh(Sort::Level, "normalize");
      return {{mk::cell_mkcell(c, v(0), kk, A, lv)}};
    }
    case LitKind::sel_key: {
      Var c = l.args[1]->args[0]->v;
      Var e = fr.fresh(Sort::Elem, "normalize");
      Var A = fr.fresh(Sort::Array, "normalize");
      Var lv = fr.fresh(Sort::Level, "normalize");
      return {{mk::cell_mkcell(c, e, v(0), A, lv)}};
    }
    case LitKind::sel_arr: {
      Var c = l.args[1]->args[0]->v;
      Var e = fr.fresh(Sort::Elem, "normalize");
      Var kk = fr.fresh(Sort::Ord, "normalize");
      Var lv = fr.fresh(Sort::Level, "normalize");
      return {{mk::cell_mkcell(c, e, kk, v(0), lv)}};
    }
    case LitKind::sel_max: {
      Var c = l.args[1]->args[0]->v;
      Var e = fr.fresh(Sort::Elem, "normalize");
      Var kk = fr.fresh(Sort::Ord, "normalize");
      Var A = fr.fresh(Sort::Array, "normalize");
      return {{mk::cell_mkcell(c, e, kk, A, v(0))}};
    }
    case LitKind::set_in: {
      // a in s  ->  w = {a} /\ s = w u s
      Var w = fr.fresh(Sort::Set, "normalize");
      return {{mk::set_singleton(w, v(0)), mk::set_union(v(1), w, v(1))}};
    }
    case LitKind::not_set_in: {
      // !(a in s)  ->  w = {a} /\ w = w \ s
      Var w = fr.fresh(Sort::Set, "normalize");
      return {{mk::set_singleton(w, v(0)), mk::set_diff(w, w, v(1))}};
    }
    case LitKind::not_ord_leq:
      // !(k1 <= k2)  ->  k2 <= k1 /\ k2 != k1
      return {{mk::ord_leq(v(1), v(0)), mk::ord_neq(v(1), v(0))}};
    case LitKind::not_level_less:
      // !(l1 < l2)  ->  l2 < l1  \/  l1 = l2
      return {{mk::level_less(v(1), v(0))}, {mk::var_eq(v(0), v(1))}};
    case LitKind::reach: {
      // reach(m,a1,a2,l,p)  ->  a2 in addr2set(m,a1,l) /\ p = getp(m,a1,a2,l)
      Var s = fr.fresh(Sort::Set, "normalize");
      Var w = fr.fresh(Sort::Set, "normalize");
      return {{mk::addr2set(s, v(0), v(1), v(3)), mk::set_singleton(w, v(2)),
               mk::set_union(s, w, s), mk::getp(v(4), v(0), v(1), v(2), v(3))}};
    }
    case LitKind::not_reach: {
      // either the canonical path differs from p, or a2 is unreachable
      Var p2 = fr.fresh(Sort::Path, "normalize");
      Var s = fr.fresh(Sort::Set, "normalize");
      Var w = fr.fresh(Sort::Set, "normalize");
      return {{mk::getp(p2, v(0), v(1), v(2), v(3)), mk::path_neq(v(4), p2)},
              {mk::addr2set(s, v(0), v(1), v(3)), mk::set_singleton(w, v(2)),
               mk::set_diff(w, w, s)}};
    }
    case LitKind::not_ord_list: {
      // two witnesses on the path whose level-0 successor breaks the order
      Var m = v(0), p = v(1);
      Var zero = fr.fresh(Sort::Level, "normalize");
      Var a1 = fr.fresh(Sort::Addr, "normalize");
      Var a2 = fr.fresh(Sort::Addr, "normalize");
      Var sp = fr.fresh(Sort::Set, "normalize");
      Var w1 = fr.fresh(Sort::Set, "normalize");
      Var w2 = fr.fresh(Sort::Set, "normalize");
      Var c1 = fr.fresh(Sort::Cell, "normalize");
      Var c2 = fr.fresh(Sort::Cell, "normalize");
      Var e1 = fr.fresh(Sort::Elem, "normalize");
      Var e2 = fr.fresh(Sort::Elem, "normalize");
      Var k1 = fr.fresh(Sort::Ord, "normalize");
      Var k2 = fr.fresh(Sort::Ord, "normalize");
      Var A1 = fr.fresh(Sort::Array, "normalize");
      Var A2 = fr.fresh(Sort::Array, "normalize");
      Var l1 = fr.fresh(Sort::Level, "normalize");
      Var l2 = fr.fresh(Sort::Level, "normalize");
      return {{
          mk::path2set(sp, p),
          mk::set_singleton(w1, a1),
          mk::set_union(sp, w1, sp),
          mk::set_singleton(w2, a2),
          mk::set_union(sp, w2, sp),
          mk::level_const_eq(zero, Nat(0)),
          mk::cell_rd(c1, m, a1),
          mk::cell_mkcell(c1, e1, k1, A1, l1),
          mk::array_rd(a2, A1, zero),
          mk::cell_rd(c2, m, a2),
          mk::cell_mkcell(c2, e2, k2, A2, l2),
          mk::ord_leq(k2, k1),
          mk::ord_neq(k2, k1),
      }};
    }
    case LitKind::not_skiplist: {
      Var m = v(0), r = v(1), lv = v(2), ai = v(3), ae = v(4);
      Alternatives alts;
      {  // NSL1: the backbone is not ordered
        Var z = fr.fresh(Sort::Level, "normalize");
        Var p = fr.fresh(Sort::Path, "normalize");
        alts.push_back({mk::level_const_eq(z, Nat(0)), mk::getp(p, m, ai, ae, z),
                        Literal{Pred::ord_list, false, {tv(m), tv(p)}}});
      }
      {  // NSL2: the region is not the level-0 path
        Var z = fr.fresh(Sort::Level, "normalize");
        Var p = fr.fresh(Sort::Path, "normalize");
        Var s = fr.fresh(Sort::Set, "normalize");
        alts.push_back({mk::level_const_eq(z, Nat(0)), mk::getp(p, m, ai, ae, z),
                        mk::path2set(s, p),
                        Literal{Pred::neq, true, {tv(r), tv(s)}}});
      }
      {  // NSL3: l < 0, unsatisfiable over the naturals
        Var z = fr.fresh(Sort::Level, "normalize");
        alts.push_back({mk::level_const_eq(z, Nat(0)), mk::level_less(lv, z)});
      }
      {  // NSL4: some region cell is taller than l
        Var a = fr.fresh(Sort::Addr, "normalize");
        Var w = fr.fresh(Sort::Set, "normalize");
        Var c = fr.fresh(Sort::Cell, "normalize");
        Var e = fr.fresh(Sort::Elem, "normalize");
        Var k = fr.fresh(Sort::Ord, "normalize");
        Var A = fr.fresh(Sort::Array, "normalize");
        Var lt = fr.fresh(Sort::Level, "normalize");
        alts.push_back({mk::set_singleton(w, a), mk::set_union(r, w, r),
                        mk::cell_rd(c, m, a), mk::cell_mkcell(c, e, k, A, lt),
                        mk::level_less(lv, lt)});
      }
      {  // NSL5: the end cell has a non-null pointer at some level <= l
        Var l3 = fr.fresh(Sort::Level, "normalize");
        Var l2 = fr.fresh(Sort::Level, "normalize");
        Var c = fr.fresh(Sort::Cell, "normalize");
        Var e = fr.fresh(Sort::Elem, "normalize");
        Var k = fr.fresh(Sort::Ord, "normalize");
        Var A = fr.fresh(Sort::Array, "normalize");
        Var lc = fr.fresh(Sort::Level, "normalize");
        Var a = fr.fresh(Sort::Addr, "normalize");
        alts.push_back({mk::level_succ_eq(l3, lv), mk::level_less(l2, l3),
                        mk::cell_rd(c, m, ae), mk::cell_mkcell(c, e, k, A, lc),
                        mk::array_rd(a, A, l2), mk::addr_neq(a, null_var())});
      }
      {  // NSL6: some level below l is not a sublist of its predecessor
        Var l1 = fr.fresh(Sort::Level, "normalize");
        Var l2 = fr.fresh(Sort::Level, "normalize");
        Var p1 = fr.fresh(Sort::Path, "normalize");
        Var p2 = fr.fresh(Sort::Path, "normalize");
        Var s1 = fr.fresh(Sort::Set, "normalize");
        Var s2 = fr.fresh(Sort::Set, "normalize");
        Var w = fr.fresh(Sort::Set, "normalize");
        Var a = fr.fresh(Sort::Addr, "normalize");
        alts.push_back({mk::level_succ_eq(l2, l1), mk::level_less(l1, lv),
                        mk::getp(p1, m, ai, ae, l2), mk::getp(p2, m, ai, ae, l1),
                        mk::path2set(s1, p1), mk::path2set(s2, p2),
                        mk::set_singleton(w, a), mk::set_union(s1, w, s1),
                        mk::set_diff(w, w, s2)});
      }
      return alts;
    }
    case LitKind::var_neq: {
      Sort s = l.args[0]->v.sort;
      if (s == Sort::Set) {
        // witness address in the symmetric difference
        Var d1 = fr.fresh(Sort::Set, "normalize");
        Var d2 = fr.fresh(Sort::Set, "normalize");
        Var u = fr.fresh(Sort::Set, "normalize");
        Var w = fr.fresh(Sort::Set, "normalize");
        Var a = fr.fresh(Sort::Addr, "normalize");
        return {{mk::set_diff(d1, v(0), v(1)), mk::set_diff(d2, v(1), v(0)),
                 mk::set_union(u, d1, d2), mk::set_singleton(w, a),
                 mk::set_union(u, w, u)}};
      }
      if (s == Sort::Array) {
        Var lw = fr.fresh(Sort::Level, "normalize");
        Var x1 = fr.fresh(Sort::Addr, "normalize");
        Var x2 = fr.fresh(Sort::Addr, "normalize");
        return {{mk::array_rd(x1, v(0), lw), mk::array_rd(x2, v(1), lw),
                 mk::addr_neq(x1, x2)}};
      }
      if (s == Sort::Cell) {
        Alternatives alts;
        auto decomp = [&](const Var& c, Var& e, Var& k, Var& A, Var& lv) {
          e = fr.fresh(Sort::Elem, "normalize");
          k = fr.fresh(Sort::Ord, "normalize");
          A = fr.fresh(Sort::Array, "normalize");
          lv = fr.fresh(Sort::Level, "normalize");
          return mk::cell_mkcell(c, e, k, A, lv);
        };
        {  // c1 error, c2 proper
          Var e, k, A, lv;
          alts.push_back({mk::cell_is_error(v(0)), decomp(v(1), e, k, A, lv)});
        }
        {  // c2 error, c1 proper
          Var e, k, A, lv;
          alts.push_back({mk::cell_is_error(v(1)), decomp(v(0), e, k, A, lv)});
        }
        // both proper with one component differing
        for (int comp = 0; comp < 4; ++comp) {
          Var e1, k1, A1, l1, e2, k2, A2, l2;
          std::vector<Literal> cube = {decomp(v(0), e1, k1, A1, l1),
                                       decomp(v(1), e2, k2, A2, l2)};
          switch (comp) {
            case 0: cube.push_back(mk::elem_neq(e1, e2)); break;
            case 1: cube.push_back(mk::ord_neq(k1, k2)); break;
            case 2: cube.push_back(Literal{Pred::neq, true, {tv(A1), tv(A2)}}); break;
            case 3: cube.push_back(mk::level_neq(l1, l2)); break;
          }
          alts.push_back(std::move(cube));
        }
        return alts;
      }
      if (s == Sort::Mem) {
        Var a = fr.fresh(Sort::Addr, "normalize");
        Var c1 = fr.fresh(Sort::Cell, "normalize");
        Var c2 = fr.fresh(Sort::Cell, "normalize");
        return {{mk::cell_rd(c1, v(0), a), mk::cell_rd(c2, v(1), a),
                 Literal{Pred::neq, true, {tv(c1), tv(c2)}}}};
      }
      throw std::invalid_argument("normalize: unexpected disequality over " +
                                  std::string(sort_name(s)));
    }
    default:
      throw std::invalid_argument("normalize: literal kind " + litkind_name(k) +
                                  " outside the surface language: " +
                                  print_literal(l));
  }
}

}  // namespace

bool is_normalized(const Cube& c) {
  for (const Literal& l : c) {
    LitKind k = classify(l);
    if (!litkind_is_normalized(k) && k != LitKind::level_succ_eq) return false;
  }
  return true;
}

std::vector<NormCube> normalize_full(const Cube& input, FreshSupply& fresh) {
  // flatten every literal first
  Cube flat;
  for (const Literal& l : input) {
    FlatResult fr = flatten_literal(l, fresh);
    if (!fr.ok) return {};
    flat.insert(flat.end(), fr.lits.begin(), fr.lits.end());
  }

  std::vector<NormCube> done;
  // depth-first so that multi-cube expansions keep their listed order
  std::function<void(NormCube)> process = [&](NormCube nc) {
    if (!substitution_pass(nc.cube, nc.subst)) return;  // contradictory
    // locate the first literal needing a rewrite
    size_t idx = nc.cube.size();
    LitKind kind = LitKind::not_normal;
    for (size_t i = 0; i < nc.cube.size(); ++i) {
      LitKind k = classify(nc.cube[i]);
      if (litkind_is_normalized(k) || k == LitKind::level_succ_eq) continue;
      idx = i;
      kind = k;
      break;
    }
    if (idx == nc.cube.size()) {
      done.push_back(std::move(nc));
      return;
    }
    Alternatives alts = rewrite_surface(nc.cube[idx], kind, fresh);
    for (auto& alt : alts) {
      NormCube branch;
      branch.subst = nc.subst;
      branch.cube.insert(branch.cube.end(), nc.cube.begin(), nc.cube.begin() + idx);
      branch.cube.insert(branch.cube.end(), alt.begin(), alt.end());
      branch.cube.insert(branch.cube.end(), nc.cube.begin() + idx + 1,
                         nc.cube.end());
      process(std::move(branch));
    }
  };
  process(NormCube{std::move(flat), {}});
  return done;
}

std::vector<Cube> normalize(const Cube& c, FreshSupply& fresh) {
  std::vector<Cube> out;
  for (auto& nc : normalize_full(c, fresh)) out.push_back(std::move(nc.cube));
  return out;
}

}  // namespace tsl
