#include "core/ast.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace tsl {

const char* sort_name(Sort s) {
  switch (s) {
    case Sort::Addr: return "Addr";
    case Sort::Elem: return "Elem";
    case Sort::Ord: return "Ord";
    case Sort::Level: return "Level";
    case Sort::Array: return "Array";
    case Sort::Cell: return "Cell";
    case Sort::Mem: return "Mem";
    case Sort::Path: return "Path";
    case Sort::Set: return "Set";
  }
  return "?";
}

std::optional<Sort> sort_from_name(std::string_view name) {
  for (Sort s : kAllSorts)
    if (name == sort_name(s)) return s;
  return std::nullopt;
}

bool is_builtin_const_name(std::string_view name) {
  return name == "null" || name == "error" || name == "-inf" || name == "+inf";
}

Var null_var() { return Var{"null", Sort::Addr, ""}; }
Var error_var() { return Var{"error", Sort::Cell, ""}; }
Var minus_inf_var() { return Var{"-inf", Sort::Ord, ""}; }
Var plus_inf_var() { return Var{"+inf", Sort::Ord, ""}; }

const std::vector<Var>& builtin_consts() {
  static const std::vector<Var> k = {null_var(), error_var(), minus_inf_var(),
                                     plus_inf_var()};
  return k;
}

const char* fn_name(Fn f) {
  switch (f) {
    case Fn::rd: return "rd";
    case Fn::upd: return "upd";
    case Fn::mkcell: return "mkcell";
    case Fn::arr_rd: return "arrrd";
    case Fn::arr_upd: return "arrupd";
    case Fn::getp: return "getp";
    case Fn::addr2set: return "addr2set";
    case Fn::path2set: return "path2set";
    case Fn::rev: return "rev";
    case Fn::single_path: return "singlepath";
    case Fn::set_union: return "union";
    case Fn::set_diff: return "setdiff";
    case Fn::singleton: return "singleton";
    case Fn::sel_data: return "data";
    case Fn::sel_key: return "key";
    case Fn::sel_arr: return "arr";
    case Fn::sel_max: return "max";
    case Fn::level_succ: return "+";
  }
  return "?";
}

TermPtr Term::mk_var(Var var) {
  auto t = std::make_shared<Term>();
  t->kind = Kind::var;
  t->v = std::move(var);
  return t;
}

TermPtr Term::mk_const(Nat n) {
  if (n < 0) throw SortError("level constants must be nonnegative");
  auto t = std::make_shared<Term>();
  t->kind = Kind::level_const;
  t->num = std::move(n);
  return t;
}

TermPtr Term::mk_app(Fn f, std::vector<TermPtr> args) {
  auto t = std::make_shared<Term>();
  t->kind = Kind::app;
  t->fn = f;
  t->args = std::move(args);
  term_sort(*t);  // sort check now
  return t;
}

namespace {

struct FnSig {
  std::vector<Sort> args;
  Sort result;
};

const FnSig& fn_sig(Fn f) {
  static const std::map<Fn, FnSig> sigs = {
      {Fn::rd, {{Sort::Mem, Sort::Addr}, Sort::Cell}},
      {Fn::upd, {{Sort::Mem, Sort::Addr, Sort::Cell}, Sort::Mem}},
      {Fn::mkcell, {{Sort::Elem, Sort::Ord, Sort::Array, Sort::Level}, Sort::Cell}},
      {Fn::arr_rd, {{Sort::Array, Sort::Level}, Sort::Addr}},
      {Fn::arr_upd, {{Sort::Array, Sort::Level, Sort::Addr}, Sort::Array}},
      {Fn::getp, {{Sort::Mem, Sort::Addr, Sort::Addr, Sort::Level}, Sort::Path}},
      {Fn::addr2set, {{Sort::Mem, Sort::Addr, Sort::Level}, Sort::Set}},
      {Fn::path2set, {{Sort::Path}, Sort::Set}},
      {Fn::rev, {{Sort::Path}, Sort::Path}},
      {Fn::single_path, {{Sort::Addr}, Sort::Path}},
      {Fn::set_union, {{Sort::Set, Sort::Set}, Sort::Set}},
      {Fn::set_diff, {{Sort::Set, Sort::Set}, Sort::Set}},
      {Fn::singleton, {{Sort::Addr}, Sort::Set}},
      {Fn::sel_data, {{Sort::Cell}, Sort::Elem}},
      {Fn::sel_key, {{Sort::Cell}, Sort::Ord}},
      {Fn::sel_arr, {{Sort::Cell}, Sort::Array}},
      {Fn::sel_max, {{Sort::Cell}, Sort::Level}},
      {Fn::level_succ, {{Sort::Level}, Sort::Level}},
  };
  return sigs.at(f);
}

}  // namespace

Sort term_sort(const Term& t) {
  switch (t.kind) {
    case Term::Kind::var: return t.v.sort;
    case Term::Kind::level_const: return Sort::Level;
    case Term::Kind::app: {
      const FnSig& sig = fn_sig(t.fn);
      if (t.args.size() != sig.args.size())
        throw SortError(std::string(fn_name(t.fn)) + ": expected " +
                        std::to_string(sig.args.size()) + " arguments, got " +
                        std::to_string(t.args.size()));
      for (size_t i = 0; i < t.args.size(); ++i) {
        Sort got = term_sort(*t.args[i]);
        if (got != sig.args[i])
          throw SortError(std::string(fn_name(t.fn)) + ": argument " +
                          std::to_string(i + 1) + " has sort " + sort_name(got) +
                          ", expected " + sort_name(sig.args[i]));
      }
      return sig.result;
    }
  }
  throw SortError("bad term");
}

Sort term_sort(const TermPtr& t) { return term_sort(*t); }

bool term_equal(const TermPtr& a, const TermPtr& b) {
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Term::Kind::var: return a->v == b->v;
    case Term::Kind::level_const: return a->num == b->num;
    case Term::Kind::app: {
      if (a->fn != b->fn || a->args.size() != b->args.size()) return false;
      for (size_t i = 0; i < a->args.size(); ++i)
        if (!term_equal(a->args[i], b->args[i])) return false;
      return true;
    }
  }
  return false;
}

void collect_vars(const TermPtr& t, std::vector<Var>& out) {
  switch (t->kind) {
    case Term::Kind::var:
      out.push_back(t->v);
      break;
    case Term::Kind::level_const:
      break;
    case Term::Kind::app:
      for (const auto& a : t->args) collect_vars(a, out);
      break;
  }
}

bool Literal::operator==(const Literal& o) const {
  if (pred != o.pred || positive != o.positive || args.size() != o.args.size())
    return false;
  for (size_t i = 0; i < args.size(); ++i)
    if (!term_equal(args[i], o.args[i])) return false;
  return true;
}

bool litkind_is_normalized(LitKind k) {
  return static_cast<uint8_t>(k) <= static_cast<uint8_t>(LitKind::skiplist);
}

namespace {

bool is_var(const TermPtr& t) { return t->is_var(); }
bool is_var(const TermPtr& t, Sort s) { return t->is_var() && t->v.sort == s; }
bool is_named(const TermPtr& t, const Var& v) { return t->is_var() && t->v == v; }

}  // namespace

LitKind classify(const Literal& l) {
  const auto& a = l.args;
  switch (l.pred) {
    case Pred::eq: {
      if (a.size() != 2) return LitKind::not_normal;
      const TermPtr& lhs = a[0];
      const TermPtr& rhs = a[1];
      if (!is_var(lhs)) return LitKind::not_normal;
      if (!l.positive) return LitKind::not_normal;
      Sort ls = lhs->v.sort;
      if (rhs->is_var()) {
        if (rhs->v.sort != ls) return LitKind::not_normal;
        if (ls == Sort::Addr && is_named(rhs, null_var())) return LitKind::addr_is_null;
        if (ls == Sort::Cell && is_named(rhs, error_var())) return LitKind::cell_is_error;
        return LitKind::var_eq;
      }
      if (rhs->is_const()) {
        return ls == Sort::Level ? LitKind::level_const_eq : LitKind::not_normal;
      }
      // rhs is an application; all arguments must be plain variables
      for (const auto& arg : rhs->args)
        if (!arg->is_var()) return LitKind::not_normal;
      switch (rhs->fn) {
        case Fn::rd: return LitKind::cell_rd;
        case Fn::upd: return LitKind::mem_upd;
        case Fn::mkcell: return LitKind::cell_mkcell;
        case Fn::arr_rd: return LitKind::array_rd;
        case Fn::arr_upd: return LitKind::array_upd;
        case Fn::getp: return LitKind::getp;
        case Fn::addr2set: return LitKind::addr2set;
        case Fn::path2set: return LitKind::path2set;
        case Fn::rev: return LitKind::path_rev;
        case Fn::single_path: return LitKind::path_singleton;
        case Fn::set_union: return LitKind::set_union;
        case Fn::set_diff: return LitKind::set_diff;
        case Fn::singleton: return LitKind::set_singleton;
        case Fn::sel_data: return LitKind::sel_data;
        case Fn::sel_key: return LitKind::sel_key;
        case Fn::sel_arr: return LitKind::sel_arr;
        case Fn::sel_max: return LitKind::sel_max;
        case Fn::level_succ: return LitKind::level_succ_eq;
      }
      return LitKind::not_normal;
    }
    case Pred::neq: {
      if (a.size() != 2 || !is_var(a[0]) || !is_var(a[1])) return LitKind::not_normal;
      if (a[0]->v.sort != a[1]->v.sort) return LitKind::not_normal;
      if (!l.positive) return LitKind::not_normal;
      switch (a[0]->v.sort) {
        case Sort::Elem: return LitKind::elem_neq;
        case Sort::Addr: return LitKind::addr_neq;
        case Sort::Level: return LitKind::level_neq;
        case Sort::Ord: return LitKind::ord_neq;
        case Sort::Path: return LitKind::path_neq;
        default: return LitKind::var_neq;
      }
    }
    case Pred::less:
      if (a.size() != 2 || !is_var(a[0], Sort::Level) || !is_var(a[1], Sort::Level))
        return LitKind::not_normal;
      return l.positive ? LitKind::level_less : LitKind::not_level_less;
    case Pred::ord_leq:
      if (a.size() != 2 || !is_var(a[0], Sort::Ord) || !is_var(a[1], Sort::Ord))
        return LitKind::not_normal;
      return l.positive ? LitKind::ord_leq : LitKind::not_ord_leq;
    case Pred::set_in:
      if (a.size() != 2 || !is_var(a[0], Sort::Addr) || !is_var(a[1], Sort::Set))
        return LitKind::not_normal;
      return l.positive ? LitKind::set_in : LitKind::not_set_in;
    case Pred::reach:
      if (a.size() != 5) return LitKind::not_normal;
      for (const auto& arg : a)
        if (!arg->is_var()) return LitKind::not_normal;
      return l.positive ? LitKind::reach : LitKind::not_reach;
    case Pred::ord_list:
      if (a.size() != 2 || !is_var(a[0], Sort::Mem) || !is_var(a[1], Sort::Path))
        return LitKind::not_normal;
      return l.positive ? LitKind::ord_list : LitKind::not_ord_list;
    case Pred::skiplist:
      if (a.size() != 5) return LitKind::not_normal;
      for (const auto& arg : a)
        if (!arg->is_var()) return LitKind::not_normal;
      return l.positive ? LitKind::skiplist : LitKind::not_skiplist;
    case Pred::append:
      if (a.size() != 3) return LitKind::not_normal;
      for (const auto& arg : a)
        if (!arg->is_var()) return LitKind::not_normal;
      return l.positive ? LitKind::append : LitKind::not_append;
  }
  return LitKind::not_normal;
}

std::string litkind_name(LitKind k) {
  switch (k) {
    case LitKind::elem_neq: return "elem_neq";
    case LitKind::addr_neq: return "addr_neq";
    case LitKind::level_neq: return "level_neq";
    case LitKind::addr_is_null: return "addr_is_null";
    case LitKind::cell_is_error: return "cell_is_error";
    case LitKind::cell_rd: return "cell_rd";
    case LitKind::ord_neq: return "ord_neq";
    case LitKind::ord_leq: return "ord_leq";
    case LitKind::mem_upd: return "mem_upd";
    case LitKind::cell_mkcell: return "cell_mkcell";
    case LitKind::level_less: return "level_less";
    case LitKind::level_const_eq: return "level_const_eq";
    case LitKind::set_singleton: return "set_singleton";
    case LitKind::set_union: return "set_union";
    case LitKind::set_diff: return "set_diff";
    case LitKind::array_rd: return "array_rd";
    case LitKind::array_upd: return "array_upd";
    case LitKind::path_neq: return "path_neq";
    case LitKind::path_singleton: return "path_singleton";
    case LitKind::path_rev: return "path_rev";
    case LitKind::path2set: return "path2set";
    case LitKind::append: return "append";
    case LitKind::not_append: return "not_append";
    case LitKind::addr2set: return "addr2set";
    case LitKind::getp: return "getp";
    case LitKind::ord_list: return "ord_list";
    case LitKind::skiplist: return "skiplist";
    case LitKind::level_succ_eq: return "level_succ_eq";
    case LitKind::var_eq: return "var_eq";
    case LitKind::sel_data: return "sel_data";
    case LitKind::sel_key: return "sel_key";
    case LitKind::sel_arr: return "sel_arr";
    case LitKind::sel_max: return "sel_max";
    case LitKind::reach: return "reach";
    case LitKind::not_reach: return "not_reach";
    case LitKind::not_ord_list: return "not_ord_list";
    case LitKind::not_skiplist: return "not_skiplist";
    case LitKind::set_in: return "set_in";
    case LitKind::not_set_in: return "not_set_in";
    case LitKind::not_ord_leq: return "not_ord_leq";
    case LitKind::not_level_less: return "not_level_less";
    case LitKind::var_neq: return "var_neq";
    case LitKind::not_normal: return "not_normal";
  }
  return "?";
}

namespace mk {

namespace {

Var want(const Var& v, Sort s, const char* what) {
  if (v.sort != s)
    throw SortError(std::string(what) + ": variable '" + v.name + "' has sort " +
                    sort_name(v.sort) + ", expected " + sort_name(s));
  return v;
}

Literal pos(Pred p, std::vector<TermPtr> args) {
  return Literal{p, true, std::move(args)};
}

Literal neg(Pred p, std::vector<TermPtr> args) {
  return Literal{p, false, std::move(args)};
}

TermPtr tv(const Var& v) { return Term::mk_var(v); }

}  // namespace

Literal elem_neq(const Var& e1, const Var& e2) {
  return pos(Pred::neq, {tv(want(e1, Sort::Elem, "elem_neq")),
                         tv(want(e2, Sort::Elem, "elem_neq"))});
}
Literal addr_neq(const Var& a1, const Var& a2) {
  return pos(Pred::neq, {tv(want(a1, Sort::Addr, "addr_neq")),
                         tv(want(a2, Sort::Addr, "addr_neq"))});
}
Literal level_neq(const Var& l1, const Var& l2) {
  return pos(Pred::neq, {tv(want(l1, Sort::Level, "level_neq")),
                         tv(want(l2, Sort::Level, "level_neq"))});
}
Literal addr_is_null(const Var& a) {
  return pos(Pred::eq, {tv(want(a, Sort::Addr, "addr_is_null")), tv(null_var())});
}
Literal cell_is_error(const Var& c) {
  return pos(Pred::eq, {tv(want(c, Sort::Cell, "cell_is_error")), tv(error_var())});
}
Literal cell_rd(const Var& c, const Var& m, const Var& a) {
  return pos(Pred::eq, {tv(want(c, Sort::Cell, "cell_rd")),
                        Term::mk_app(Fn::rd, {tv(want(m, Sort::Mem, "cell_rd")),
                                              tv(want(a, Sort::Addr, "cell_rd"))})});
}
Literal ord_neq(const Var& k1, const Var& k2) {
  return pos(Pred::neq, {tv(want(k1, Sort::Ord, "ord_neq")),
                         tv(want(k2, Sort::Ord, "ord_neq"))});
}
Literal ord_leq(const Var& k1, const Var& k2) {
  return pos(Pred::ord_leq, {tv(want(k1, Sort::Ord, "ord_leq")),
                             tv(want(k2, Sort::Ord, "ord_leq"))});
}
Literal mem_upd(const Var& m2, const Var& m1, const Var& a, const Var& c) {
  return pos(Pred::eq,
             {tv(want(m2, Sort::Mem, "mem_upd")),
              Term::mk_app(Fn::upd, {tv(want(m1, Sort::Mem, "mem_upd")),
                                     tv(want(a, Sort::Addr, "mem_upd")),
                                     tv(want(c, Sort::Cell, "mem_upd"))})});
}
Literal cell_mkcell(const Var& c, const Var& e, const Var& k, const Var& arr,
                    const Var& l) {
  return pos(Pred::eq,
             {tv(want(c, Sort::Cell, "cell_mkcell")),
              Term::mk_app(Fn::mkcell, {tv(want(e, Sort::Elem, "cell_mkcell")),
                                        tv(want(k, Sort::Ord, "cell_mkcell")),
                                        tv(want(arr, Sort::Array, "cell_mkcell")),
                                        tv(want(l, Sort::Level, "cell_mkcell"))})});
}
Literal level_less(const Var& l1, const Var& l2) {
  return pos(Pred::less, {tv(want(l1, Sort::Level, "level_less")),
                          tv(want(l2, Sort::Level, "level_less"))});
}
Literal level_const_eq(const Var& l, const Nat& q) {
  return pos(Pred::eq, {tv(want(l, Sort::Level, "level_const_eq")), Term::mk_const(q)});
}
Literal set_singleton(const Var& s, const Var& a) {
  return pos(Pred::eq, {tv(want(s, Sort::Set, "set_singleton")),
                        Term::mk_app(Fn::singleton,
                                     {tv(want(a, Sort::Addr, "set_singleton"))})});
}
Literal set_union(const Var& s1, const Var& s2, const Var& s3) {
  return pos(Pred::eq, {tv(want(s1, Sort::Set, "set_union")),
                        Term::mk_app(Fn::set_union,
                                     {tv(want(s2, Sort::Set, "set_union")),
                                      tv(want(s3, Sort::Set, "set_union"))})});
}
Literal set_diff(const Var& s1, const Var& s2, const Var& s3) {
  return pos(Pred::eq, {tv(want(s1, Sort::Set, "set_diff")),
                        Term::mk_app(Fn::set_diff,
                                     {tv(want(s2, Sort::Set, "set_diff")),
                                      tv(want(s3, Sort::Set, "set_diff"))})});
}
Literal array_rd(const Var& a, const Var& arr, const Var& l) {
  return pos(Pred::eq, {tv(want(a, Sort::Addr, "array_rd")),
                        Term::mk_app(Fn::arr_rd,
                                     {tv(want(arr, Sort::Array, "array_rd")),
                                      tv(want(l, Sort::Level, "array_rd"))})});
}
Literal array_upd(const Var& b, const Var& a, const Var& l, const Var& at) {
  return pos(Pred::eq, {tv(want(b, Sort::Array, "array_upd")),
                        Term::mk_app(Fn::arr_upd,
                                     {tv(want(a, Sort::Array, "array_upd")),
                                      tv(want(l, Sort::Level, "array_upd")),
                                      tv(want(at, Sort::Addr, "array_upd"))})});
}
Literal path_neq(const Var& p1, const Var& p2) {
  return pos(Pred::neq, {tv(want(p1, Sort::Path, "path_neq")),
                         tv(want(p2, Sort::Path, "path_neq"))});
}
Literal path_singleton(const Var& p, const Var& a) {
  return pos(Pred::eq, {tv(want(p, Sort::Path, "path_singleton")),
                        Term::mk_app(Fn::single_path,
                                     {tv(want(a, Sort::Addr, "path_singleton"))})});
}
Literal path_rev(const Var& p1, const Var& p2) {
  return pos(Pred::eq, {tv(want(p1, Sort::Path, "path_rev")),
                        Term::mk_app(Fn::rev, {tv(want(p2, Sort::Path, "path_rev"))})});
}
Literal path2set(const Var& s, const Var& p) {
  return pos(Pred::eq, {tv(want(s, Sort::Set, "path2set")),
                        Term::mk_app(Fn::path2set, {tv(want(p, Sort::Path, "path2set"))})});
}
Literal append(const Var& p1, const Var& p2, const Var& p3) {
  return pos(Pred::append, {tv(want(p1, Sort::Path, "append")),
                            tv(want(p2, Sort::Path, "append")),
                            tv(want(p3, Sort::Path, "append"))});
}
Literal not_append(const Var& p1, const Var& p2, const Var& p3) {
  return neg(Pred::append, {tv(want(p1, Sort::Path, "not_append")),
                            tv(want(p2, Sort::Path, "not_append")),
                            tv(want(p3, Sort::Path, "not_append"))});
}
Literal addr2set(const Var& s, const Var& m, const Var& a, const Var& l) {
  return pos(Pred::eq, {tv(want(s, Sort::Set, "addr2set")),
                        Term::mk_app(Fn::addr2set,
                                     {tv(want(m, Sort::Mem, "addr2set")),
                                      tv(want(a, Sort::Addr, "addr2set")),
                                      tv(want(l, Sort::Level, "addr2set"))})});
}
Literal getp(const Var& p, const Var& m, const Var& a1, const Var& a2, const Var& l) {
  return pos(Pred::eq, {tv(want(p, Sort::Path, "getp")),
                        Term::mk_app(Fn::getp, {tv(want(m, Sort::Mem, "getp")),
                                                tv(want(a1, Sort::Addr, "getp")),
                                                tv(want(a2, Sort::Addr, "getp")),
                                                tv(want(l, Sort::Level, "getp"))})});
}
Literal ord_list(const Var& m, const Var& p) {
  return pos(Pred::ord_list, {tv(want(m, Sort::Mem, "ord_list")),
                              tv(want(p, Sort::Path, "ord_list"))});
}
Literal skiplist(const Var& m, const Var& s, const Var& l, const Var& a1,
                 const Var& a2) {
  return pos(Pred::skiplist, {tv(want(m, Sort::Mem, "skiplist")),
                              tv(want(s, Sort::Set, "skiplist")),
                              tv(want(l, Sort::Level, "skiplist")),
                              tv(want(a1, Sort::Addr, "skiplist")),
                              tv(want(a2, Sort::Addr, "skiplist"))});
}
Literal level_succ_eq(const Var& l1, const Var& l2) {
  return pos(Pred::eq, {tv(want(l1, Sort::Level, "level_succ_eq")),
                        Term::mk_app(Fn::level_succ,
                                     {tv(want(l2, Sort::Level, "level_succ_eq"))})});
}
Literal var_eq(const Var& x, const Var& y) {
  if (x.sort != y.sort)
    throw SortError("var_eq: sorts differ: " + x.name + ":" + sort_name(x.sort) +
                    " vs " + y.name + ":" + sort_name(y.sort));
  return pos(Pred::eq, {tv(x), tv(y)});
}
Literal set_in(const Var& a, const Var& s) {
  return pos(Pred::set_in, {tv(want(a, Sort::Addr, "set_in")),
                            tv(want(s, Sort::Set, "set_in"))});
}

}  // namespace mk

std::vector<Var> vars_of(const Literal& l) {
  std::vector<Var> all;
  for (const auto& t : l.args) collect_vars(t, all);
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

std::vector<Var> vars_of(const Cube& c) {
  std::vector<Var> all;
  for (const auto& l : c)
    for (const auto& t : l.args) collect_vars(t, all);
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

std::vector<Var> vars_of(const Formula& f) {
  std::vector<Var> all;
  for (const auto& c : f.cubes) {
    auto vs = vars_of(c);
    all.insert(all.end(), vs.begin(), vs.end());
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

std::vector<Var> level_vars_of(const Cube& c) {
  std::vector<Var> out;
  for (const auto& v : vars_of(c))
    if (v.sort == Sort::Level) out.push_back(v);
  return out;
}

void FreshSupply::reserve(const std::string& name) {
  if (!is_taken(name)) taken_.push_back(name);
}

void FreshSupply::reserve_all(const Formula& f) {
  for (const auto& v : f.decls) reserve(v.name);
  for (const auto& v : vars_of(f)) reserve(v.name);
}

void FreshSupply::reserve_all(const Cube& c) {
  for (const auto& v : vars_of(c)) reserve(v.name);
}

bool FreshSupply::is_taken(const std::string& n) const {
  return std::find(taken_.begin(), taken_.end(), n) != taken_.end();
}

Var FreshSupply::fresh(Sort s, const std::string& stage) {
  std::string prefix;
  if (stage == "sanitize" && s == Sort::Level) {
    prefix = "@l_new";
  } else {
    switch (s) {
      case Sort::Addr: prefix = "@a"; break;
      case Sort::Elem: prefix = "@e"; break;
      case Sort::Ord: prefix = "@k"; break;
      case Sort::Level: prefix = "@l"; break;
      case Sort::Array: prefix = "@A"; break;
      case Sort::Cell: prefix = "@c"; break;
      case Sort::Mem: prefix = "@m"; break;
      case Sort::Path: prefix = "@p"; break;
      case Sort::Set: prefix = "@s"; break;
    }
  }
  for (uint64_t i = 1;; ++i) {
    std::string name = prefix + std::to_string(i);
    if (!is_taken(name)) {
      taken_.push_back(name);
      return Var{name, s, stage};
    }
  }
}

}  // namespace tsl
