// Sorts, variables, terms, literals, cubes and formulas of the skiplist theory.
#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace tsl {

// Unbounded natural, used for level values and level constants.
using Nat = boost::multiprecision::cpp_int;

enum class Sort : uint8_t { Addr, Elem, Ord, Level, Array, Cell, Mem, Path, Set };

constexpr std::array<Sort, 9> kAllSorts = {Sort::Addr, Sort::Elem, Sort::Ord,
                                           Sort::Level, Sort::Array, Sort::Cell,
                                           Sort::Mem, Sort::Path, Sort::Set};

const char* sort_name(Sort s);
std::optional<Sort> sort_from_name(std::string_view name);

struct SortError : std::runtime_error {
  explicit SortError(const std::string& msg) : std::runtime_error(msg) {}
};

// Variable. Names are globally unique within a formula; fresh variables carry
// the reserved '@' prefix and a stage tag recording which pipeline stage
// introduced them. The builtin constants null/error/-inf/+inf are modelled as
// reserved variables with a fixed sort.
struct Var {
  std::string name;
  Sort sort = Sort::Addr;
  std::string stage;  // empty for user variables

  bool is_fresh() const { return !name.empty() && name[0] == '@'; }
  bool operator==(const Var& o) const { return name == o.name && sort == o.sort; }
  bool operator!=(const Var& o) const { return !(*this == o); }
  bool operator<(const Var& o) const {
    return name != o.name ? name < o.name : sort < o.sort;
  }
};

bool is_builtin_const_name(std::string_view name);
// null, error, -inf, +inf with their fixed sorts.
const std::vector<Var>& builtin_consts();
Var null_var();
Var error_var();
Var minus_inf_var();
Var plus_inf_var();

enum class Fn : uint8_t {
  rd,          // Mem x Addr -> Cell
  upd,         // Mem x Addr x Cell -> Mem
  mkcell,      // Elem x Ord x Array x Level -> Cell
  arr_rd,      // Array x Level -> Addr
  arr_upd,     // Array x Level x Addr -> Array
  getp,        // Mem x Addr x Addr x Level -> Path
  addr2set,    // Mem x Addr x Level -> Set
  path2set,    // Path -> Set
  rev,         // Path -> Path
  single_path, // Addr -> Path
  set_union,   // Set x Set -> Set
  set_diff,    // Set x Set -> Set
  singleton,   // Addr -> Set
  sel_data,    // Cell -> Elem
  sel_key,     // Cell -> Ord
  sel_arr,     // Cell -> Array
  sel_max,     // Cell -> Level
  level_succ,  // Level -> Level, (+ l 1)
};

const char* fn_name(Fn f);

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  enum class Kind : uint8_t { var, level_const, app };
  Kind kind = Kind::var;
  Var v;                      // kind == var
  Nat num;                    // kind == level_const
  Fn fn = Fn::rd;             // kind == app
  std::vector<TermPtr> args;  // kind == app

  static TermPtr mk_var(Var var);
  static TermPtr mk_const(Nat n);
  static TermPtr mk_app(Fn f, std::vector<TermPtr> args);

  bool is_var() const { return kind == Kind::var; }
  bool is_const() const { return kind == Kind::level_const; }
  bool is_app() const { return kind == Kind::app; }
  bool is_app(Fn f) const { return kind == Kind::app && fn == f; }
};

// Sort of a term; throws SortError if an application is ill-sorted.
Sort term_sort(const Term& t);
Sort term_sort(const TermPtr& t);

bool term_equal(const TermPtr& a, const TermPtr& b);
// All variables occurring in the term (with duplicates).
void collect_vars(const TermPtr& t, std::vector<Var>& out);

enum class Pred : uint8_t {
  eq,        // (= t1 t2), any matching sorts
  neq,       // (distinct t1 t2)
  less,      // (< l1 l2), levels
  ord_leq,   // (sub k1 k2), order on keys
  set_in,    // (in a s)
  reach,     // (reach m a1 a2 l p)
  ord_list,  // (ordlist m p)
  skiplist,  // (skiplist m s l a1 a2)
  append,    // (append p1 p2 p3)
};

// One literal: a predicate applied to terms, positive or negated. The parser
// admits nested terms; the normalizer reduces everything to the flat
// normalized kinds below.
struct Literal {
  Pred pred = Pred::eq;
  bool positive = true;
  std::vector<TermPtr> args;

  bool operator==(const Literal& o) const;
};

using Cube = std::vector<Literal>;

struct Formula {
  std::vector<Var> decls;   // declared + fresh variables, in declaration order
  std::vector<Cube> cubes;  // disjunction of conjunctions
};

// The flat literal shapes. The first 27 entries are the normalized kinds; the
// remainder are surface kinds that the parser admits and the normalizer
// eliminates (level_succ_eq survives normalization and is consumed by the
// level solver).
enum class LitKind : uint8_t {
  elem_neq,        // e1 != e2
  addr_neq,        // a1 != a2
  level_neq,       // l1 != l2
  addr_is_null,    // a = null
  cell_is_error,   // c = error
  cell_rd,         // c = rd(m, a)
  ord_neq,         // k1 != k2
  ord_leq,         // k1 sub k2
  mem_upd,         // m2 = upd(m1, a, c)
  cell_mkcell,     // c = mkcell(e, k, A, l)
  level_less,      // l1 < l2
  level_const_eq,  // l = q
  set_singleton,   // s = {a}
  set_union,       // s1 = s2 u s3
  set_diff,        // s1 = s2 \ s3
  array_rd,        // a = A[l]
  array_upd,       // B = A{l <- a}
  path_neq,        // p1 != p2
  path_singleton,  // p = [a]
  path_rev,        // p1 = rev(p2)
  path2set,        // s = path2set(p)
  append,          // append(p1,p2,p3)
  not_append,      // !append(p1,p2,p3)
  addr2set,        // s = addr2set(m,a,l)
  getp,            // p = getp(m,a1,a2,l)
  ord_list,        // ordList(m,p)
  skiplist,        // skiplist(m,s,l,a1,a2)

  level_succ_eq,   // l1 = l2 + 1  (level-solver literal)

  // surface kinds
  var_eq,          // x = y, same sort
  sel_data,        // e = c.data
  sel_key,         // k = c.key
  sel_arr,         // A = c.arr
  sel_max,         // l = c.max
  reach,           // reach(m,a1,a2,l,p)
  not_reach,
  not_ord_list,
  not_skiplist,
  set_in,          // a in s
  not_set_in,
  not_ord_leq,     // !(k1 sub k2)
  not_level_less,  // !(l1 < l2)
  var_neq,         // distinct x y on Set/Cell/Mem/Array (needs expansion)

  not_normal,      // anything else (nested terms, etc.)
};

bool litkind_is_normalized(LitKind k);

// Structural classification of a literal. Literals whose arguments are not
// plain variables (or a level constant where the kind allows one) classify as
// not_normal.
LitKind classify(const Literal& l);

std::string litkind_name(LitKind k);

// Sort-checked constructors for the flat literal kinds. Each throws SortError
// when handed wrong-sorted arguments.
namespace mk {
Literal elem_neq(const Var& e1, const Var& e2);
Literal addr_neq(const Var& a1, const Var& a2);
Literal level_neq(const Var& l1, const Var& l2);
Literal addr_is_null(const Var& a);
Literal cell_is_error(const Var& c);
Literal cell_rd(const Var& c, const Var& m, const Var& a);
Literal ord_neq(const Var& k1, const Var& k2);
Literal ord_leq(const Var& k1, const Var& k2);
Literal mem_upd(const Var& m2, const Var& m1, const Var& a, const Var& c);
Literal cell_mkcell(const Var& c, const Var& e, const Var& k, const Var& arr, const Var& l);
Literal level_less(const Var& l1, const Var& l2);
Literal level_const_eq(const Var& l, const Nat& q);
Literal set_singleton(const Var& s, const Var& a);
Literal set_union(const Var& s1, const Var& s2, const Var& s3);
Literal set_diff(const Var& s1, const Var& s2, const Var& s3);
Literal array_rd(const Var& a, const Var& arr, const Var& l);
Literal array_upd(const Var& b, const Var& a, const Var& l, const Var& at);
Literal path_neq(const Var& p1, const Var& p2);
Literal path_singleton(const Var& p, const Var& a);
Literal path_rev(const Var& p1, const Var& p2);
Literal path2set(const Var& s, const Var& p);
Literal append(const Var& p1, const Var& p2, const Var& p3);
Literal not_append(const Var& p1, const Var& p2, const Var& p3);
Literal addr2set(const Var& s, const Var& m, const Var& a, const Var& l);
Literal getp(const Var& p, const Var& m, const Var& a1, const Var& a2, const Var& l);
Literal ord_list(const Var& m, const Var& p);
Literal skiplist(const Var& m, const Var& s, const Var& l, const Var& a1, const Var& a2);
Literal level_succ_eq(const Var& l1, const Var& l2);
Literal var_eq(const Var& x, const Var& y);
Literal set_in(const Var& a, const Var& s);
}  // namespace mk

// All variables of a literal / cube / formula (deduplicated, sorted).
std::vector<Var> vars_of(const Literal& l);
std::vector<Var> vars_of(const Cube& c);
std::vector<Var> vars_of(const Formula& f);
std::vector<Var> level_vars_of(const Cube& c);

// Deterministic supply of fresh variables. Reserved prefix '@'; a supply never
// hands out a name that was reserved (all names already in the formula must be
// reserved before use).
class FreshSupply {
 public:
  void reserve(const std::string& name);
  void reserve_all(const Formula& f);
  void reserve_all(const Cube& c);
  Var fresh(Sort s, const std::string& stage);

 private:
  std::vector<std::string> taken_;
  bool is_taken(const std::string& n) const;
};

}  // namespace tsl
