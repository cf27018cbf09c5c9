#include <map>

#include "core/parser.hpp"
#include "core/printer.hpp"
#include "doctest.h"
#include "normalize/normalize.hpp"
#include "normalize/sanitize.hpp"
#include "support/oracle.hpp"
#include "support/rewrite_check.hpp"

using namespace tsl;

namespace {

std::map<LitKind, int> kind_counts(const Cube& c) {
  std::map<LitKind, int> out;
  for (const Literal& l : c) out[classify(l)]++;
  return out;
}

FreshSupply supply_for(const Formula& f) {
  FreshSupply fs;
  fs.reserve_all(f);
  return fs;
}

}  // namespace

TEST_CASE("running example normalizes to the mkcell form") {
  Formula f = parse_formula(
      "(declare i Level)(declare heap Mem)(declare head Addr)(declare tail Addr)"
      "(declare A Array)(declare B Array)"
      "(and (= i 0) (= A (arr (rd heap head))) (= B (arrupd A i tail)))");
  FreshSupply fs = supply_for(f);
  auto cubes = normalize(f.cubes[0], fs);
  REQUIRE(cubes.size() == 1);
  const Cube& n = cubes[0];
  CHECK(is_normalized(n));
  auto counts = kind_counts(n);
  CHECK(counts[LitKind::level_const_eq] == 1);  // i = 0
  CHECK(counts[LitKind::cell_rd] == 1);         // c = rd(heap, head)
  CHECK(counts[LitKind::cell_mkcell] == 1);     // c = mkcell(e, k, A, l)
  CHECK(counts[LitKind::array_upd] == 1);       // B = A{i <- tail}
  CHECK(n.size() == 4);
  // the mkcell names the user array A and fresh e, k, l
  for (const Literal& l : n) {
    if (classify(l) != LitKind::cell_mkcell) continue;
    CHECK(l.args[1]->args[2]->v.name == "A");
    CHECK(l.args[1]->args[0]->v.is_fresh());
    CHECK(l.args[1]->args[3]->v.is_fresh());
  }
}

TEST_CASE("selector rewrite uses fresh mkcell") {
  Formula f = parse_formula(
      "(declare e Elem)(declare c Cell)(= e (data c))");
  FreshSupply fs = supply_for(f);
  auto cubes = normalize(f.cubes[0], fs);
  REQUIRE(cubes.size() == 1);
  REQUIRE(cubes[0].size() == 1);
  const Literal& l = cubes[0][0];
  CHECK(classify(l) == LitKind::cell_mkcell);
  CHECK(l.args[0]->v.name == "c");
  CHECK(l.args[1]->args[0]->v.name == "e");
}

TEST_CASE("trivial equality vanishes; contradictions empty the disjunction") {
  Formula f = parse_formula("(declare a Addr)(= a a)");
  FreshSupply fs = supply_for(f);
  auto cubes = normalize(f.cubes[0], fs);
  REQUIRE(cubes.size() == 1);
  CHECK(cubes[0].empty());

  Formula g = parse_formula("(declare a Addr)(and (= a null) (distinct a null))");
  FreshSupply fs2 = supply_for(g);
  CHECK(normalize(g.cubes[0], fs2).empty());
}

TEST_CASE("variable equalities are eliminated by substitution") {
  Formula f = parse_formula(
      "(declare a Addr)(declare b Addr)(declare s Set)"
      "(and (= a b) (in b s))");
  FreshSupply fs = supply_for(f);
  auto full = normalize_full(f.cubes[0], fs);
  REQUIRE(full.size() == 1);
  CHECK(is_normalized(full[0].cube));
  // b was replaced by a (lexicographically smaller)
  CHECK(full[0].subst.count(Var{"b", Sort::Addr}) == 1);
  for (const Literal& l : full[0].cube)
    for (const Var& v : vars_of(l)) CHECK(v.name != "b");
}

TEST_CASE("not-skiplist expands into six cubes") {
  Formula f = parse_formula(
      "(declare m Mem)(declare r Set)(declare l Level)"
      "(declare a1 Addr)(declare a2 Addr)"
      "(not (skiplist m r l a1 a2))");
  FreshSupply fs = supply_for(f);
  auto cubes = normalize(f.cubes[0], fs);
  REQUIRE(cubes.size() == 6);
  for (const Cube& c : cubes) CHECK(is_normalized(c));
}

TEST_CASE("not-ordlist expands into one cube") {
  Formula f = parse_formula(
      "(declare m Mem)(declare p Path)(not (ordlist m p))");
  FreshSupply fs = supply_for(f);
  auto cubes = normalize(f.cubes[0], fs);
  REQUIRE(cubes.size() == 1);
  CHECK(is_normalized(cubes[0]));
  auto counts = kind_counts(cubes[0]);
  CHECK(counts[LitKind::cell_mkcell] == 2);
  CHECK(counts[LitKind::ord_leq] == 1);
  CHECK(counts[LitKind::ord_neq] == 1);
  CHECK(counts[LitKind::level_const_eq] == 1);  // the level-zero witness
}

TEST_CASE("sanitize adds one fresh successor per updated level") {
  Formula f = parse_formula(
      "(declare i Level)(declare heap Mem)(declare head Addr)(declare tail Addr)"
      "(declare A Array)(declare B Array)(declare c Cell)(declare e Elem)"
      "(declare k Ord)(declare l Level)"
      "(and (= i 0) (= c (rd heap head)) (= c (mkcell e k A l)) (= l 3)"
      " (= B (arrupd A i tail)))");
  FreshSupply fs = supply_for(f);
  auto cubes = normalize(f.cubes[0], fs);
  REQUIRE(cubes.size() == 1);
  Cube s = sanitize(cubes[0], fs);
  CHECK(s.size() == cubes[0].size() + 1);
  const Literal& added = s.back();
  CHECK(classify(added) == LitKind::level_succ_eq);
  CHECK(added.args[0]->v.name == "@l_new1");
  CHECK(added.args[1]->args[0]->v.name == "i");
  CHECK(is_sanitized(s));
  // idempotent
  Cube s2 = sanitize(s, fs);
  CHECK(s2.size() == s.size());
}

TEST_CASE("sanitize keeps an existing successor literal") {
  Formula f = parse_formula(
      "(declare A Array)(declare B Array)(declare i Level)(declare j Level)"
      "(declare a Addr)"
      "(and (= j (+ i 1)) (= B (arrupd A i a)))");
  FreshSupply fs = supply_for(f);
  auto cubes = normalize(f.cubes[0], fs);
  REQUIRE(cubes.size() == 1);
  Cube s = sanitize(cubes[0], fs);
  CHECK(s.size() == cubes[0].size());
}

TEST_CASE("normalize output stays inside the normalized kinds on a corpus") {
  const char* corpus[] = {
      "(declare m Mem)(declare a1 Addr)(declare a2 Addr)(declare l Level)"
      "(declare p Path)(reach m a1 a2 l p)",
      "(declare m Mem)(declare a1 Addr)(declare a2 Addr)(declare l Level)"
      "(declare p Path)(not (reach m a1 a2 l p))",
      "(declare c1 Cell)(declare c2 Cell)(distinct c1 c2)",
      "(declare m1 Mem)(declare m2 Mem)(distinct m1 m2)",
      "(declare A1 Array)(declare A2 Array)(distinct A1 A2)",
      "(declare s1 Set)(declare s2 Set)(distinct s1 s2)",
      "(declare k1 Ord)(declare k2 Ord)(not (sub k1 k2))",
      "(declare l1 Level)(declare l2 Level)(not (< l1 l2))",
      "(declare a Addr)(declare s Set)(not (in a s))",
      "(declare c Cell)(declare l Level)(= l (max c))",
      "(declare m Mem)(declare s Set)(declare l Level)(declare a1 Addr)"
      "(declare a2 Addr)(not (skiplist m s l a1 a2))",
  };
  for (const char* src : corpus) {
    Formula f = parse_formula(src);
    FreshSupply fs = supply_for(f);
    for (const Cube& c : f.cubes)
      for (const Cube& n : normalize(c, fs)) CHECK(is_normalized(n));
  }
}

TEST_CASE("equisatisfiability before/after normalize and sanitize on a corpus") {
  oracle::Bounds b;
  b.addrs = 3;
  b.levels = 2;
  b.ords = 3;
  const char* corpus[] = {
      "(declare a Addr)(declare s Set)(and (in a s) (distinct a null))",
      "(declare k1 Ord)(declare k2 Ord)(and (not (sub k1 k2)) (sub k2 k1))",
      "(declare k1 Ord)(declare k2 Ord)(and (not (sub k1 k2)) (not (sub k2 k1)))",
      "(declare m Mem)(declare a Addr)(declare c Cell)"
      "(and (= c (rd m a)) (= c error) (distinct a null))",
      "(declare A Array)(declare B Array)(declare i Level)(declare a Addr)"
      "(and (= B (arrupd A i a)) (distinct A B))",
      "(declare m Mem)(declare p Path)(declare a Addr)"
      "(and (= p (singlepath a)) (not (ordlist m p)))",
      "(declare m Mem)(declare a1 Addr)(declare a2 Addr)(declare l Level)"
      "(declare p Path)(and (reach m a1 a2 l p) (distinct a1 a2))",
  };
  for (const char* src : corpus) {
    Formula f = parse_formula(src);
    FreshSupply fs = supply_for(f);
    for (const Cube& c : f.cubes) {
      bool before = oracle::solve(c, b).has_value();
      bool after = false, after_sanit = false;
      for (const Cube& n : normalize(c, fs)) {
        if (oracle::solve(n, b)) after = true;
        if (oracle::solve(sanitize(n, fs), b)) after_sanit = true;
      }
      CHECK(before == after);
      CHECK(after == after_sanit);
    }
  }
}

TEST_CASE("rewrite equivalences at reduced bounds") {
  oracle::Bounds small;
  small.addrs = 2;
  small.levels = 2;
  small.ords = 2;

  auto ord = oracle::check_not_ordlist(small);
  CHECK(ord.mismatches == 0);
  CHECK(ord.models > 0);

  for (int i = 1; i <= 6; ++i) {
    auto st = oracle::check_nsl(i, small);
    INFO("NSL cube ", i);
    CHECK(st.mismatches == 0);
  }

  auto joint = oracle::check_not_skiplist_joint(small);
  CHECK(joint.mismatches == 0);

  auto reach = oracle::check_reach_rewrites(small);
  CHECK(reach.mismatches == 0);

  auto rest = oracle::check_small_rewrites(small);
  CHECK(rest.mismatches == 0);
}
