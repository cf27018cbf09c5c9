#include <string>

#include "core/ast.hpp"
#include "core/parser.hpp"
#include "core/printer.hpp"
#include "doctest.h"

using namespace tsl;

namespace {

const char* kPsiDecls =
    "(declare i Level)\n"
    "(declare heap Mem)\n"
    "(declare head Addr)\n"
    "(declare tail Addr)\n"
    "(declare A Array)\n"
    "(declare B Array)\n";

}  // namespace

TEST_CASE("parse running example surface formula") {
  std::string src = std::string(kPsiDecls) +
                    "(and (= i 0) (= A (arr (rd heap head))) (= B (arrupd A i tail)))";
  Formula f = parse_formula(src);
  REQUIRE(f.cubes.size() == 1);
  CHECK(f.cubes[0].size() == 3);
  CHECK(classify(f.cubes[0][0]) == LitKind::level_const_eq);
  CHECK(classify(f.cubes[0][1]) == LitKind::not_normal);  // nested selector
  CHECK(classify(f.cubes[0][2]) == LitKind::array_upd);
}

TEST_CASE("trivial equality is kept by the parser") {
  Formula f = parse_formula("(declare a Addr)\n(= a a)");
  REQUIRE(f.cubes.size() == 1);
  REQUIRE(f.cubes[0].size() == 1);
  CHECK(classify(f.cubes[0][0]) == LitKind::var_eq);
}

TEST_CASE("disjunction splits cubes") {
  Formula f = parse_formula("(declare l Level)\n(or (= l 0) (= l 1))");
  CHECK(f.cubes.size() == 2);
}

TEST_CASE("nested or under and distributes") {
  Formula f = parse_formula(
      "(declare a Addr)(declare b Addr)(declare c Addr)"
      "(and (or (= a null) (= b null)) (= c null))");
  REQUIRE(f.cubes.size() == 2);
  CHECK(f.cubes[0].size() == 2);
  CHECK(f.cubes[1].size() == 2);
}

TEST_CASE("true and false atoms") {
  Formula t = parse_formula("true");
  REQUIRE(t.cubes.size() == 1);
  CHECK(t.cubes[0].empty());
  Formula f = parse_formula("false");
  CHECK(f.cubes.empty());
}

TEST_CASE("print round-trips parse") {
  std::string src = std::string(kPsiDecls) +
                    "(declare c Cell)(declare e Elem)(declare k Ord)(declare l Level)"
                    "(and (= i 0) (= c (rd heap head)) (= c (mkcell e k A l)) (= l 3)"
                    " (= B (arrupd A i tail)))";
  Formula f = parse_formula(src);
  std::string printed = print_formula(f);
  Formula again = parse_formula(printed);
  REQUIRE(again.cubes.size() == f.cubes.size());
  for (size_t i = 0; i < f.cubes.size(); ++i) {
    REQUIRE(again.cubes[i].size() == f.cubes[i].size());
    for (size_t j = 0; j < f.cubes[i].size(); ++j)
      CHECK(again.cubes[i][j] == f.cubes[i][j]);
  }
  // canonical printing is a fixpoint
  CHECK(print_formula(again) == printed);
}

TEST_CASE("fresh variables print verbatim and round-trip") {
  Formula f = parse_formula(
      "(declare @l_new1 Level)(declare i Level)(= @l_new1 (+ i 1))");
  REQUIRE(f.cubes.size() == 1);
  CHECK(classify(f.cubes[0][0]) == LitKind::level_succ_eq);
  std::string printed = print_formula(f);
  CHECK(printed.find("@l_new1") != std::string::npos);
  Formula again = parse_formula(printed);
  CHECK(again.cubes[0][0] == f.cubes[0][0]);
}

TEST_CASE("empty cube prints as true") {
  Formula f;
  f.cubes.push_back({});
  CHECK(print_formula(f) == "true\n");
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_formula("(and (= a"), ParseError);
  CHECK_THROWS_AS(parse_formula("(= x y)"), ParseError);  // undeclared
  CHECK_THROWS_AS(parse_formula("(declare a Addr)(declare a Addr)(= a a)"),
                  ParseError);
  CHECK_THROWS_AS(parse_formula("(declare a Foo)(= a a)"), ParseError);
}

TEST_CASE("sort errors name the literal") {
  try {
    parse_formula("(declare a Addr)(declare k Ord)(= a k)");
    FAIL("expected SortError");
  } catch (const SortError& e) {
    CHECK(std::string(e.what()).find("(= a k)") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_formula("(declare m Mem)(declare p Path)(ordlist p m)"),
                  SortError);
}

TEST_CASE("4-argument skiplist sugar introduces a level variable") {
  Formula f = parse_formula(
      "(declare m Mem)(declare s Set)(declare a1 Addr)(declare a2 Addr)"
      "(skiplist m s a1 a2)");
  REQUIRE(f.cubes.size() == 1);
  const Literal& l = f.cubes[0][0];
  REQUIRE(l.args.size() == 5);
  CHECK(l.args[2]->is_var());
  CHECK(l.args[2]->v.sort == Sort::Level);
  CHECK(l.args[2]->v.is_fresh());
  CHECK(classify(l) == LitKind::skiplist);
}

TEST_CASE("negations") {
  Formula f = parse_formula(
      "(declare m Mem)(declare p Path)(declare k1 Ord)(declare k2 Ord)"
      "(and (not (ordlist m p)) (not (sub k1 k2)) (not (not (ordlist m p))))");
  CHECK(classify(f.cubes[0][0]) == LitKind::not_ord_list);
  CHECK(classify(f.cubes[0][1]) == LitKind::not_ord_leq);
  CHECK(classify(f.cubes[0][2]) == LitKind::ord_list);
}

TEST_CASE("every literal constructor rejects wrong sorts") {
  Var a{"a", Sort::Addr}, b{"b", Sort::Addr};
  Var e{"e", Sort::Elem}, e2{"e2", Sort::Elem};
  Var k{"k", Sort::Ord}, k2{"k2", Sort::Ord};
  Var l{"l", Sort::Level}, l2{"l2", Sort::Level};
  Var A{"A", Sort::Array}, B{"B", Sort::Array};
  Var c{"c", Sort::Cell};
  Var m{"m", Sort::Mem}, m2{"m2", Sort::Mem};
  Var p{"p", Sort::Path}, p2{"p2", Sort::Path}, p3{"p3", Sort::Path};
  Var s{"s", Sort::Set}, s2{"s2", Sort::Set}, s3{"s3", Sort::Set};

  // positive construction, then a wrong-sorted variant per kind
  CHECK(classify(mk::elem_neq(e, e2)) == LitKind::elem_neq);
  CHECK_THROWS_AS(mk::elem_neq(e, a), SortError);
  CHECK(classify(mk::addr_neq(a, b)) == LitKind::addr_neq);
  CHECK_THROWS_AS(mk::addr_neq(a, e), SortError);
  CHECK(classify(mk::level_neq(l, l2)) == LitKind::level_neq);
  CHECK_THROWS_AS(mk::level_neq(l, k), SortError);
  CHECK(classify(mk::addr_is_null(a)) == LitKind::addr_is_null);
  CHECK_THROWS_AS(mk::addr_is_null(c), SortError);
  CHECK(classify(mk::cell_is_error(c)) == LitKind::cell_is_error);
  CHECK_THROWS_AS(mk::cell_is_error(a), SortError);
  CHECK(classify(mk::cell_rd(c, m, a)) == LitKind::cell_rd);
  CHECK_THROWS_AS(mk::cell_rd(c, m, e), SortError);
  CHECK(classify(mk::ord_neq(k, k2)) == LitKind::ord_neq);
  CHECK_THROWS_AS(mk::ord_neq(k, l), SortError);
  CHECK(classify(mk::ord_leq(k, k2)) == LitKind::ord_leq);
  CHECK_THROWS_AS(mk::ord_leq(l, k), SortError);
  CHECK(classify(mk::mem_upd(m2, m, a, c)) == LitKind::mem_upd);
  CHECK_THROWS_AS(mk::mem_upd(m2, m, a, a), SortError);
  CHECK(classify(mk::cell_mkcell(c, e, k, A, l)) == LitKind::cell_mkcell);
  CHECK_THROWS_AS(mk::cell_mkcell(c, e, k, A, k), SortError);
  CHECK(classify(mk::level_less(l, l2)) == LitKind::level_less);
  CHECK_THROWS_AS(mk::level_less(k, l), SortError);
  CHECK(classify(mk::level_const_eq(l, Nat(3))) == LitKind::level_const_eq);
  CHECK_THROWS_AS(mk::level_const_eq(a, Nat(3)), SortError);
  CHECK(classify(mk::set_singleton(s, a)) == LitKind::set_singleton);
  CHECK_THROWS_AS(mk::set_singleton(s, s2), SortError);
  CHECK(classify(mk::set_union(s, s2, s3)) == LitKind::set_union);
  CHECK_THROWS_AS(mk::set_union(s, s2, a), SortError);
  CHECK(classify(mk::set_diff(s, s2, s3)) == LitKind::set_diff);
  CHECK_THROWS_AS(mk::set_diff(s, a, s3), SortError);
  CHECK(classify(mk::array_rd(a, A, l)) == LitKind::array_rd);
  CHECK_THROWS_AS(mk::array_rd(a, A, a), SortError);
  CHECK(classify(mk::array_upd(B, A, l, a)) == LitKind::array_upd);
  CHECK_THROWS_AS(mk::array_upd(B, A, l, l), SortError);
  CHECK(classify(mk::path_neq(p, p2)) == LitKind::path_neq);
  CHECK_THROWS_AS(mk::path_neq(p, s), SortError);
  CHECK(classify(mk::path_singleton(p, a)) == LitKind::path_singleton);
  CHECK_THROWS_AS(mk::path_singleton(p, p2), SortError);
  CHECK(classify(mk::path_rev(p, p2)) == LitKind::path_rev);
  CHECK_THROWS_AS(mk::path_rev(p, a), SortError);
  CHECK(classify(mk::path2set(s, p)) == LitKind::path2set);
  CHECK_THROWS_AS(mk::path2set(p, p2), SortError);
  CHECK(classify(mk::append(p, p2, p3)) == LitKind::append);
  CHECK_THROWS_AS(mk::append(p, p2, s), SortError);
  CHECK(classify(mk::not_append(p, p2, p3)) == LitKind::not_append);
  CHECK_THROWS_AS(mk::not_append(s, p2, p3), SortError);
  CHECK(classify(mk::addr2set(s, m, a, l)) == LitKind::addr2set);
  CHECK_THROWS_AS(mk::addr2set(s, m, a, a), SortError);
  CHECK(classify(mk::getp(p, m, a, b, l)) == LitKind::getp);
  CHECK_THROWS_AS(mk::getp(p, m, a, b, k), SortError);
  CHECK(classify(mk::ord_list(m, p)) == LitKind::ord_list);
  CHECK_THROWS_AS(mk::ord_list(p, m), SortError);
  CHECK(classify(mk::skiplist(m, s, l, a, b)) == LitKind::skiplist);
  CHECK_THROWS_AS(mk::skiplist(m, s, k, a, b), SortError);
  CHECK(classify(mk::level_succ_eq(l, l2)) == LitKind::level_succ_eq);
  CHECK_THROWS_AS(mk::level_succ_eq(l, a), SortError);
  CHECK(classify(mk::var_eq(a, b)) == LitKind::var_eq);
  CHECK_THROWS_AS(mk::var_eq(a, e), SortError);
  CHECK(classify(mk::set_in(a, s)) == LitKind::set_in);
  CHECK_THROWS_AS(mk::set_in(s, s2), SortError);
}

TEST_CASE("fresh supply is deterministic and collision free") {
  FreshSupply fs;
  fs.reserve("@l_new1");
  Var v1 = fs.fresh(Sort::Level, "sanitize");
  Var v2 = fs.fresh(Sort::Level, "sanitize");
  CHECK(v1.name == "@l_new2");  // @l_new1 was taken
  CHECK(v2.name == "@l_new3");
  FreshSupply fs2;
  CHECK(fs2.fresh(Sort::Level, "sanitize").name == "@l_new1");
  CHECK(fs2.fresh(Sort::Ord, "normalize").name == "@k1");
  CHECK(fs2.fresh(Sort::Ord, "normalize").name == "@k2");
  CHECK(fs2.fresh(Sort::Array, "normalize").name == "@A1");
}

TEST_CASE("level constants are arbitrary precision") {
  Formula f = parse_formula("(declare l Level)(= l 123456789012345678901234567890)");
  REQUIRE(f.cubes.size() == 1);
  const Literal& l = f.cubes[0][0];
  CHECK(l.args[1]->num == Nat("123456789012345678901234567890"));
  CHECK(print_literal(l) == "(= l 123456789012345678901234567890)");
}
