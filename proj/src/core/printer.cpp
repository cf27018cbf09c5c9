#include "core/printer.hpp"

#include <sstream>

namespace tsl {

std::string print_term(const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::var:
      return t->v.name;
    case Term::Kind::level_const:
      return t->num.str();
    case Term::Kind::app: {
      if (t->fn == Fn::level_succ) return "(+ " + print_term(t->args[0]) + " 1)";
      std::string s = "(";
      s += fn_name(t->fn);
      for (const auto& a : t->args) {
        s += ' ';
        s += print_term(a);
      }
      return s + ")";
    }
  }
  return "?";
}

std::string print_literal(const Literal& l) {
  const char* head = nullptr;
  switch (l.pred) {
    case Pred::eq: head = "="; break;
    case Pred::neq: head = "distinct"; break;
    case Pred::less: head = "<"; break;
    case Pred::ord_leq: head = "sub"; break;
    case Pred::set_in: head = "in"; break;
    case Pred::reach: head = "reach"; break;
    case Pred::ord_list: head = "ordlist"; break;
    case Pred::skiplist: head = "skiplist"; break;
    case Pred::append: head = "append"; break;
  }
  std::string s = "(";
  s += head;
  for (const auto& a : l.args) {
    s += ' ';
    s += print_term(a);
  }
  s += ")";
  if (!l.positive) s = "(not " + s + ")";
  return s;
}

std::string print_cube_body(const Cube& c) {
  if (c.empty()) return "true";
  if (c.size() == 1) return print_literal(c[0]);
  std::string s = "(and";
  for (const auto& l : c) {
    s += ' ';
    s += print_literal(l);
  }
  return s + ")";
}

std::string print_formula(const Formula& f) {
  std::ostringstream out;
  for (const auto& v : f.decls)
    out << "(declare " << v.name << " " << sort_name(v.sort) << ")\n";
  if (f.cubes.empty()) {
    out << "false\n";
  } else if (f.cubes.size() == 1) {
    out << print_cube_body(f.cubes[0]) << "\n";
  } else {
    out << "(or";
    for (const auto& c : f.cubes) out << "\n  " << print_cube_body(c);
    out << ")\n";
  }
  return out.str();
}

}  // namespace tsl
