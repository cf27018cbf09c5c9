// S-expression front end for the formula file format.
#pragma once

#include <string>
#include <vector>

#include "core/ast.hpp"

namespace tsl {

struct ParseError : std::runtime_error {
  int line = 0;
  int col = 0;
  ParseError(int line, int col, const std::string& msg)
      : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                           std::to_string(col) + ": " + msg),
        line(line),
        col(col) {}
};

// Boolean structure over literals, as parsed. `to_dnf` turns it into a Formula.
struct FTree {
  enum class Kind : uint8_t { lit, conj, disj };
  Kind kind = Kind::conj;
  Literal lit;                 // kind == lit
  std::vector<FTree> kids;     // conj / disj
};

struct ParsedInput {
  std::vector<Var> decls;
  FTree tree;
};

// Parses declarations followed by one formula. Throws ParseError (syntax,
// unknown identifiers) or SortError (ill-sorted literals, with the offending
// literal named in the message).
ParsedInput parse_tree(const std::string& text);

// parse_tree followed by DNF conversion.
Formula parse_formula(const std::string& text);

}  // namespace tsl
