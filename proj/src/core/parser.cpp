#include "core/parser.hpp"

#include <cctype>
#include <map>
#include <sstream>

#include "normalize/dnf.hpp"

namespace tsl {

namespace {

struct SExpr {
  bool is_atom = false;
  std::string atom;
  std::vector<SExpr> kids;
  int line = 1;
  int col = 1;

  std::string to_string() const {
    if (is_atom) return atom;
    std::string s = "(";
    for (size_t i = 0; i < kids.size(); ++i) {
      if (i) s += ' ';
      s += kids[i].to_string();
    }
    return s + ")";
  }
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {}

  struct Tok {
    enum class Kind { lparen, rparen, atom, eof } kind;
    std::string text;
    int line, col;
  };

  Tok next() {
    skip_ws();
    int l = line_, c = col_;
    if (pos_ >= text_.size()) return {Tok::Kind::eof, "", l, c};
    char ch = text_[pos_];
    if (ch == '(') {
      advance();
      return {Tok::Kind::lparen, "(", l, c};
    }
    if (ch == ')') {
      advance();
      return {Tok::Kind::rparen, ")", l, c};
    }
    std::string atom;
    while (pos_ < text_.size() && !std::isspace((unsigned char)text_[pos_]) &&
           text_[pos_] != '(' && text_[pos_] != ')' && text_[pos_] != ';') {
      atom += text_[pos_];
      advance();
    }
    if (atom.empty())
      throw ParseError(l, c, "unexpected character '" + std::string(1, ch) + "'");
    return {Tok::Kind::atom, atom, l, c};
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size()) {
      char ch = text_[pos_];
      if (ch == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace((unsigned char)ch)) {
        advance();
      } else {
        break;
      }
    }
  }
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  const std::string& text_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : lex_(text) { tok_ = lex_.next(); }

  ParsedInput run() {
    ParsedInput out;
    for (const Var& v : builtin_consts()) declare(v);
    // declaration header
    while (true) {
      if (tok_.kind == Lexer::Tok::Kind::eof)
        throw ParseError(tok_.line, tok_.col, "expected a formula");
      if (tok_.kind != Lexer::Tok::Kind::lparen) break;
      SExpr e = parse_sexpr();
      if (!e.is_atom && !e.kids.empty() && e.kids[0].is_atom &&
          e.kids[0].atom == "declare") {
        handle_declare(e);
        continue;
      }
      out.tree = to_ftree(e);
      expect_eof();
      out.decls = user_decls_;
      return out;
    }
    // formula may also be a bare atom (true / false)
    SExpr e = parse_sexpr();
    out.tree = to_ftree(e);
    expect_eof();
    out.decls = user_decls_;
    return out;
  }

 private:
  Lexer lex_;
  Lexer::Tok tok_;
  std::map<std::string, Var> scope_;
  std::vector<Var> user_decls_;
  uint64_t sugar_counter_ = 0;

  void declare(const Var& v) { scope_[v.name] = v; }

  void expect_eof() {
    if (tok_.kind != Lexer::Tok::Kind::eof)
      throw ParseError(tok_.line, tok_.col, "trailing content after formula");
  }

  SExpr parse_sexpr() {
    if (tok_.kind == Lexer::Tok::Kind::atom) {
      SExpr e;
      e.is_atom = true;
      e.atom = tok_.text;
      e.line = tok_.line;
      e.col = tok_.col;
      tok_ = lex_.next();
      return e;
    }
    if (tok_.kind != Lexer::Tok::Kind::lparen)
      throw ParseError(tok_.line, tok_.col, "expected '('");
    SExpr e;
    e.line = tok_.line;
    e.col = tok_.col;
    tok_ = lex_.next();
    while (tok_.kind != Lexer::Tok::Kind::rparen) {
      if (tok_.kind == Lexer::Tok::Kind::eof)
        throw ParseError(tok_.line, tok_.col, "unbalanced '('");
      e.kids.push_back(parse_sexpr());
    }
    tok_ = lex_.next();
    return e;
  }

  void handle_declare(const SExpr& e) {
    if (e.kids.size() != 3 || !e.kids[1].is_atom || !e.kids[2].is_atom)
      throw ParseError(e.line, e.col, "expected (declare <name> <Sort>)");
    const std::string& name = e.kids[1].atom;
    if (is_builtin_const_name(name))
      throw ParseError(e.kids[1].line, e.kids[1].col,
                       "'" + name + "' is a builtin constant");
    if (scope_.count(name))
      throw ParseError(e.kids[1].line, e.kids[1].col,
                       "duplicate declaration of '" + name + "'");
    auto s = sort_from_name(e.kids[2].atom);
    if (!s)
      throw ParseError(e.kids[2].line, e.kids[2].col,
                       "unknown sort '" + e.kids[2].atom + "'");
    Var v{name, *s, name[0] == '@' ? std::string("parsed") : std::string()};
    declare(v);
    user_decls_.push_back(v);
  }

  static bool is_integer(const std::string& a) {
    if (a.empty()) return false;
    for (char c : a)
      if (!std::isdigit((unsigned char)c)) return false;
    return true;
  }

  TermPtr parse_term(const SExpr& e) {
    if (e.is_atom) {
      if (is_integer(e.atom)) return Term::mk_const(Nat(e.atom));
      auto it = scope_.find(e.atom);
      if (it == scope_.end())
        throw ParseError(e.line, e.col, "undeclared identifier '" + e.atom + "'");
      return Term::mk_var(it->second);
    }
    if (e.kids.empty() || !e.kids[0].is_atom)
      throw ParseError(e.line, e.col, "expected a function application");
    const std::string& head = e.kids[0].atom;
    static const std::map<std::string, Fn> fns = {
        {"rd", Fn::rd},           {"upd", Fn::upd},
        {"mkcell", Fn::mkcell},   {"arrrd", Fn::arr_rd},
        {"arrupd", Fn::arr_upd},  {"getp", Fn::getp},
        {"addr2set", Fn::addr2set}, {"path2set", Fn::path2set},
        {"rev", Fn::rev},         {"singlepath", Fn::single_path},
        {"union", Fn::set_union}, {"setdiff", Fn::set_diff},
        {"singleton", Fn::singleton}, {"data", Fn::sel_data},
        {"key", Fn::sel_key},     {"arr", Fn::sel_arr},
        {"max", Fn::sel_max},
    };
    if (head == "+") {
      if (e.kids.size() != 3 || !e.kids[2].is_atom || e.kids[2].atom != "1")
        throw ParseError(e.line, e.col, "expected (+ <level> 1)");
      return make_app(e, Fn::level_succ, {parse_term(e.kids[1])});
    }
    auto it = fns.find(head);
    if (it == fns.end())
      throw ParseError(e.kids[0].line, e.kids[0].col,
                       "unknown function '" + head + "'");
    std::vector<TermPtr> args;
    for (size_t i = 1; i < e.kids.size(); ++i) args.push_back(parse_term(e.kids[i]));
    return make_app(e, it->second, std::move(args));
  }

  TermPtr make_app(const SExpr& e, Fn f, std::vector<TermPtr> args) {
    try {
      return Term::mk_app(f, std::move(args));
    } catch (const SortError& err) {
      throw SortError(std::string(err.what()) + " in " + e.to_string() + " at " +
                      std::to_string(e.line) + ":" + std::to_string(e.col));
    }
  }

  Literal parse_literal(const SExpr& e, bool positive) {
    if (e.is_atom)
      throw ParseError(e.line, e.col, "expected a literal, got '" + e.atom + "'");
    if (e.kids.empty() || !e.kids[0].is_atom)
      throw ParseError(e.line, e.col, "expected a literal");
    const std::string& head = e.kids[0].atom;

    auto args = [&](size_t n) {
      if (e.kids.size() != n + 1)
        throw ParseError(e.line, e.col, "'" + head + "' expects " +
                                            std::to_string(n) + " arguments");
      std::vector<TermPtr> out;
      for (size_t i = 1; i <= n; ++i) out.push_back(parse_term(e.kids[i]));
      return out;
    };
    auto check = [&](Literal l) {
      try {
        for (const auto& t : l.args) term_sort(t);
        check_literal_sorts(l);
      } catch (const SortError& err) {
        throw SortError(std::string(err.what()) + " in literal " + e.to_string() +
                        " at " + std::to_string(e.line) + ":" + std::to_string(e.col));
      }
      return l;
    };

    if (head == "not") {
      if (e.kids.size() != 2)
        throw ParseError(e.line, e.col, "'not' expects one literal");
      return parse_literal(e.kids[1], !positive);
    }
    if (head == "=") {
      auto a = args(2);
      // a negated equality is a disequality literal
      return check(Literal{positive ? Pred::eq : Pred::neq, true, std::move(a)});
    }
    if (head == "distinct") {
      auto a = args(2);
      return check(Literal{positive ? Pred::neq : Pred::eq, true, std::move(a)});
    }
    if (head == "<") return check(Literal{Pred::less, positive, args(2)});
    if (head == "sub") return check(Literal{Pred::ord_leq, positive, args(2)});
    if (head == "in") return check(Literal{Pred::set_in, positive, args(2)});
    if (head == "reach") return check(Literal{Pred::reach, positive, args(5)});
    if (head == "ordlist") return check(Literal{Pred::ord_list, positive, args(2)});
    if (head == "append") return check(Literal{Pred::append, positive, args(3)});
    if (head == "skiplist") {
      if (e.kids.size() == 5) {
        // 4-argument sugar: introduce a fresh max-level variable
        std::string name;
        do {
          name = "@l_sl" + std::to_string(++sugar_counter_);
        } while (scope_.count(name));
        Var lv{name, Sort::Level, "parse"};
        declare(lv);
        user_decls_.push_back(lv);
        std::vector<TermPtr> a = {parse_term(e.kids[1]), parse_term(e.kids[2]),
                                  Term::mk_var(lv), parse_term(e.kids[3]),
                                  parse_term(e.kids[4])};
        return check(Literal{Pred::skiplist, positive, std::move(a)});
      }
      return check(Literal{Pred::skiplist, positive, args(5)});
    }
    throw ParseError(e.kids[0].line, e.kids[0].col,
                     "unknown literal head '" + head + "'");
  }

  // Per-predicate argument sort checks (term_sort covers applications).
  void check_literal_sorts(const Literal& l) {
    auto s = [&](size_t i) { return term_sort(l.args[i]); };
    switch (l.pred) {
      case Pred::eq:
      case Pred::neq:
        if (s(0) != s(1))
          throw SortError(std::string("equality between sorts ") +
                          sort_name(s(0)) + " and " + sort_name(s(1)));
        break;
      case Pred::less:
        if (s(0) != Sort::Level || s(1) != Sort::Level)
          throw SortError("'<' expects Level arguments");
        break;
      case Pred::ord_leq:
        if (s(0) != Sort::Ord || s(1) != Sort::Ord)
          throw SortError("'sub' expects Ord arguments");
        break;
      case Pred::set_in:
        if (s(0) != Sort::Addr || s(1) != Sort::Set)
          throw SortError("'in' expects Addr and Set arguments");
        break;
      case Pred::reach: {
        Sort want[5] = {Sort::Mem, Sort::Addr, Sort::Addr, Sort::Level, Sort::Path};
        for (int i = 0; i < 5; ++i)
          if (s(i) != want[i]) throw SortError("'reach' argument sorts");
        break;
      }
      case Pred::ord_list:
        if (s(0) != Sort::Mem || s(1) != Sort::Path)
          throw SortError("'ordlist' expects Mem and Path arguments");
        break;
      case Pred::skiplist: {
        Sort want[5] = {Sort::Mem, Sort::Set, Sort::Level, Sort::Addr, Sort::Addr};
        for (int i = 0; i < 5; ++i)
          if (s(i) != want[i]) throw SortError("'skiplist' argument sorts");
        break;
      }
      case Pred::append:
        for (int i = 0; i < 3; ++i)
          if (s(i) != Sort::Path) throw SortError("'append' expects Path arguments");
        break;
    }
  }

  FTree to_ftree(const SExpr& e) {
    if (e.is_atom) {
      if (e.atom == "true") return FTree{FTree::Kind::conj, {}, {}};
      if (e.atom == "false") return FTree{FTree::Kind::disj, {}, {}};
      throw ParseError(e.line, e.col, "expected a formula, got '" + e.atom + "'");
    }
    if (!e.kids.empty() && e.kids[0].is_atom) {
      const std::string& head = e.kids[0].atom;
      if (head == "and" || head == "or") {
        FTree t;
        t.kind = head == "and" ? FTree::Kind::conj : FTree::Kind::disj;
        for (size_t i = 1; i < e.kids.size(); ++i)
          t.kids.push_back(to_ftree(e.kids[i]));
        return t;
      }
    }
    FTree t;
    t.kind = FTree::Kind::lit;
    t.lit = parse_literal(e, true);
    return t;
  }
};

}  // namespace

ParsedInput parse_tree(const std::string& text) { return Parser(text).run(); }

Formula parse_formula(const std::string& text) {
  ParsedInput in = parse_tree(text);
  Formula f;
  f.decls = in.decls;
  f.cubes = to_dnf(in.tree);
  return f;
}

}  // namespace tsl
