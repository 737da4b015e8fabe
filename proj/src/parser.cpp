#include "decoreq/parser.hpp"

#include <cctype>
#include <set>
#include <sstream>

#include "decoreq/derived.hpp"

namespace decoreq {

namespace {

struct Token {
  enum Type { Ident, Symbol, End } type = End;
  std::string text;
  int line = 1, col = 1;
};

class Lexer {
public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return cur_; }

  Token next() {
    Token t = cur_;
    advance();
    return t;
  }

  [[noreturn]] void error(const std::string& msg) const {
    std::ostringstream os;
    os << msg << " at " << cur_.line << ":" << cur_.col;
    if (cur_.type != Token::End) os << " (near '" << cur_.text << "')";
    fail(ErrorKind::ParseError, os.str());
  }

private:
  void advance() {
    skip_space();
    cur_.line = line_;
    cur_.col = col_;
    if (pos_ >= text_.size()) {
      cur_.type = Token::End;
      cur_.text.clear();
      return;
    }
    char c = text_[pos_];
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        bump();
      cur_.type = Token::Ident;
      cur_.text = text_.substr(start, pos_ - start);
      return;
    }
    if (pos_ + 1 < text_.size() && c == '=' && text_[pos_ + 1] == '=') {
      bump();
      bump();
      cur_.type = Token::Symbol;
      cur_.text = "==";
      return;
    }
    static const std::string singles = "[](){},*:~";
    if (singles.find(c) != std::string::npos) {
      bump();
      cur_.type = Token::Symbol;
      cur_.text = std::string(1, c);
      return;
    }
    std::ostringstream os;
    os << "unexpected character '" << c << "' at " << line_ << ":" << col_;
    fail(ErrorKind::ParseError, os.str());
  }

  void skip_space() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#' || c == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') bump();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        bump();
      } else {
        break;
      }
    }
  }

  void bump() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  Token cur_;
};

class Parser {
public:
  Parser(const std::string& text, const MemorySignature& sig) : lex_(text), sig_(sig) {}

  ObjType type_all() {
    ObjType t = type();
    expect_end();
    return t;
  }

  Term term_all() {
    Term t = term();
    expect_end();
    return t;
  }

  Equation equation_all() {
    Term lhs = term();
    Token t = lex_.next();
    EqMode mode;
    if (t.type == Token::Symbol && t.text == "==") {
      mode = EqMode::Strong;
    } else if (t.type == Token::Symbol && t.text == "~") {
      mode = EqMode::Weak;
    } else {
      lex_.error("expected '==' or '~' between equation sides");
    }
    Term rhs = term();
    expect_end();
    return mk_equation(lhs, rhs, mode); // TypeMismatch when not parallel
  }

  // type := atom ('*' atom)*, left associative
  ObjType type() {
    ObjType t = type_atom();
    while (is_symbol("*")) {
      lex_.next();
      t = prod_ty(t, type_atom());
    }
    return t;
  }

  // term := atom ('o' atom)*, left associative
  Term term() {
    Term t = term_atom();
    while (is_ident("o")) {
      Token op = lex_.next();
      Term rhs = term_atom();
      try {
        t = mk_comp(t, rhs);
      } catch (const Error& e) {
        rethrow_at(e, op);
      }
    }
    return t;
  }

private:
  Lexer lex_;
  const MemorySignature& sig_;

  // Keeps the original error kind (TypeMismatch, UnknownLocation, ...) and
  // adds the source position.
  [[noreturn]] static void rethrow_at(const Error& e, const Token& tok) {
    fail(e.kind(), e.message() + " (at " + std::to_string(tok.line) + ":" +
                       std::to_string(tok.col) + ")");
  }

  bool is_symbol(const std::string& s) const {
    return lex_.peek().type == Token::Symbol && lex_.peek().text == s;
  }

  bool is_ident(const std::string& s) const {
    return lex_.peek().type == Token::Ident && lex_.peek().text == s;
  }

  void expect_symbol(const std::string& s) {
    if (!is_symbol(s)) lex_.error("expected '" + s + "'");
    lex_.next();
  }

  void expect_end() {
    if (lex_.peek().type != Token::End) lex_.error("trailing input");
  }

  std::string ident(const char* what) {
    if (lex_.peek().type != Token::Ident) lex_.error(std::string("expected ") + what);
    return lex_.next().text;
  }

  ObjType type_atom() {
    if (is_symbol("(")) {
      lex_.next();
      ObjType t = type();
      expect_symbol(")");
      return t;
    }
    if (lex_.peek().type != Token::Ident) lex_.error("expected a type");
    Token name_tok = lex_.next();
    const std::string name = name_tok.text;
    if (name == "unit") return unit_ty();
    if (name == "V") {
      expect_symbol("(");
      std::string loc = ident("a location name");
      expect_symbol(")");
      try {
        return val_ty(sig_, loc);
      } catch (const Error& e) {
        rethrow_at(e, name_tok); // UnknownLocation keeps its kind
      }
    }
    lex_.error("unknown type '" + name + "'");
  }

  ObjType bracket_type() {
    expect_symbol("[");
    ObjType t = type();
    expect_symbol("]");
    return t;
  }

  std::pair<ObjType, ObjType> bracket_type2() {
    expect_symbol("[");
    ObjType a = type();
    expect_symbol(",");
    ObjType b = type();
    expect_symbol("]");
    return {a, b};
  }

  std::pair<Term, Term> paren_term2() {
    expect_symbol("(");
    Term f = term();
    expect_symbol(",");
    Term g = term();
    expect_symbol(")");
    return {f, g};
  }

  Term term_atom() {
    if (is_symbol("(")) {
      lex_.next();
      Term t = term();
      expect_symbol(")");
      return t;
    }
    if (lex_.peek().type != Token::Ident) lex_.error("expected a term");
    Token name_tok = lex_.next();
    const std::string name = name_tok.text;
    try {
      if (name == "id") return mk_id(bracket_type());
      if (name == "final") return mk_final(bracket_type());
      if (name == "inv_pi1") return inv_pi1(bracket_type());
      if (name == "pi1") {
        auto [a, b] = bracket_type2();
        return mk_pi1(a, b);
      }
      if (name == "pi2") {
        auto [a, b] = bracket_type2();
        return mk_pi2(a, b);
      }
      if (name == "permut") {
        auto [a, b] = bracket_type2();
        return permut(a, b);
      }
      if (name == "lookup") return mk_lookup(sig_, ident("a location name"));
      if (name == "update") return mk_update(sig_, ident("a location name"));
      if (name == "pair") {
        auto [f, g] = paren_term2();
        return mk_pair(f, g);
      }
      if (name == "perm_pair") {
        auto [f, g] = paren_term2();
        return perm_pair(f, g);
      }
      if (name == "prod") {
        auto [f, g] = paren_term2();
        return prod(f, g);
      }
      if (name == "perm_prod") {
        auto [f, g] = paren_term2();
        return perm_prod(f, g);
      }
      if (name == "lseq_prod") {
        auto [f, g] = paren_term2();
        return left_seq_prod(f, g);
      }
      if (name == "rseq_prod") {
        auto [f, g] = paren_term2();
        return right_seq_prod(f, g);
      }
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::ParseError) throw;
      rethrow_at(e, name_tok);
    }
    lex_.error("unknown term '" + name + "'");
  }
};

} // namespace

namespace {

// Names that the term and type grammars claim for themselves.
bool reserved_word(const std::string& name) {
  static const std::set<std::string> words = {
      "o",    "id",        "final",     "pi1",  "pi2",       "lookup",    "update",
      "pair", "inv_pi1",   "permut",    "prod", "perm_pair", "perm_prod", "lseq_prod",
      "rseq_prod", "unit", "V",         "locations"};
  return words.count(name) > 0;
}

} // namespace

MemorySignature parse_signature(const std::string& text) {
  Lexer lex(text);
  if (!(lex.peek().type == Token::Ident && lex.peek().text == "locations"))
    lex.error("signature must start with 'locations'");
  lex.next();
  std::vector<std::string> names;
  std::vector<std::vector<std::string>> carriers;
  while (lex.peek().type == Token::Ident) {
    if (reserved_word(lex.peek().text))
      lex.error("'" + lex.peek().text + "' is reserved and cannot name a location");
    names.push_back(lex.next().text);
    if (!(lex.peek().type == Token::Symbol && lex.peek().text == ":"))
      lex.error("expected ':' after location name");
    lex.next();
    if (!(lex.peek().type == Token::Symbol && lex.peek().text == "{"))
      lex.error("expected '{' before carrier values");
    lex.next();
    std::vector<std::string> values;
    while (lex.peek().type == Token::Ident) {
      values.push_back(lex.next().text);
      if (lex.peek().type == Token::Symbol && lex.peek().text == ",")
        lex.next();
      else
        break;
    }
    if (!(lex.peek().type == Token::Symbol && lex.peek().text == "}"))
      lex.error("expected '}' after carrier values");
    lex.next();
    carriers.push_back(std::move(values));
  }
  if (lex.peek().type != Token::End) lex.error("trailing input after signature");
  return MemorySignature::declare(std::move(names), std::move(carriers));
}

ObjType parse_type(const std::string& text, const MemorySignature& sig) {
  return Parser(text, sig).type_all();
}

Term parse_term(const std::string& text, const MemorySignature& sig) {
  return Parser(text, sig).term_all();
}

Equation parse_equation(const std::string& text, const MemorySignature& sig) {
  return Parser(text, sig).equation_all();
}

} // namespace decoreq
