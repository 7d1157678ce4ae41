#include "duoidal/syntax.hpp"

#include "duoidal/error.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace duoidal {

namespace {

struct Token {
  enum Kind { Ident, Sym, End } kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) ||
                              s[j] == '_'))
        ++j;
      // a', l', r' mark inverses and lex as one token.
      if (j < s.size() && s[j] == '\'')
        ++j;
      out.push_back({Token::Ident, std::string(s.substr(i, j - i)), i});
      i = j;
      continue;
    }
    if (std::string_view("()[],*%").find(c) != std::string_view::npos) {
      out.push_back({Token::Sym, std::string(1, c), i});
      ++i;
      continue;
    }
    throw ParseError("unexpected character", i, std::string(1, c));
  }
  out.push_back({Token::End, "", s.size()});
  return out;
}

class Parser {
public:
  explicit Parser(std::string_view text) : toks_(tokenize(text)) {}

  Obj primary() {
    const Token &t = peek();
    if (t.kind == Token::Ident) {
      if (t.text == "I") {
        next();
        return Obj::unit_tens();
      }
      if (t.text == "R") {
        next();
        return Obj::unit_par();
      }
      if (t.text == "neg") {
        next();
        expect("(");
        Obj inner = object();
        expect(")");
        return Obj::neg(inner);
      }
      if (std::isupper(static_cast<unsigned char>(t.text[0])) &&
          t.text.back() != '\'') {
        next();
        return Obj::gen(t.text);
      }
      fail("expected an object");
    }
    if (is_sym("(")) {
      next();
      Obj inner = object();
      expect(")");
      return inner;
    }
    fail("expected an object");
  }

  // A primary, or primaries joined by one kind of operator. The tensor is
  // binary; mixing operators needs parentheses.
  Obj object() {
    Obj first = primary();
    if (is_sym("*")) {
      next();
      Obj second = primary();
      if (is_sym("*"))
        fail("ambiguous '*' chain; the tensor is not strict, add parentheses");
      if (is_sym("%"))
        fail("mixed '*' and '%'; add parentheses");
      return Obj::tens(first, second);
    }
    if (is_sym("%")) {
      std::vector<Obj> parts{first};
      while (is_sym("%")) {
        next();
        parts.push_back(primary());
      }
      if (is_sym("*"))
        fail("mixed '*' and '%'; add parentheses");
      return Obj::par(std::move(parts));
    }
    return first;
  }

  Term term() {
    Term first = factor();
    if (peek().kind == Token::Ident && peek().text == "o") {
      next();
      Term rest = term();
      return Term::comp(first, rest);
    }
    return first;
  }

  void finish() {
    if (peek().kind != Token::End)
      fail("trailing input");
  }

  const Token &peek() const { return toks_[pos_]; }

private:
  // Atoms joined by one kind of tensor; binds tighter than 'o'.
  Term factor() {
    Term first = atom();
    if (is_sym("*")) {
      next();
      Term second = atom();
      if (is_sym("*"))
        fail("ambiguous '*' chain; the tensor is not strict, add parentheses");
      if (is_sym("%"))
        fail("mixed '*' and '%'; add parentheses");
      return Term::tens(first, second);
    }
    if (is_sym("%")) {
      std::vector<Term> parts{first};
      while (is_sym("%")) {
        next();
        parts.push_back(atom());
      }
      if (is_sym("*"))
        fail("mixed '*' and '%'; add parentheses");
      return parts.size() == 2 ? Term::par(parts[0], parts[1]) : Term::par(std::move(parts));
    }
    return first;
  }

  Term atom() {
    const Token t = peek();
    if (is_sym("(")) {
      next();
      Term inner = term();
      expect(")");
      return inner;
    }
    if (t.kind != Token::Ident)
      fail("expected a morphism");
    next();
    const std::string &w = t.text;
    if (w == "mu")
      return Term::mu();
    if (w == "eta")
      return Term::eta();
    if (w == "id")
      return Term::id(bracket(1)[0]);
    if (w == "a" || w == "a'") {
      auto o = bracket(3);
      return Term::assoc(o[0], o[1], o[2], w == "a'");
    }
    if (w == "l" || w == "l'")
      return Term::lunit(bracket(1)[0], w == "l'");
    if (w == "r" || w == "r'")
      return Term::runit(bracket(1)[0], w == "r'");
    if (w == "m") {
      auto o = bracket(4);
      return Term::mid4(o[0], o[1], o[2], o[3]);
    }
    if (w == "gamma")
      return Term::gamma(bracket(1)[0]);
    if (w == "tau")
      return Term::tau(bracket(1)[0]);
    if (w == "act")
      return Term::act(bracket(1)[0]);
    if (w == "action")
      return Term::action_of(bracket(1)[0]);
    if (w == "gen") {
      expect("(");
      const Token n = peek();
      if (n.kind != Token::Ident)
        fail("expected a generator name");
      next();
      expect(",");
      Obj d = object();
      expect(",");
      Obj c = object();
      expect(")");
      return Term::free_gen(n.text, d, c);
    }
    pos_--;
    fail("unknown morphism");
  }

  std::vector<Obj> bracket(std::size_t n) {
    expect("[");
    std::vector<Obj> out;
    for (std::size_t i = 0; i < n; ++i) {
      if (i)
        expect(",");
      out.push_back(object());
    }
    expect("]");
    return out;
  }

  bool is_sym(const char *s) const {
    return peek().kind == Token::Sym && peek().text == s;
  }
  void next() {
    if (pos_ + 1 < toks_.size())
      ++pos_;
  }
  void expect(const char *s) {
    if (!is_sym(s))
      fail(std::string("expected '") + s + "'");
    next();
  }
  [[noreturn]] void fail(const std::string &msg) const {
    throw ParseError(msg, peek().pos, peek().text);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

void print_obj(std::ostream &os, const Obj &o) {
  switch (o.kind()) {
  case ObjKind::UnitTens:
    os << "I";
    return;
  case ObjKind::UnitPar:
    os << "R";
    return;
  case ObjKind::Gen:
    os << o.name();
    return;
  case ObjKind::Neg:
    os << "neg(";
    print_obj(os, o.inner());
    os << ")";
    return;
  case ObjKind::Tens:
    os << "(";
    print_obj(os, o.left());
    os << " * ";
    print_obj(os, o.right());
    os << ")";
    return;
  case ObjKind::Par: {
    const auto &p = o.parts();
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      os << "(";
      print_obj(os, p[i]);
      os << " % ";
    }
    if (!p.empty())
      print_obj(os, p.back());
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
      os << ")";
    return;
  }
  }
}

void print_objs(std::ostream &os, const Term &t) {
  os << "[";
  for (std::size_t i = 0; i < t.objects().size(); ++i) {
    if (i)
      os << ",";
    print_obj(os, t.object(i));
  }
  os << "]";
}

void print_term(std::ostream &os, const Term &t, bool nested);

void print_operand(std::ostream &os, const Term &t) {
  if (t.kind() == TermKind::Comp) {
    os << "(";
    print_term(os, t, false);
    os << ")";
  } else {
    print_term(os, t, true);
  }
}

void print_term(std::ostream &os, const Term &t, bool nested) {
  switch (t.kind()) {
  case TermKind::Id:
    os << "id";
    print_objs(os, t);
    return;
  case TermKind::Comp: {
    const auto &f = t.children();
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (i)
        os << " o ";
      // A composite in the last slot nests to the right and prints bare;
      // anywhere else it needs grouping to survive a re-parse.
      if (f[i].kind() == TermKind::Comp && i + 1 < f.size())
        print_operand(os, f[i]);
      else
        print_term(os, f[i], true);
    }
    (void)nested;
    return;
  }
  case TermKind::Tens:
    os << "(";
    print_operand(os, t.child(0));
    os << " * ";
    print_operand(os, t.child(1));
    os << ")";
    return;
  case TermKind::Par: {
    const auto &p = t.children();
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      os << "(";
      print_operand(os, p[i]);
      os << " % ";
    }
    if (!p.empty())
      print_operand(os, p.back());
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
      os << ")";
    return;
  }
  case TermKind::Assoc:
    os << (t.inverse() ? "a'" : "a");
    print_objs(os, t);
    return;
  case TermKind::LUnit:
    os << (t.inverse() ? "l'" : "l");
    print_objs(os, t);
    return;
  case TermKind::RUnit:
    os << (t.inverse() ? "r'" : "r");
    print_objs(os, t);
    return;
  case TermKind::Mid4:
    os << "m";
    print_objs(os, t);
    return;
  case TermKind::Mu:
    os << "mu";
    return;
  case TermKind::Eta:
    os << "eta";
    return;
  case TermKind::Gamma:
    os << "gamma";
    print_objs(os, t);
    return;
  case TermKind::Tau:
    os << "tau";
    print_objs(os, t);
    return;
  case TermKind::Act:
    os << "act";
    print_objs(os, t);
    return;
  case TermKind::ActionOf:
    os << "action";
    print_objs(os, t);
    return;
  case TermKind::FreeGen:
    os << "gen(" << t.name() << ", ";
    print_obj(os, t.object(0));
    os << ", ";
    print_obj(os, t.object(1));
    os << ")";
    return;
  }
}

} // namespace

Obj parse_object(std::string_view text) {
  Parser p(text);
  Obj o = p.object();
  p.finish();
  return normalize_par(o);
}

Term parse_term(std::string_view text) {
  Parser p(text);
  Term t = p.term();
  p.finish();
  return t;
}

std::string to_string(const Obj &o) {
  std::ostringstream os;
  print_obj(os, o);
  return os.str();
}

std::string to_string(const Term &t) {
  std::ostringstream os;
  print_term(os, t, false);
  return os.str();
}

} // namespace duoidal
