#include "itypes/syntax.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <vector>

#include "itypes/theory.hpp"

namespace itypes {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

// ---------------------------------------------------------------- Type

Type Type::atom(std::string_view name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Atom;
  n->name = std::string(name);
  n->size = 1;
  n->hash = mix(0x41, std::hash<std::string_view>{}(name));
  return Type(std::move(n));
}

Type Type::arrow(Type dom, Type cod) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Arrow;
  n->size = dom.size() + cod.size() + 1;
  n->hash = mix(mix(0x52, dom.hash()), cod.hash());
  n->left = std::make_unique<Type>(std::move(dom));
  n->right = std::make_unique<Type>(std::move(cod));
  return Type(std::move(n));
}

Type Type::inter(Type left, Type right) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Inter;
  n->size = left.size() + right.size() + 1;
  n->hash = mix(mix(0x49, left.hash()), right.hash());
  n->left = std::make_unique<Type>(std::move(left));
  n->right = std::make_unique<Type>(std::move(right));
  return Type(std::move(n));
}

bool operator==(const Type& a, const Type& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.kind() != b.kind() || a.size() != b.size()) return false;
  if (a.is_atom()) return a.name() == b.name();
  return a.left() == b.left() && a.right() == b.right();
}

// ---------------------------------------------------------------- Term

Term Term::var(std::string_view name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Var;
  n->name = std::string(name);
  n->size = 1;
  n->hash = mix(0x56, std::hash<std::string_view>{}(name));
  return Term(std::move(n));
}

Term Term::lam(std::string_view binder, Term body) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Lam;
  n->name = std::string(binder);
  n->size = body.size() + 1;
  n->hash = mix(mix(0x4c, std::hash<std::string_view>{}(binder)), body.hash());
  n->left = std::make_unique<Term>(std::move(body));
  return Term(std::move(n));
}

Term Term::app(Term fun, Term arg) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::App;
  n->size = fun.size() + arg.size() + 1;
  n->hash = mix(mix(0x41, fun.hash()), arg.hash());
  n->left = std::make_unique<Term>(std::move(fun));
  n->right = std::make_unique<Term>(std::move(arg));
  return Term(std::move(n));
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.kind() != b.kind() || a.size() != b.size()) return false;
  switch (a.kind()) {
    case Term::Kind::Var:
      return a.name() == b.name();
    case Term::Kind::Lam:
      return a.name() == b.name() && a.body() == b.body();
    case Term::Kind::App:
      return a.fun() == b.fun() && a.arg() == b.arg();
  }
  return false;
}

// ---------------------------------------------------------------- errors

ParseError::ParseError(std::size_t offset, const std::string& message)
    : std::runtime_error("parse error at offset " + std::to_string(offset) + ": " + message),
      offset_(offset) {}

UnknownAtomError::UnknownAtomError(std::string atom)
    : std::runtime_error("unknown atom '" + atom + "' (not a constant of the theory)"),
      atom_(std::move(atom)) {}

// ---------------------------------------------------------------- lexer

bool is_identifier(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s.front()))) return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

namespace {

enum class Tok { Ident, Lambda, Dot, LParen, RParen, Arrow, Amp, End };

const char* tok_name(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Lambda: return "'\\'";
    case Tok::Dot: return "'.'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Arrow: return "'->'";
    case Tok::Amp: return "'&'";
    case Tok::End: return "end of input";
  }
  return "?";
}

struct Token {
  Tok kind;
  std::string_view text;
  std::size_t offset;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) { advance(); }

  const Token& peek() const { return cur_; }

  Token take() {
    Token t = cur_;
    advance();
    return t;
  }

  Token expect(Tok kind) {
    if (cur_.kind != kind) {
      throw ParseError(cur_.offset, std::string("expected ") + tok_name(kind) + ", found " +
                                        describe(cur_));
    }
    return take();
  }

  [[noreturn]] void fail(const std::string& expected) const {
    throw ParseError(cur_.offset, "expected " + expected + ", found " + describe(cur_));
  }

 private:
  static std::string describe(const Token& t) {
    if (t.kind == Tok::Ident) return "'" + std::string(t.text) + "'";
    return tok_name(t.kind);
  }

  void advance() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    const std::size_t start = pos_;
    if (pos_ >= src_.size()) {
      cur_ = {Tok::End, {}, start};
      return;
    }
    const char c = src_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                                    src_[pos_] == '_')) {
        ++pos_;
      }
      cur_ = {Tok::Ident, src_.substr(start, pos_ - start), start};
      return;
    }
    ++pos_;
    switch (c) {
      case '\\': cur_ = {Tok::Lambda, src_.substr(start, 1), start}; return;
      case '.': cur_ = {Tok::Dot, src_.substr(start, 1), start}; return;
      case '(': cur_ = {Tok::LParen, src_.substr(start, 1), start}; return;
      case ')': cur_ = {Tok::RParen, src_.substr(start, 1), start}; return;
      case '&': cur_ = {Tok::Amp, src_.substr(start, 1), start}; return;
      case '-':
        if (pos_ < src_.size() && src_[pos_] == '>') {
          ++pos_;
          cur_ = {Tok::Arrow, src_.substr(start, 2), start};
          return;
        }
        break;
      default:
        break;
    }
    throw ParseError(start, std::string("unexpected character '") + c + "'");
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  Token cur_{Tok::End, {}, 0};
};

// term ::= lam | app ; lam ::= '\' ident '.' term ; app ::= atom+ ;
// atom ::= ident | '(' term ')'
class TermParser {
 public:
  explicit TermParser(std::string_view src) : lex_(src) {}

  Term parse() {
    Term t = term();
    if (lex_.peek().kind != Tok::End) lex_.fail("end of input");
    return t;
  }

 private:
  Term term() {
    if (lex_.peek().kind == Tok::Lambda) {
      lex_.take();
      Token x = lex_.expect(Tok::Ident);
      lex_.expect(Tok::Dot);
      return Term::lam(x.text, term());
    }
    Term t = atom();
    while (lex_.peek().kind == Tok::Ident || lex_.peek().kind == Tok::LParen) {
      t = Term::app(std::move(t), atom());
    }
    return t;
  }

  Term atom() {
    if (lex_.peek().kind == Tok::Ident) return Term::var(lex_.take().text);
    if (lex_.peek().kind == Tok::LParen) {
      lex_.take();
      Term t = term();
      lex_.expect(Tok::RParen);
      return t;
    }
    lex_.fail("identifier, '(' or '\\'");
  }

  Lexer lex_;
};

// type ::= inter ('->' type)? ; inter ::= prim ('&' prim)* ;
// prim ::= ident | '(' type ')'
class TypeParser {
 public:
  TypeParser(std::string_view src, const TheorySpec* spec) : lex_(src), spec_(spec) {}

  Type parse() {
    Type t = type();
    if (lex_.peek().kind != Tok::End) lex_.fail("end of input");
    return t;
  }

 private:
  Type type() {
    Type lhs = inter();
    if (lex_.peek().kind == Tok::Arrow) {
      lex_.take();
      return Type::arrow(std::move(lhs), type());
    }
    return lhs;
  }

  Type inter() {
    Type t = prim();
    while (lex_.peek().kind == Tok::Amp) {
      lex_.take();
      t = Type::inter(std::move(t), prim());
    }
    return t;
  }

  Type prim() {
    if (lex_.peek().kind == Tok::Ident) {
      Token tok = lex_.take();
      if (spec_ != nullptr && !spec_->has_atom(tok.text)) {
        throw UnknownAtomError(std::string(tok.text));
      }
      return Type::atom(tok.text);
    }
    if (lex_.peek().kind == Tok::LParen) {
      lex_.take();
      Type t = type();
      lex_.expect(Tok::RParen);
      return t;
    }
    lex_.fail("atom or '('");
  }

  Lexer lex_;
  const TheorySpec* spec_;
};

void print_term_into(const Term& t, std::string& out);

void print_term_atom(const Term& t, std::string& out) {
  if (t.is_var()) {
    out += t.name();
  } else {
    out += '(';
    print_term_into(t, out);
    out += ')';
  }
}

void print_term_into(const Term& t, std::string& out) {
  switch (t.kind()) {
    case Term::Kind::Var:
      out += t.name();
      break;
    case Term::Kind::Lam:
      out += '\\';
      out += t.name();
      out += ". ";
      print_term_into(t.body(), out);
      break;
    case Term::Kind::App:
      if (t.fun().is_lam()) {
        print_term_atom(t.fun(), out);
      } else {
        print_term_into(t.fun(), out);
      }
      out += ' ';
      print_term_atom(t.arg(), out);
      break;
  }
}

void print_type_into(const Type& t, std::string& out);

void print_type_prim(const Type& t, std::string& out) {
  if (t.is_atom()) {
    out += t.name();
  } else {
    out += '(';
    print_type_into(t, out);
    out += ')';
  }
}

// An `inter` production: left-nested '&' chain of prims.
void print_type_inter(const Type& t, std::string& out) {
  if (t.is_inter()) {
    print_type_inter(t.left(), out);
    out += " & ";
    print_type_prim(t.right(), out);
  } else {
    print_type_prim(t, out);
  }
}

void print_type_into(const Type& t, std::string& out) {
  if (t.is_arrow()) {
    print_type_inter(t.dom(), out);
    out += " -> ";
    print_type_into(t.cod(), out);
  } else {
    print_type_inter(t, out);
  }
}

bool alpha_eq_rec(const Term& a, const Term& b, std::map<std::string, std::vector<int>>& la,
                  std::map<std::string, std::vector<int>>& lb, int depth) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Term::Kind::Var: {
      auto ia = la.find(a.name());
      auto ib = lb.find(b.name());
      const bool bound_a = ia != la.end() && !ia->second.empty();
      const bool bound_b = ib != lb.end() && !ib->second.empty();
      if (bound_a != bound_b) return false;
      if (!bound_a) return a.name() == b.name();
      return ia->second.back() == ib->second.back();
    }
    case Term::Kind::Lam: {
      la[a.name()].push_back(depth);
      lb[b.name()].push_back(depth);
      const bool r = alpha_eq_rec(a.body(), b.body(), la, lb, depth + 1);
      la[a.name()].pop_back();
      lb[b.name()].pop_back();
      return r;
    }
    case Term::Kind::App:
      return alpha_eq_rec(a.fun(), b.fun(), la, lb, depth) &&
             alpha_eq_rec(a.arg(), b.arg(), la, lb, depth);
  }
  return false;
}

void free_vars_rec(const Term& t, std::multiset<std::string>& bound, std::set<std::string>& out) {
  switch (t.kind()) {
    case Term::Kind::Var:
      if (bound.find(t.name()) == bound.end()) out.insert(t.name());
      break;
    case Term::Kind::Lam: {
      auto it = bound.insert(t.name());
      free_vars_rec(t.body(), bound, out);
      bound.erase(it);
      break;
    }
    case Term::Kind::App:
      free_vars_rec(t.fun(), bound, out);
      free_vars_rec(t.arg(), bound, out);
      break;
  }
}

void atoms_rec(const Type& t, std::set<std::string>& out) {
  if (t.is_atom()) {
    out.insert(t.name());
  } else {
    atoms_rec(t.left(), out);
    atoms_rec(t.right(), out);
  }
}

}  // namespace

Term parse_term(std::string_view src) { return TermParser(src).parse(); }

Type parse_type(std::string_view src, const TheorySpec& spec) {
  return TypeParser(src, &spec).parse();
}

Type parse_type(std::string_view src) { return TypeParser(src, nullptr).parse(); }

std::string print_term(const Term& t) {
  std::string out;
  print_term_into(t, out);
  return out;
}

std::string print_type(const Type& t) {
  std::string out;
  print_type_into(t, out);
  return out;
}

bool alpha_eq(const Term& a, const Term& b) {
  std::map<std::string, std::vector<int>> la;
  std::map<std::string, std::vector<int>> lb;
  return alpha_eq_rec(a, b, la, lb, 0);
}

std::set<std::string> free_vars(const Term& t) {
  std::multiset<std::string> bound;
  std::set<std::string> out;
  free_vars_rec(t, bound, out);
  return out;
}

std::set<std::string> atoms_of(const Type& t) {
  std::set<std::string> out;
  atoms_rec(t, out);
  return out;
}

bool type_less(const Type& a, const Type& b) {
  if (a.kind() != b.kind()) return a.kind() < b.kind();
  if (a == b) return false;
  return print_type(a) < print_type(b);
}

Type inter_all(const std::vector<Type>& parts) {
  if (parts.empty()) throw std::invalid_argument("inter_all: empty list");
  Type acc = parts.back();
  for (std::size_t i = parts.size() - 1; i-- > 0;) acc = Type::inter(parts[i], acc);
  return acc;
}

}  // namespace itypes
