#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace itypes {

struct TheorySpec;

inline constexpr std::string_view kOmega = "omega";
inline constexpr std::string_view kNu = "nu";

/// Intersection type over a theory's constants: atom, arrow or binary
/// intersection. Immutable, shared structure; copies are cheap.
class Type {
 public:
  enum class Kind : std::uint8_t { Atom, Arrow, Inter };

  static Type atom(std::string_view name);
  static Type arrow(Type dom, Type cod);
  static Type inter(Type left, Type right);
  static Type omega() { return atom(kOmega); }
  static Type nu() { return atom(kNu); }

  Kind kind() const { return node_->kind; }
  bool is_atom() const { return kind() == Kind::Atom; }
  bool is_arrow() const { return kind() == Kind::Arrow; }
  bool is_inter() const { return kind() == Kind::Inter; }
  bool is_omega() const { return is_atom() && node_->name == kOmega; }
  bool is_nu() const { return is_atom() && node_->name == kNu; }

  // Atom name; empty for compound types.
  const std::string& name() const { return node_->name; }
  // Arrow domain / left conjunct.
  const Type& left() const { return *node_->left; }
  // Arrow codomain / right conjunct.
  const Type& right() const { return *node_->right; }
  const Type& dom() const { return left(); }
  const Type& cod() const { return right(); }

  std::size_t size() const { return node_->size; }
  std::size_t hash() const { return node_->hash; }

  friend bool operator==(const Type& a, const Type& b);
  friend bool operator!=(const Type& a, const Type& b) { return !(a == b); }

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::unique_ptr<Type> left;
    std::unique_ptr<Type> right;
    std::size_t size;
    std::size_t hash;
  };
  explicit Type(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Untyped lambda term.
class Term {
 public:
  enum class Kind : std::uint8_t { Var, Lam, App };

  static Term var(std::string_view name);
  static Term lam(std::string_view binder, Term body);
  static Term app(Term fun, Term arg);

  Kind kind() const { return node_->kind; }
  bool is_var() const { return kind() == Kind::Var; }
  bool is_lam() const { return kind() == Kind::Lam; }
  bool is_app() const { return kind() == Kind::App; }

  // Variable name or lambda binder.
  const std::string& name() const { return node_->name; }
  const Term& body() const { return *node_->left; }
  const Term& fun() const { return *node_->left; }
  const Term& arg() const { return *node_->right; }

  std::size_t size() const { return node_->size; }
  std::size_t hash() const { return node_->hash; }

  // Syntactic equality (binder names included). See alpha_eq for the
  // renaming-insensitive relation.
  friend bool operator==(const Term& a, const Term& b);
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::unique_ptr<Term> left;
    std::unique_ptr<Term> right;
    std::size_t size;
    std::size_t hash;
  };
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct TypeHash {
  std::size_t operator()(const Type& t) const { return t.hash(); }
};
struct TermHash {
  std::size_t operator()(const Term& t) const { return t.hash(); }
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, const std::string& message);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

class UnknownAtomError : public std::runtime_error {
 public:
  explicit UnknownAtomError(std::string atom);
  const std::string& atom() const { return atom_; }

 private:
  std::string atom_;
};

bool is_identifier(std::string_view s);

Term parse_term(std::string_view src);
// Checks every atom against the theory's constant set.
Type parse_type(std::string_view src, const TheorySpec& spec);
// Grammar-only parse; no constant-set check.
Type parse_type(std::string_view src);

std::string print_term(const Term& t);
std::string print_type(const Type& t);

bool alpha_eq(const Term& a, const Term& b);
std::set<std::string> free_vars(const Term& t);
std::set<std::string> atoms_of(const Type& t);

// Strict total order used for canonical sorting: atoms before arrows before
// intersections, then by printed form.
bool type_less(const Type& a, const Type& b);

// Right-nested intersection of a nonempty list.
Type inter_all(const std::vector<Type>& parts);

}  // namespace itypes

template <>
struct std::hash<itypes::Type> {
  std::size_t operator()(const itypes::Type& t) const noexcept { return t.hash(); }
};
template <>
struct std::hash<itypes::Term> {
  std::size_t operator()(const itypes::Term& t) const noexcept { return t.hash(); }
};
