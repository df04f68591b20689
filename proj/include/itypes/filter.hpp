#pragma once

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "itypes/assign.hpp"
#include "itypes/subtype.hpp"
#include "itypes/syntax.hpp"
#include "itypes/theory.hpp"

namespace itypes {

/// A finitely generated filter, kept as the intersection of its generators.
/// No generator means up(empty): up(omega) when omega is a constant, the empty
/// filter otherwise.
struct FiniteFilter {
  std::optional<Type> generator;

  static FiniteFilter empty() { return {}; }
  static FiniteFilter up(Type g) { return {std::move(g)}; }
  // up(/\ gens); empty list gives up(empty).
  static FiniteFilter of(const std::vector<Type>& gens);

  friend bool operator==(const FiniteFilter& a, const FiniteFilter& b) {
    return a.generator == b.generator;
  }
};

/// Canonical generator string, or "empty".
std::string print_filter(const FiniteFilter& f);

class EmptyEnvFilter : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Env = std::map<std::string, FiniteFilter>;

/// Filter operations over one theory; shares a Subtyper across calls.
class FilterModel {
 public:
  explicit FilterModel(const TheorySpec& spec);

  const TheorySpec& spec() const { return sub_.spec(); }
  Subtyper& subtyper() { return sub_; }

  bool member(const FiniteFilter& x, const Type& a);
  // x contains y as sets of types.
  bool includes(const FiniteFilter& x, const FiniteFilter& y);

  /// X . Y = up { B_i | A_i in Y } over the arrow heads A_i -> B_i of X's
  /// generator; up(empty) when nothing is selected.
  FiniteFilter apply(const FiniteFilter& x, const FiniteFilter& y);

  /// G applied to the sup of step functions up(A) => up(B): the intersection
  /// of the arrows A -> B, with omega -> omega when omega is a constant and nu
  /// when nu is.
  FiniteFilter abstraction(const std::vector<std::pair<Type, Type>>& table);

  /// Membership in the functionality set.
  bool phi(const FiniteFilter& x);

  /// B in X . up(A)  iff  A -> B in X. Expected true whenever the
  /// precondition holds (omega -> omega in X for omega theories).
  bool prop_simple(const FiniteFilter& x, const Type& a, const Type& b);
  bool prop_simple_precondition(const FiniteFilter& x);

  /// Generalized application: the selection test is a tri-state predicate on
  /// the domains. Returns (sure, possible): the filter built from the Yes
  /// domains and the one built from the Yes and Unknown domains.
  std::pair<FiniteFilter, FiniteFilter> apply_by(const FiniteFilter& x,
                                                 const std::function<Verdict(const Type&)>& in);

 private:
  std::optional<Type> effective(const FiniteFilter& x) const;
  Subtyper sub_;
};

bool member(const TheorySpec& spec, const FiniteFilter& x, const Type& a);
FiniteFilter apply(const TheorySpec& spec, const FiniteFilter& x, const FiniteFilter& y);
FiniteFilter make_abstraction_filter(const TheorySpec& spec,
                                     const std::vector<std::pair<Type, Type>>& table);
bool phi_membership(const TheorySpec& spec, const FiniteFilter& x);
bool prop_simple_check(const TheorySpec& spec, const FiniteFilter& x, const Type& a,
                       const Type& b);

/// Basis read off an environment for the free variables of a term. Absent or
/// empty entries become omega in omega theories; otherwise EmptyEnvFilter.
Basis env_basis(const TheorySpec& spec, const Term& term, const Env& env);

/// a in [[term]]env, by type-assignment search on env_basis.
Verdict interpret_member(const TheorySpec& spec, const Term& term, const Env& env, const Type& a,
                         SearchBudget budget = {});

/// a in [[term]]env computed compositionally in the filter structure:
/// variables read the environment, applications go through apply_by, and
/// abstractions through the abstraction map (C -> D is in G(f) iff D is in
/// f(up C)). Applications whose head is not a variable search argument types
/// from a bounded pool. Independent of derivation search; used to cross-check
/// interpret_member.
class Denotation {
 public:
  Denotation(const TheorySpec& spec, SearchBudget budget = {});
  Verdict member(const Term& term, const Env& env, const Type& a);
  FilterModel& model() { return model_; }

 private:
  Verdict run(const Term& term, const Env& env, const Type& a, std::size_t depth);
  FilterModel model_;
  SearchBudget budget_;
};

}  // namespace itypes
