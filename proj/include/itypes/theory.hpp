#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "itypes/syntax.hpp"

namespace itypes {

/// The special-purpose axioms and rules a theory may add to the base preorder.
enum class Rule {
  OmegaTop,    // A <= omega
  NuTop,       // A -> B <= nu
  OmegaEta,    // omega <= omega -> omega
  OmegaLazy,   // A -> B <= omega -> omega
  ArrowInter,  // (A -> B) & (A -> C) <= A -> B & C
  Eta,         // A' <= A, B <= B'  ==>  A -> B <= A' -> B'
};

std::string_view rule_name(Rule r);
std::optional<Rule> rule_from_name(std::string_view s);

/// An intersection-type theory: constants, extra axioms/rules and atom
/// equations psi ~ (A1 -> B1) & ... & (An -> Bn).
struct TheorySpec {
  std::string name;
  // Constant set, including "omega"/"nu" when present.
  std::vector<std::string> atoms;
  bool has_omega = false;
  bool has_nu = false;
  std::set<Rule> rules;
  std::map<std::string, Type> equations;

  bool has(Rule r) const { return rules.count(r) != 0; }
  bool has_atom(std::string_view a) const;
  const Type* equation(std::string_view atom) const;

  // Conservative extension with fresh equation-free atoms. Reserved names and
  // atoms already present are skipped.
  TheorySpec with_atoms(const std::set<std::string>& fresh) const;

  // Atoms other than omega and nu.
  std::vector<std::string> plain_atoms() const;
};

enum class NamedTheory { Ba, EHR, AO, BCD };

std::string_view named_theory_name(NamedTheory n);
std::optional<NamedTheory> named_theory_from_name(std::string_view s);
inline constexpr NamedTheory kAllNamedTheories[] = {NamedTheory::Ba, NamedTheory::EHR,
                                                    NamedTheory::AO, NamedTheory::BCD};

/// Ba and BCD carry fresh atoms a0..a(k-1); EHR and AO ignore `extra_atoms`.
TheorySpec named_theory(NamedTheory n, std::size_t extra_atoms);

enum class Violation {
  OmegaNuConflict,        // omega and nu both constants
  MissingAssumption1,     // omega present without (omega)
  MissingAssumption2,     // nu present without (nu)
  OmegaRuleWithoutOmega,  // (omega), (omega-eta) or (omega-lazy) without omega
  NuRuleWithoutNu,        // (nu) without nu
  AtomListMismatch,       // omega/nu flags disagree with the atom list
  InvalidAtomName,        // not an identifier, or duplicated
  EquationOnReservedAtom,
  EquationOnUnknownAtom,
  EquationUnknownAtom,    // right-hand side mentions a non-constant
  EquationNotArrows,      // right-hand side is not an intersection of arrows
  EquationCycle,
};

std::string_view violation_name(Violation v);

std::vector<Violation> validate(const TheorySpec& spec);

bool validates_ba(const TheorySpec& spec);
bool validates_ao(const TheorySpec& spec);

// Replaces every equation atom by its right-hand side, recursively.
Type expand_equations(const TheorySpec& spec, const Type& t);

}  // namespace itypes
