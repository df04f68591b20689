#include "itypes/theory.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace itypes {

namespace {

constexpr std::pair<Rule, std::string_view> kRuleNames[] = {
    {Rule::OmegaTop, "omega-top"},     {Rule::NuTop, "nu-top"},
    {Rule::OmegaEta, "omega-eta"},     {Rule::OmegaLazy, "omega-lazy"},
    {Rule::ArrowInter, "arrow-inter"}, {Rule::Eta, "eta"},
};

bool is_reserved(std::string_view a) { return a == kOmega || a == kNu; }

bool all_arrows(const Type& t) {
  if (t.is_inter()) return all_arrows(t.left()) && all_arrows(t.right());
  return t.is_arrow();
}

}  // namespace

std::string_view rule_name(Rule r) {
  for (auto [rule, name] : kRuleNames) {
    if (rule == r) return name;
  }
  return "?";
}

std::optional<Rule> rule_from_name(std::string_view s) {
  for (auto [rule, name] : kRuleNames) {
    if (name == s) return rule;
  }
  return std::nullopt;
}

bool TheorySpec::has_atom(std::string_view a) const {
  return std::find(atoms.begin(), atoms.end(), a) != atoms.end();
}

const Type* TheorySpec::equation(std::string_view atom) const {
  auto it = equations.find(std::string(atom));
  return it == equations.end() ? nullptr : &it->second;
}

TheorySpec TheorySpec::with_atoms(const std::set<std::string>& fresh) const {
  TheorySpec out = *this;
  for (const auto& a : fresh) {
    if (!is_reserved(a) && !out.has_atom(a)) out.atoms.push_back(a);
  }
  return out;
}

std::vector<std::string> TheorySpec::plain_atoms() const {
  std::vector<std::string> out;
  for (const auto& a : atoms) {
    if (!is_reserved(a)) out.push_back(a);
  }
  return out;
}

std::string_view named_theory_name(NamedTheory n) {
  switch (n) {
    case NamedTheory::Ba: return "Ba";
    case NamedTheory::EHR: return "EHR";
    case NamedTheory::AO: return "AO";
    case NamedTheory::BCD: return "BCD";
  }
  return "?";
}

std::optional<NamedTheory> named_theory_from_name(std::string_view s) {
  std::string lower;
  for (char c : s) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower == "ba") return NamedTheory::Ba;
  if (lower == "ehr") return NamedTheory::EHR;
  if (lower == "ao") return NamedTheory::AO;
  if (lower == "bcd") return NamedTheory::BCD;
  return std::nullopt;
}

TheorySpec named_theory(NamedTheory n, std::size_t extra_atoms) {
  TheorySpec spec;
  spec.name = std::string(named_theory_name(n));
  spec.rules = {Rule::ArrowInter, Rule::Eta};
  auto fresh = [&] {
    for (std::size_t i = 0; i < extra_atoms; ++i) spec.atoms.push_back("a" + std::to_string(i));
  };
  switch (n) {
    case NamedTheory::Ba:
      fresh();
      break;
    case NamedTheory::EHR:
      spec.atoms = {std::string(kNu)};
      spec.has_nu = true;
      spec.rules.insert(Rule::NuTop);
      break;
    case NamedTheory::AO:
      spec.atoms = {std::string(kOmega)};
      spec.has_omega = true;
      spec.rules.insert({Rule::OmegaTop, Rule::OmegaLazy});
      break;
    case NamedTheory::BCD:
      spec.atoms = {std::string(kOmega)};
      fresh();
      spec.has_omega = true;
      spec.rules.insert({Rule::OmegaTop, Rule::OmegaEta});
      break;
  }
  return spec;
}

std::string_view violation_name(Violation v) {
  switch (v) {
    case Violation::OmegaNuConflict: return "OmegaNuConflict";
    case Violation::MissingAssumption1: return "MissingAssumption1";
    case Violation::MissingAssumption2: return "MissingAssumption2";
    case Violation::OmegaRuleWithoutOmega: return "OmegaRuleWithoutOmega";
    case Violation::NuRuleWithoutNu: return "NuRuleWithoutNu";
    case Violation::AtomListMismatch: return "AtomListMismatch";
    case Violation::InvalidAtomName: return "InvalidAtomName";
    case Violation::EquationOnReservedAtom: return "EquationOnReservedAtom";
    case Violation::EquationOnUnknownAtom: return "EquationOnUnknownAtom";
    case Violation::EquationUnknownAtom: return "EquationUnknownAtom";
    case Violation::EquationNotArrows: return "EquationNotArrows";
    case Violation::EquationCycle: return "EquationCycle";
  }
  return "?";
}

std::vector<Violation> validate(const TheorySpec& spec) {
  std::vector<Violation> out;
  auto add = [&](Violation v) {
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  };

  if (spec.has_omega && spec.has_nu) add(Violation::OmegaNuConflict);
  if (spec.has_omega && !spec.has(Rule::OmegaTop)) add(Violation::MissingAssumption1);
  if (spec.has_nu && !spec.has(Rule::NuTop)) add(Violation::MissingAssumption2);
  if (!spec.has_omega &&
      (spec.has(Rule::OmegaTop) || spec.has(Rule::OmegaEta) || spec.has(Rule::OmegaLazy))) {
    add(Violation::OmegaRuleWithoutOmega);
  }
  if (!spec.has_nu && spec.has(Rule::NuTop)) add(Violation::NuRuleWithoutNu);
  if (spec.has_atom(kOmega) != spec.has_omega || spec.has_atom(kNu) != spec.has_nu) {
    add(Violation::AtomListMismatch);
  }
  std::set<std::string> seen;
  for (const auto& a : spec.atoms) {
    if (!is_identifier(a) || !seen.insert(a).second) add(Violation::InvalidAtomName);
  }

  for (const auto& [atom, rhs] : spec.equations) {
    if (is_reserved(atom)) add(Violation::EquationOnReservedAtom);
    if (!spec.has_atom(atom)) add(Violation::EquationOnUnknownAtom);
    for (const auto& a : atoms_of(rhs)) {
      if (!spec.has_atom(a)) add(Violation::EquationUnknownAtom);
    }
    if (!all_arrows(rhs)) add(Violation::EquationNotArrows);
  }

  // Depth-first search over the dependency graph psi -> atoms(rhs(psi)).
  std::map<std::string, int> state;  // 0 unvisited, 1 on stack, 2 done
  bool cycle = false;
  std::function<void(const std::string&)> visit = [&](const std::string& a) {
    const Type* rhs = spec.equation(a);
    if (rhs == nullptr || cycle) return;
    int& s = state[a];
    if (s == 1) {
      cycle = true;
      return;
    }
    if (s == 2) return;
    s = 1;
    for (const auto& b : atoms_of(*rhs)) visit(b);
    state[a] = 2;
  };
  for (const auto& kv : spec.equations) visit(kv.first);
  if (cycle) add(Violation::EquationCycle);
  return out;
}

bool validates_ba(const TheorySpec& spec) {
  return spec.has(Rule::ArrowInter) && spec.has(Rule::Eta);
}

bool validates_ao(const TheorySpec& spec) {
  return validates_ba(spec) && spec.has_omega && spec.has(Rule::OmegaTop) &&
         (spec.has(Rule::OmegaLazy) || spec.has(Rule::OmegaEta));
}

Type expand_equations(const TheorySpec& spec, const Type& t) {
  if (spec.equations.empty()) return t;
  switch (t.kind()) {
    case Type::Kind::Atom:
      if (const Type* rhs = spec.equation(t.name())) return expand_equations(spec, *rhs);
      return t;
    case Type::Kind::Arrow:
      return Type::arrow(expand_equations(spec, t.dom()), expand_equations(spec, t.cod()));
    case Type::Kind::Inter:
      return Type::inter(expand_equations(spec, t.left()), expand_equations(spec, t.right()));
  }
  return t;
}

}  // namespace itypes
