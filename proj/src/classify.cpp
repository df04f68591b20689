#include "itypes/classify.hpp"

#include "itypes/subtype.hpp"

namespace itypes {

namespace {

Verdict tri_or(Verdict a, Verdict b) {
  if (a == Verdict::Yes || b == Verdict::Yes) return Verdict::Yes;
  if (a == Verdict::Unknown || b == Verdict::Unknown) return Verdict::Unknown;
  return Verdict::No;
}

bool all_plain_atoms_have_equations(const TheorySpec& spec) {
  for (const auto& a : spec.plain_atoms()) {
    if (!spec.equation(a)) return false;
  }
  return true;
}

// Which named family the spec has the shape of. Ba and BCD range over any
// set of equation-free plain atoms; EHR and AO have exactly nu / omega.
std::optional<NamedTheory> named_shape(const TheorySpec& spec) {
  if (!spec.equations.empty()) return std::nullopt;
  for (NamedTheory n : kAllNamedTheories) {
    const TheorySpec ref = named_theory(n, 0);
    if (ref.rules != spec.rules || ref.has_omega != spec.has_omega || ref.has_nu != spec.has_nu) {
      continue;
    }
    const bool fresh_atoms_ok = n == NamedTheory::Ba || n == NamedTheory::BCD;
    if (!fresh_atoms_ok && !spec.plain_atoms().empty()) continue;
    return n;
  }
  return std::nullopt;
}

std::string verdict_word(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "Yes";
    case Verdict::No: return "No";
    case Verdict::Unknown: return "Unknown";
  }
  return "?";
}

}  // namespace

bool is_strict(const TheorySpec& spec) { return !spec.has_omega && validates_ba(spec); }

bool is_natural(const TheorySpec& spec) { return spec.has_omega && validates_ao(spec); }

Verdict fun_predicate(const TheorySpec& spec, const Type& a) {
  switch (a.kind()) {
    case Type::Kind::Arrow:
      return Verdict::Yes;
    case Type::Kind::Inter:
      return tri_or(fun_predicate(spec, a.left()), fun_predicate(spec, a.right()));
    case Type::Kind::Atom: {
      if (spec.equation(a.name())) return Verdict::Yes;
      if (a.is_nu() && spec.has_nu) return Verdict::Yes;
      if (a.is_omega() && spec.has(Rule::OmegaEta)) return Verdict::Yes;
      // Remaining atoms are equation-free; only nu or omega-under-omega-eta
      // could be equivalent to nu or to arrows, and those were handled.
      return Verdict::No;
    }
  }
  return Verdict::Unknown;
}

FTypeVerdict is_f_type_theory(const TheorySpec& spec) {
  FTypeVerdict out;
  auto say = [&](Verdict v, std::string note) {
    out.verdict = v;
    out.notes.push_back(std::move(note));
    return out;
  };
  if (!validate(spec).empty()) return say(Verdict::No, "theory is not well formed");
  const bool strict = is_strict(spec);
  const bool natural = is_natural(spec);
  if (!strict && !natural) return say(Verdict::No, "neither strict nor natural");

  if (natural && spec.has(Rule::OmegaEta)) {
    if (all_plain_atoms_have_equations(spec)) {
      return say(Verdict::Yes,
                 "natural with omega-eta: every atom other than omega equals an intersection "
                 "of arrows (omega ~ omega -> omega)");
    }
    if (named_shape(spec) == NamedTheory::BCD && spec.plain_atoms().empty()) {
      out.notes.push_back("BCD over an empty set of fresh atoms is a degenerate finitization");
    }
    return say(Verdict::No,
               "natural with omega-eta: some plain atom has no equation, so it is not "
               "equivalent to an intersection of arrows");
  }
  if (strict && spec.has_nu) {
    if (all_plain_atoms_have_equations(spec)) {
      return say(Verdict::Yes, "strict with nu: every atom is nu or carries an equation");
    }
    return say(Verdict::No, "strict with nu: some plain atom is neither above nu nor "
                            "equivalent to an intersection of arrows");
  }
  if (auto shape = named_shape(spec)) {
    const std::string name(named_theory_name(*shape));
    if (*shape == NamedTheory::Ba) {
      if (!all_plain_atoms_have_equations(spec)) {
        out.notes.push_back(
            "Ba: tabulated as an F-type theory; the syntactic sufficient condition (every "
            "plain atom carries an equation) does not hold for its fresh atoms");
      }
      return say(Verdict::Yes, "Ba: tabulated F-type theory");
    }
    if (*shape == NamedTheory::AO) return say(Verdict::Yes, "AO: tabulated F-type theory");
  }
  if (all_plain_atoms_have_equations(spec)) {
    return say(Verdict::Yes, "every plain atom carries an equation");
  }
  return say(Verdict::Unknown, "no decidable case applies");
}

FunAlternativeReport fun_alternative_check(const TheorySpec& spec,
                                           const std::vector<Type>& corpus) {
  FunAlternativeReport report;
  report.precondition_met = is_f_type_theory(spec).verdict == Verdict::Yes;
  Subtyper sub(spec);
  for (const Type& a : corpus) {
    ++report.checked;
    const Verdict fun = fun_predicate(spec, a);
    bool alt = spec.has_nu && sub.eq(a, Type::nu());
    if (!alt) {
      std::vector<Type> work = normalize(spec, a).conjuncts;
      std::vector<Type> arrows;
      for (std::size_t i = 0; i < work.size(); ++i) {
        const Type c = work[i];
        if (c.is_arrow()) {
          arrows.push_back(c);
        } else if (const Type* rhs = spec.equation(c.name())) {
          for (const Type& d : normalize(spec, *rhs).conjuncts) work.push_back(d);
        } else if (c.is_omega() && spec.has(Rule::OmegaEta)) {
          arrows.push_back(Type::arrow(Type::omega(), Type::omega()));
        }
      }
      if (!arrows.empty()) {
        Type t = arrows.front();
        for (std::size_t i = 1; i < arrows.size(); ++i) t = Type::inter(t, arrows[i]);
        alt = sub.eq(a, t);
      }
    }
    if ((fun == Verdict::Yes) != alt) {
      report.mismatches.push_back(print_type(a) + ": fun " + verdict_word(fun) +
                                  ", alternative " + (alt ? "Yes" : "No"));
    }
  }
  return report;
}

AdequacyReport adequacy_report(const TheorySpec& spec) {
  AdequacyReport r;
  r.strict = is_strict(spec);
  r.natural = is_natural(spec);
  r.inference_adequate = r.strict || r.natural;
  r.simple_adequate = (r.strict && !spec.has_nu) || (r.natural && spec.has(Rule::OmegaEta));
  FTypeVerdict f = is_f_type_theory(spec);
  r.f_type_theory = f.verdict;
  r.f_adequate = f.verdict;

  r.notes.push_back(std::string("strict: ") + (r.strict ? "omega-free and validates Ba"
                                                        : "not an omega-free Ba theory"));
  r.notes.push_back(std::string("natural: ") + (r.natural ? "has omega and validates AO"
                                                          : "not an omega theory validating AO"));
  r.notes.push_back(std::string("inference semantics: ") +
                    (r.inference_adequate
                         ? "adequate, since naturality or strictness implies adequacy"
                         : "not adequate, since adequacy implies naturality or strictness"));
  if (r.simple_adequate) {
    r.notes.push_back(r.strict ? "simple semantics: adequate, strict without nu"
                               : "simple semantics: adequate, natural with omega-eta");
  } else {
    r.notes.push_back(
        "simple semantics: not adequate; adequacy holds exactly for strict theories without "
        "nu and natural theories validating omega-eta");
  }
  std::string fnote = "F-semantics: adequate iff F-type theory (" + verdict_word(f.verdict) + ")";
  r.notes.push_back(fnote);
  for (auto& n : f.notes) r.notes.push_back("F-type theory: " + n);
  return r;
}

}  // namespace itypes
