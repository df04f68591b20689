// Acceptance run: one PASS/FAIL line per criterion; exit status 0 iff all pass.

#include <iostream>

#include "itypes/classify.hpp"
#include "itypes/enumerate.hpp"
#include "itypes/filter.hpp"
#include "itypes/laws.hpp"
#include "itypes/subtype.hpp"

using namespace itypes;

namespace {

int failed = 0;

void report(int n, bool ok, const std::string& what) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << n << ": " << what << std::endl;
  failed += !ok;
}

// Folds law results into one verdict; returns the first failure, if any.
struct Fold {
  std::size_t checked = 0;
  std::string first;
  bool ok = true;
  void add(const std::string& theory, const LawResult& r) {
    checked += r.checked;
    if (r.passed()) return;
    if (ok) first = theory + " " + r.name + ": " + r.first_failure;
    ok = false;
  }
  std::string tail() const { return ok ? "" : "; first failure " + first; }
};

TheorySpec with_abc(NamedTheory n) { return named_theory(n, 0).with_atoms({"a", "b", "c"}); }

std::string name(NamedTheory n) { return std::string(named_theory_name(n)); }

void golden_subtyping() {
  const TheorySpec bcd = with_abc(NamedTheory::BCD);
  const TheorySpec ao = with_abc(NamedTheory::AO);
  const TheorySpec ehr = with_abc(NamedTheory::EHR);
  const TheorySpec ba = with_abc(NamedTheory::Ba);
  auto leq = [](const TheorySpec& s, const char* a, const char* b) {
    return Subtyper(s).leq(parse_type(a, s), parse_type(b, s));
  };
  const bool ok = leq(bcd, "omega", "omega -> omega") && leq(bcd, "omega -> omega", "omega") &&
                  leq(bcd, "(a -> b) & (a -> c)", "a -> b & c") &&
                  leq(ao, "a -> b", "omega -> omega") && !leq(ao, "omega", "omega -> omega") &&
                  leq(ehr, "a -> b", "nu") && !leq(ba, "a", "b") && !leq(ba, "b", "a");
  report(1, ok, "golden subtyping table (8 judgments)");
}

void oracle_agreement_all() {
  Fold f;
  LawConfig cfg;
  for (NamedTheory n : kAllNamedTheories) f.add(name(n), oracle_agreement(named_theory(n, 0), cfg));
  report(2, f.ok && f.checked >= 10000,
         "oracle agreement with checked proof traces, " + std::to_string(f.checked) +
             " pairs of size <= 5 over 2 atoms" + f.tail());
}

void preorder_all() {
  Fold f;
  LawConfig cfg;
  for (NamedTheory n : kAllNamedTheories) {
    for (const auto& r : preorder_laws(named_theory(n, 0), cfg)) f.add(name(n), r);
  }
  report(3, f.ok,
         "refl, trans, idem, incl, mon, eta, arrow-inter: " + std::to_string(f.checked) +
             " instances" + f.tail());
}

void golden_typings() {
  const Term delta = parse_term("\\x. x x");
  const Term k = parse_term("\\y. \\x. x");
  const Term omega_term = Term::app(delta, delta);
  auto verdict = [](const TheorySpec& s, const Term& m, const char* a) {
    return derives(s, {}, m, parse_type(a, s)).verdict;
  };
  const TheorySpec ba = with_abc(NamedTheory::Ba);
  const TheorySpec ao = with_abc(NamedTheory::AO);
  const TheorySpec ehr = with_abc(NamedTheory::EHR);
  const Verdict v1 = verdict(ba, delta, "(a -> b) & a -> b");
  const Verdict v2 = verdict(ao, Term::app(k, omega_term), "a -> a");
  const Verdict v3 = verdict(ehr, Term::app(k, Term::lam("z", omega_term)), "a -> a");
  const Verdict v4 = verdict(ehr, Term::app(k, omega_term), "a -> a");
  report(4, v1 == Verdict::Yes && v2 == Verdict::Yes && v3 == Verdict::Yes && v4 != Verdict::Yes,
         "golden typings (yes, yes, yes, " + std::string(verdict_name(v4)) + ")");
}

void generation_and_admissibility() {
  Fold f;
  LawConfig cfg;
  std::size_t judgments = 0;
  for (NamedTheory n : kAllNamedTheories) {
    const TheorySpec s = named_theory(n, 0);
    const auto corpus = yes_corpus(s, 50, cfg);
    judgments += corpus.size();
    if (corpus.size() < 50) f.add(name(n), {"corpus", 1, 1, "fewer than 50 judgments", ""});
    f.add(name(n), generation_law(s, corpus, cfg));
    f.add(name(n), admissibility_law(s, corpus, cfg));
  }
  report(5, f.ok,
         "generation round trip and admissible rules on " + std::to_string(judgments) +
             " judgments (50 per theory)" + f.tail());
}

void interpretation() {
  Fold f;
  LawConfig cfg;
  const std::vector<Term> closed{parse_term("\\x. x"), parse_term("\\x. \\y. x"),
                                 parse_term("\\x. x x"), parse_term("\\z. z z")};
  std::size_t agree = 0;
  for (NamedTheory n : kAllNamedTheories) {
    const TheorySpec s = named_theory(n, 0);
    const LawUniverse u = law_universe(s);
    // interpret_member against derives on the closed terms.
    LawResult direct{"interpret-vs-derives", 0, 0, "", ""};
    for (const Term& m : closed) {
      for (const Type& a : enumerate_canonical(u.spec, u.atoms, 3)) {
        ++direct.checked;
        const bool i = interpret_member(u.spec, m, {}, a, cfg.budget) == Verdict::Yes;
        const bool d = derives(u.spec, {}, m, a, cfg.budget).verdict == Verdict::Yes;
        if (i != d && direct.failures++ == 0) direct.first_failure = print_term(m) + " : " + print_type(a);
      }
    }
    f.add(name(n), direct);
    // Compositional denotation against search, with open terms and environments.
    const LawResult den = interpretation_law(s, cfg);
    agree += den.checked;
    f.add(name(n), den);
    f.add(name(n), prop_simple_law(s, cfg));
  }
  report(6, f.ok,
         "interpretation = derivable types (" + std::to_string(agree) +
             " denotation comparisons) and simple-property harness" + f.tail());
}

void classification() {
  struct Row {
    NamedTheory n;
    bool strict, natural, simple;
    Verdict f;
  };
  const Row rows[] = {
      {NamedTheory::Ba, true, false, true, Verdict::Yes},
      {NamedTheory::EHR, true, false, false, Verdict::Yes},
      {NamedTheory::AO, false, true, false, Verdict::Yes},
      {NamedTheory::BCD, false, true, true, Verdict::No},
  };
  bool ok = true;
  std::string bad;
  for (const Row& row : rows) {
    const AdequacyReport r = adequacy_report(named_theory(row.n, 3));
    const bool match = r.strict == row.strict && r.natural == row.natural &&
                       r.simple_adequate == row.simple && r.f_type_theory == row.f &&
                       r.f_adequate == row.f && r.inference_adequate;
    if (!match && ok) bad = "; mismatch on " + name(row.n);
    ok = ok && match;
  }
  report(7, ok, "classification table for Ba, EHR, AO, BCD" + bad);
}

void filter_laws_all() {
  Fold f;
  LawConfig cfg;
  for (NamedTheory n : kAllNamedTheories) {
    const TheorySpec s = named_theory(n, 0);
    for (const auto& r : filter_closure_laws(s, cfg)) f.add(name(n), r);
    f.add(name(n), apply_monotonicity(s, cfg));
  }
  report(8, f.ok,
         "filter upward and intersection closure, apply monotonicity: " +
             std::to_string(f.checked) + " instances at size <= 5" + f.tail());
}

}  // namespace

int main() {
  golden_subtyping();
  oracle_agreement_all();
  preorder_all();
  golden_typings();
  generation_and_admissibility();
  interpretation();
  classification();
  filter_laws_all();
  return failed == 0 ? 0 : 1;
}
