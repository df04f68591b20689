#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "itypes/oracle.hpp"
#include "itypes/theory.hpp"

using namespace itypes;

namespace {

std::set<std::string> atom_set(const TheorySpec& s) { return {s.atoms.begin(), s.atoms.end()}; }

bool has_violation(const TheorySpec& s, Violation v) {
  auto vs = validate(s);
  return std::find(vs.begin(), vs.end(), v) != vs.end();
}

}  // namespace

TEST_CASE("named theories match their tables") {
  const TheorySpec bcd = named_theory(NamedTheory::BCD, 2);
  CHECK(atom_set(bcd) == std::set<std::string>{"omega", "a0", "a1"});
  CHECK(bcd.rules == std::set<Rule>{Rule::ArrowInter, Rule::Eta, Rule::OmegaTop, Rule::OmegaEta});
  CHECK(bcd.has_omega);
  CHECK_FALSE(bcd.has_nu);

  const TheorySpec ehr = named_theory(NamedTheory::EHR, 5);
  CHECK(atom_set(ehr) == std::set<std::string>{"nu"});
  CHECK(ehr.rules == std::set<Rule>{Rule::ArrowInter, Rule::Eta, Rule::NuTop});

  const TheorySpec ao = named_theory(NamedTheory::AO, 0);
  CHECK(atom_set(ao) == std::set<std::string>{"omega"});
  CHECK(ao.rules == std::set<Rule>{Rule::ArrowInter, Rule::Eta, Rule::OmegaTop, Rule::OmegaLazy});

  const TheorySpec ba = named_theory(NamedTheory::Ba, 3);
  CHECK(atom_set(ba) == std::set<std::string>{"a0", "a1", "a2"});
  CHECK(ba.rules == std::set<Rule>{Rule::ArrowInter, Rule::Eta});
  for (const auto& s : {ba, ehr, ao, bcd}) CHECK(s.equations.empty());
}

TEST_CASE("every named theory is well formed and validates Ba") {
  for (NamedTheory n : kAllNamedTheories) {
    for (std::size_t k : {0u, 1u, 3u}) {
      const TheorySpec s = named_theory(n, k);
      CHECK(validate(s).empty());
      CHECK(validates_ba(s));
    }
  }
}

TEST_CASE("named theory names round trip") {
  for (NamedTheory n : kAllNamedTheories) {
    CHECK(named_theory_from_name(named_theory_name(n)) == n);
  }
  CHECK(named_theory_from_name("bcd") == NamedTheory::BCD);
  CHECK_FALSE(named_theory_from_name("xyz").has_value());
  for (Rule r : {Rule::OmegaTop, Rule::NuTop, Rule::OmegaEta, Rule::OmegaLazy, Rule::ArrowInter,
                 Rule::Eta}) {
    CHECK(rule_from_name(rule_name(r)) == r);
  }
}

TEST_CASE("validate reports each broken invariant") {
  TheorySpec both = named_theory(NamedTheory::BCD, 0);
  both.has_nu = true;
  both.atoms.push_back("nu");
  both.rules.insert(Rule::NuTop);
  CHECK(validate(both) == std::vector<Violation>{Violation::OmegaNuConflict});

  TheorySpec no_nu_rule = named_theory(NamedTheory::EHR, 0);
  no_nu_rule.rules.erase(Rule::NuTop);
  CHECK(validate(no_nu_rule) == std::vector<Violation>{Violation::MissingAssumption2});

  TheorySpec no_omega_rule = named_theory(NamedTheory::AO, 0);
  no_omega_rule.rules.erase(Rule::OmegaTop);
  CHECK(validate(no_omega_rule) == std::vector<Violation>{Violation::MissingAssumption1});

  TheorySpec stray = named_theory(NamedTheory::Ba, 1);
  stray.rules.insert(Rule::OmegaLazy);
  CHECK(has_violation(stray, Violation::OmegaRuleWithoutOmega));

  TheorySpec cyc = named_theory(NamedTheory::Ba, 2);
  cyc.equations.insert_or_assign("a0", parse_type("a1 -> a1"));
  cyc.equations.insert_or_assign("a1", parse_type("a0 -> a0"));
  CHECK(validate(cyc) == std::vector<Violation>{Violation::EquationCycle});

  TheorySpec self = named_theory(NamedTheory::Ba, 1);
  self.equations.insert_or_assign("a0", parse_type("a0 -> a0"));
  CHECK(has_violation(self, Violation::EquationCycle));

  TheorySpec not_arrows = named_theory(NamedTheory::Ba, 2);
  not_arrows.equations.insert_or_assign("a0", parse_type("a1"));
  CHECK(has_violation(not_arrows, Violation::EquationNotArrows));

  TheorySpec unknown = named_theory(NamedTheory::Ba, 1);
  unknown.equations.insert_or_assign("a0", parse_type("zz -> a0 & a0"));
  CHECK(has_violation(unknown, Violation::EquationUnknownAtom));
  CHECK(has_violation(unknown, Violation::EquationCycle));

  TheorySpec reserved = named_theory(NamedTheory::BCD, 0);
  reserved.equations.insert_or_assign("omega", parse_type("omega -> omega"));
  CHECK(has_violation(reserved, Violation::EquationOnReservedAtom));

  TheorySpec bad_name = named_theory(NamedTheory::Ba, 0);
  bad_name.atoms.push_back("1x");
  CHECK(has_violation(bad_name, Violation::InvalidAtomName));

  TheorySpec mismatch = named_theory(NamedTheory::Ba, 0);
  mismatch.atoms.push_back("omega");
  CHECK(has_violation(mismatch, Violation::AtomListMismatch));
}

TEST_CASE("acyclic equations validate") {
  TheorySpec s = named_theory(NamedTheory::BCD, 2);
  s.equations.insert_or_assign("a0", parse_type("(a1 -> a1) -> a1 -> a1"));
  s.equations.insert_or_assign("a1", parse_type("omega -> omega"));
  CHECK(validate(s).empty());
  CHECK(expand_equations(s, parse_type("a0")) ==
        parse_type("((omega -> omega) -> omega -> omega) -> (omega -> omega) -> omega -> omega"));
}

TEST_CASE("validates_ba and validates_ao") {
  TheorySpec only_eta;
  only_eta.rules = {Rule::Eta};
  CHECK_FALSE(validates_ba(only_eta));
  CHECK(validates_ba(named_theory(NamedTheory::BCD, 1)));
  CHECK(validates_ao(named_theory(NamedTheory::BCD, 1)));
  CHECK(validates_ao(named_theory(NamedTheory::AO, 0)));
  CHECK_FALSE(validates_ao(named_theory(NamedTheory::EHR, 0)));
  CHECK_FALSE(validates_ao(named_theory(NamedTheory::Ba, 2)));
}

TEST_CASE("omega-eta yields the lazy axiom in BCD (oracle)") {
  // Counted under validates_ao because (omega-eta) + (eta) derive A -> B <= omega -> omega.
  const TheorySpec bcd = named_theory(NamedTheory::BCD, 2);
  for (const char* src : {"a0 -> a1", "a1 -> a1 -> a0", "(a0 -> a1) -> a0"}) {
    CHECK(leq_oracle(bcd, parse_type(src, bcd), parse_type("omega -> omega", bcd), 7) ==
          OracleVerdict::Yes);
  }
}

TEST_CASE("conservative extension keeps well-formedness") {
  const TheorySpec ehr = named_theory(NamedTheory::EHR, 0).with_atoms({"a", "b", "nu", "omega"});
  CHECK(atom_set(ehr) == std::set<std::string>{"nu", "a", "b"});
  CHECK(validate(ehr).empty());
}
