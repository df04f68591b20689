#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "itypes/classify.hpp"
#include "itypes/enumerate.hpp"
#include "itypes/oracle.hpp"

using namespace itypes;
using itypes::testing::fixture;
using itypes::testing::ty;

TEST_CASE("strict and natural") {
  CHECK(is_strict(named_theory(NamedTheory::Ba, 2)));
  CHECK(is_strict(named_theory(NamedTheory::EHR, 0)));
  CHECK_FALSE(is_strict(named_theory(NamedTheory::AO, 0)));
  CHECK_FALSE(is_strict(named_theory(NamedTheory::BCD, 2)));
  CHECK(is_natural(named_theory(NamedTheory::AO, 0)));
  CHECK(is_natural(named_theory(NamedTheory::BCD, 2)));
  CHECK_FALSE(is_natural(named_theory(NamedTheory::Ba, 2)));
  CHECK_FALSE(is_natural(named_theory(NamedTheory::EHR, 0)));

  // Omega without the lazy or eta rule validates neither.
  TheorySpec bare = named_theory(NamedTheory::AO, 0);
  bare.rules.erase(Rule::OmegaLazy);
  CHECK_FALSE(is_natural(bare));
  CHECK_FALSE(is_strict(bare));
}

TEST_CASE("fun predicate examples") {
  const TheorySpec ehr = fixture(NamedTheory::EHR);
  const TheorySpec bcd = fixture(NamedTheory::BCD);
  const TheorySpec ba = fixture(NamedTheory::Ba);
  CHECK(fun_predicate(ehr, Type::nu()) == Verdict::Yes);
  CHECK(fun_predicate(bcd, Type::omega()) == Verdict::Yes);
  CHECK(fun_predicate(fixture(NamedTheory::AO), Type::omega()) == Verdict::No);
  CHECK(fun_predicate(ba, ty(ba, "(a -> b) & c")) == Verdict::Yes);
  CHECK(fun_predicate(ba, ty(ba, "a & c")) == Verdict::No);
  CHECK(fun_predicate(bcd, ty(bcd, "a0")) == Verdict::No);

  TheorySpec eq = named_theory(NamedTheory::Ba, 0).with_atoms({"p", "q"});
  eq.equations.insert_or_assign("p", ty(eq, "q -> q"));
  CHECK(fun_predicate(eq, ty(eq, "p")) == Verdict::Yes);
  CHECK(fun_predicate(eq, ty(eq, "q")) == Verdict::No);
}

TEST_CASE("fun(a0) = No in BCD: no intersection of arrows is below a0") {
  // Bounded oracle: no arrow-headed type of the universe is derived below a0.
  const TheorySpec bcd = named_theory(NamedTheory::BCD, 1);
  const auto rel = OracleRelation::saturate(bcd, {"a0"}, 5);
  const Type a0 = Type::atom("a0");
  std::size_t arrows = 0;
  for (const Type& t : rel.universe()) {
    bool all_arrows = true;
    std::vector<Type> stack{t};
    while (!stack.empty()) {
      const Type u = stack.back();
      stack.pop_back();
      if (u.is_inter()) {
        stack.push_back(u.left());
        stack.push_back(u.right());
      } else if (!u.is_arrow()) {
        all_arrows = false;
      }
    }
    if (!all_arrows) continue;
    ++arrows;
    CHECK_MESSAGE(!rel.holds(t, a0).value_or(false), print_type(t));
  }
  CHECK(arrows > 10);
}

TEST_CASE("F-type theory verdicts") {
  CHECK(is_f_type_theory(named_theory(NamedTheory::Ba, 3)).verdict == Verdict::Yes);
  CHECK(is_f_type_theory(named_theory(NamedTheory::EHR, 0)).verdict == Verdict::Yes);
  CHECK(is_f_type_theory(named_theory(NamedTheory::AO, 0)).verdict == Verdict::Yes);
  CHECK(is_f_type_theory(named_theory(NamedTheory::BCD, 3)).verdict == Verdict::No);

  // BCD whose only plain atom equals omega -> omega.
  TheorySpec bcd = named_theory(NamedTheory::BCD, 1);
  bcd.equations.insert_or_assign("a0", ty(bcd, "omega -> omega"));
  CHECK(is_f_type_theory(bcd).verdict == Verdict::Yes);

  // EHR plus an equation-free atom loses the property.
  CHECK(is_f_type_theory(named_theory(NamedTheory::EHR, 0).with_atoms({"a"})).verdict ==
        Verdict::No);

  TheorySpec broken = named_theory(NamedTheory::AO, 0);
  broken.rules.erase(Rule::OmegaTop);
  CHECK(is_f_type_theory(broken).verdict == Verdict::No);
}

TEST_CASE("fun alternative characterization") {
  const TheorySpec ehr = named_theory(NamedTheory::EHR, 0).with_atoms({"a", "b"});
  const TheorySpec ao = named_theory(NamedTheory::AO, 0).with_atoms({"a", "b"});
  auto one = [](const TheorySpec& s, const char* src) {
    return fun_alternative_check(s, {parse_type(src, s)});
  };
  CHECK(one(ehr, "a -> b").mismatches.empty());
  CHECK(one(ao, "omega & (a -> b)").mismatches.empty());
  CHECK(one(ehr, "nu & (a -> b)").mismatches.empty());
  CHECK(one(ehr, "nu").mismatches.empty());
  CHECK(one(ehr, "a & b").mismatches.empty());

  // Precondition is reported; AO over a, b is not an F-type theory.
  CHECK(fun_alternative_check(named_theory(NamedTheory::AO, 0), {}).precondition_met);
  CHECK_FALSE(one(ao, "a").precondition_met);

  // With equation-free atoms the two readings can disagree: a & (a -> a) is
  // functional but not equivalent to an intersection of arrows.
  const TheorySpec ba = named_theory(NamedTheory::Ba, 1);
  const auto r = fun_alternative_check(ba, {parse_type("a0 & (a0 -> a0)", ba)});
  CHECK(r.mismatches.size() == 1);
}

TEST_CASE("fun alternative over the pure AO and EHR enumerations") {
  for (NamedTheory n : {NamedTheory::AO, NamedTheory::EHR}) {
    const TheorySpec s = named_theory(n, 0);
    const auto atoms = s.has_omega ? std::vector<std::string>{"omega"}
                                   : std::vector<std::string>{"nu"};
    const auto r = fun_alternative_check(s, enumerate_types(atoms, 7));
    CHECK(r.precondition_met);
    CHECK(r.checked == 51);
    CHECK_MESSAGE(r.mismatches.empty(), (r.mismatches.empty() ? "" : r.mismatches.front()));
  }
}

TEST_CASE("adequacy table of the named theories") {
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
  for (const Row& row : rows) {
    CAPTURE(named_theory_name(row.n));
    const AdequacyReport r = adequacy_report(named_theory(row.n, 3));
    CHECK(r.strict == row.strict);
    CHECK(r.natural == row.natural);
    CHECK(r.inference_adequate);
    CHECK(r.simple_adequate == row.simple);
    CHECK(r.f_type_theory == row.f);
    CHECK(r.f_adequate == row.f);
    CHECK_FALSE(r.notes.empty());
  }
}
