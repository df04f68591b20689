#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "itypes/laws.hpp"

using namespace itypes;

TEST_CASE("law universe") {
  const LawUniverse ehr = law_universe(named_theory(NamedTheory::EHR, 0));
  CHECK(ehr.atoms == std::vector<std::string>{"a0", "a1", "nu"});
  const LawUniverse ba = law_universe(named_theory(NamedTheory::Ba, 3));
  CHECK(ba.atoms == std::vector<std::string>{"a0", "a1"});
  CHECK(ba.spec.plain_atoms().size() == 3);
}

TEST_CASE("every law passes at size 3") {
  LawConfig cfg;
  cfg.size = 3;
  cfg.samples = 500;
  cfg.oracle_bound = 5;
  for (NamedTheory n : kAllNamedTheories) {
    for (const LawResult& r : all_laws(named_theory(n, 2), cfg)) {
      CAPTURE(named_theory_name(n));
      CAPTURE(r.name);
      CHECK_MESSAGE(r.passed(), r.first_failure);
    }
  }
}

TEST_CASE("yes corpus is deterministic and derivable") {
  LawConfig cfg;
  const TheorySpec ao = named_theory(NamedTheory::AO, 0);
  const auto a = yes_corpus(ao, 50, cfg);
  const auto b = yes_corpus(ao, 50, cfg);
  REQUIRE(a.size() == 50);
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(print_judgment(a[i]) == print_judgment(b[i]));
  CHECK(generation_law(ao, a, cfg).passed());
}

TEST_CASE("a failing law is reported") {
  // A judgment that does not hold must fail the round trip.
  LawConfig cfg;
  const TheorySpec ba = named_theory(NamedTheory::Ba, 2);
  const std::vector<Judgment> bad{{{}, parse_term("\\x. x"), parse_type("a0 -> a1", ba)}};
  const LawResult r = generation_law(ba, bad, cfg);
  CHECK_FALSE(r.passed());
  CHECK(r.failures == 1);
  CHECK_FALSE(r.first_failure.empty());
}
