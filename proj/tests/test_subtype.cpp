#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <thread>

#include "helpers.hpp"
#include "itypes/enumerate.hpp"
#include "itypes/oracle.hpp"
#include "itypes/subtype.hpp"

using namespace itypes;
using itypes::testing::fixture;
using itypes::testing::ty;

namespace {

TheorySpec law_theory(NamedTheory n) { return named_theory(n, 0).with_atoms({"a0", "a1"}); }

std::vector<std::string> law_atoms(const TheorySpec& s) {
  std::vector<std::string> out{"a0", "a1"};
  if (s.has_omega) out.push_back("omega");
  if (s.has_nu) out.push_back("nu");
  return out;
}

}  // namespace

TEST_CASE("normalize examples") {
  const TheorySpec bcd = fixture(NamedTheory::BCD);
  const TheorySpec ba = fixture(NamedTheory::Ba);
  NormalType n = normalize(bcd, ty(bcd, "a & (a & b)"));
  CHECK(n.conjuncts == std::vector<Type>{ty(bcd, "a"), ty(bcd, "b")});
  CHECK_FALSE(n.is_top);

  n = normalize(bcd, ty(bcd, "omega & a"));
  CHECK(n.conjuncts == std::vector<Type>{ty(bcd, "a")});
  // Both directions of the drop, by saturation.
  CHECK(leq_oracle(bcd, ty(bcd, "a"), ty(bcd, "omega & a"), 3) == OracleVerdict::Yes);
  CHECK(leq_oracle(bcd, ty(bcd, "omega & a"), ty(bcd, "a"), 3) == OracleVerdict::Yes);

  n = normalize(ba, ty(ba, "(a -> b) & (a -> b)"));
  CHECK(n.conjuncts == std::vector<Type>{ty(ba, "a -> b")});

  n = normalize(bcd, ty(bcd, "omega & omega"));
  CHECK(n.is_top);
  CHECK(n.conjuncts == std::vector<Type>{Type::omega()});

  n = normalize(ba, ty(ba, "(b -> a) & b & (a -> a) & a"));
  CHECK(print_type(denormalize(n)) == "a & b & (a -> a) & (b -> a)");
}

TEST_CASE("golden subtyping") {
  const TheorySpec bcd = fixture(NamedTheory::BCD);
  const TheorySpec ao = fixture(NamedTheory::AO);
  const TheorySpec ehr = fixture(NamedTheory::EHR);
  const TheorySpec ba = fixture(NamedTheory::Ba);
  CHECK(leq(bcd, ty(bcd, "omega"), ty(bcd, "omega -> omega")));
  CHECK(leq(bcd, ty(bcd, "(a->b) & (a->c)"), ty(bcd, "a -> b & c")));
  CHECK(leq(ao, ty(ao, "a -> b"), ty(ao, "omega -> omega")));
  CHECK(leq(ehr, ty(ehr, "a -> b"), ty(ehr, "nu")));
  CHECK(leq(bcd, ty(bcd, "(a->b)&c"), ty(bcd, "a->b")));

  CHECK_FALSE(leq(ba, ty(ba, "a"), ty(ba, "b")));
  CHECK(leq_oracle(ba, ty(ba, "a"), ty(ba, "b"), 7) == OracleVerdict::NotFound);

  CHECK(eq(bcd, ty(bcd, "omega"), ty(bcd, "omega -> omega")));
  CHECK(eq(ba, ty(ba, "a & b"), ty(ba, "b & a")));
  CHECK_FALSE(eq(ao, ty(ao, "omega"), ty(ao, "omega -> omega")));
  CHECK(leq_oracle(ao, ty(ao, "omega"), ty(ao, "omega -> omega"), 7) == OracleVerdict::NotFound);
}

TEST_CASE("more subtyping facts") {
  const TheorySpec bcd = fixture(NamedTheory::BCD);
  const TheorySpec ao = fixture(NamedTheory::AO);
  const TheorySpec ehr = fixture(NamedTheory::EHR);
  CHECK(leq(bcd, ty(bcd, "a -> b"), ty(bcd, "a & c -> b")));
  CHECK_FALSE(leq(bcd, ty(bcd, "a & c -> b"), ty(bcd, "a -> b")));
  CHECK(leq(bcd, ty(bcd, "omega"), ty(bcd, "a -> omega")));
  CHECK_FALSE(leq(ao, ty(ao, "omega"), ty(ao, "a -> omega")));
  CHECK(leq(ao, ty(ao, "b -> c"), ty(ao, "a -> omega")));
  CHECK_FALSE(leq(ehr, ty(ehr, "nu"), ty(ehr, "a -> b")));
  CHECK_FALSE(leq(ehr, ty(ehr, "a"), ty(ehr, "nu")));
  CHECK(leq(ehr, ty(ehr, "a & (b -> c)"), ty(ehr, "nu & a")));
}

TEST_CASE("unsupported theories are rejected") {
  TheorySpec only_eta = named_theory(NamedTheory::Ba, 1);
  only_eta.rules.erase(Rule::ArrowInter);
  CHECK_THROWS_AS(Subtyper{only_eta}, UnsupportedTheory);
  const Type a = Type::atom("a0");
  CHECK_THROWS_AS(leq(only_eta, a, a), UnsupportedTheory);
  // The oracle still works without Ba.
  CHECK(leq_oracle(only_eta, a, a, 1) == OracleVerdict::Yes);
}

TEST_CASE("oracle examples") {
  const TheorySpec bcd = fixture(NamedTheory::BCD);
  const TheorySpec ba = fixture(NamedTheory::Ba);
  CHECK(leq_oracle(bcd, ty(bcd, "a"), ty(bcd, "omega"), 3) == OracleVerdict::Yes);
  CHECK(leq_oracle(ba, ty(ba, "a"), ty(ba, "a"), 1) == OracleVerdict::Yes);
  CHECK(leq_oracle(bcd, ty(bcd, "(a->b)&(a->c)"), ty(bcd, "a -> b & c"), 8) ==
        OracleVerdict::Yes);
  CHECK_THROWS_AS(leq_oracle(bcd, ty(bcd, "a"), ty(bcd, "b"), 13, 1000), ResourceLimit);
}

TEST_CASE("equation atoms unfold and fold") {
  TheorySpec s = fixture(NamedTheory::BCD);
  s.equations.insert_or_assign("a", ty(s, "(b -> b) -> b -> b"));
  REQUIRE(validate(s).empty());
  CHECK(eq(s, ty(s, "a"), ty(s, "(b -> b) -> b -> b")));
  CHECK(leq(s, ty(s, "a"), ty(s, "(b -> b) & c -> b -> b")));
  CHECK_FALSE(leq(s, ty(s, "a"), ty(s, "c")));
  CHECK(leq(s, ty(s, "a & (omega -> omega)"), ty(s, "a")));
  const ProofPtr p = leq_proof(s, ty(s, "(b -> b) -> b -> b"), ty(s, "a"));
  REQUIRE(p);
  CHECK(check_subtype_proof(s, *p));
}

TEST_CASE("proof checker rejects bad proofs") {
  const TheorySpec ba = fixture(NamedTheory::Ba);
  const SubtypeProof bogus{SubRule::Refl, ty(ba, "a"), ty(ba, "b"), {}};
  CHECK_FALSE(check_subtype_proof(ba, bogus));
  const SubtypeProof omega_in_ba{SubRule::OmegaTop, ty(ba, "a"), Type::omega(), {}};
  CHECK_FALSE(check_subtype_proof(ba, omega_in_ba));
  auto refl = std::make_shared<SubtypeProof>(SubtypeProof{SubRule::Refl, ty(ba, "a"), ty(ba, "a"), {}});
  const SubtypeProof bad_trans{SubRule::Trans, ty(ba, "a"), ty(ba, "b"), {refl, refl}};
  CHECK_FALSE(check_subtype_proof(ba, bad_trans));
  const SubtypeProof incl{SubRule::InclL, ty(ba, "a & b"), ty(ba, "a"), {}};
  CHECK(check_subtype_proof(ba, incl));
}

TEST_CASE("preorder laws over enumerated types") {
  for (NamedTheory n : kAllNamedTheories) {
    const TheorySpec s = law_theory(n);
    Subtyper sub(s);
    const auto types = enumerate_types(law_atoms(s), 5);
    CAPTURE(named_theory_name(n));
    for (const Type& a : types) {
      REQUIRE(sub.leq(a, a));
      for (const Type& b : types) {
        CHECK(sub.leq(Type::inter(a, b), a));
        CHECK(sub.leq(Type::inter(a, b), b));
        if (a.size() + b.size() > 6) continue;
        CHECK(sub.leq(Type::inter(Type::arrow(a, b), Type::arrow(a, a)),
                      Type::arrow(a, Type::inter(b, a))));
      }
    }
  }
}

TEST_CASE("transitivity over canonical types of size 5") {
  for (NamedTheory n : kAllNamedTheories) {
    const TheorySpec s = law_theory(n);
    Subtyper sub(s);
    const auto types = enumerate_canonical(s, law_atoms(s), 5);
    const std::size_t k = types.size();
    std::vector<char> rel(k * k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) rel[i * k + j] = sub.leq(types[i], types[j]);
    }
    std::size_t failures = 0;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        if (!rel[i * k + j]) continue;
        for (std::size_t l = 0; l < k; ++l) {
          if (rel[j * k + l] && !rel[i * k + l]) ++failures;
        }
      }
    }
    CAPTURE(named_theory_name(n));
    CHECK(failures == 0);
  }
}

TEST_CASE("oracle agreement and proof traces for pairs up to size 5") {
  for (NamedTheory n : kAllNamedTheories) {
    const TheorySpec s = law_theory(n);
    Subtyper sub(s);
    const auto atoms = law_atoms(s);
    const auto rel = OracleRelation::saturate(s, atoms, 7);
    const auto types = enumerate_types(atoms, 5);
    std::size_t oracle_yes = 0;
    std::size_t leq_yes = 0;
    std::size_t disagreements = 0;
    std::size_t bad_proofs = 0;
    for (const Type& a : types) {
      for (const Type& b : types) {
        const bool o = rel.holds(a, b).value();
        const ProofPtr p = sub.prove(a, b);
        oracle_yes += o;
        leq_yes += p != nullptr;
        if (o && !p) ++disagreements;
        if (p) {
          const ProofCheck c = check_subtype_proof(s, *p);
          if (!c) {
            ++bad_proofs;
            if (bad_proofs == 1) MESSAGE(print_type(a) << " <= " << print_type(b) << ": " << c.message);
          }
          if (p->lhs != a || p->rhs != b) ++bad_proofs;
        }
      }
    }
    CAPTURE(named_theory_name(n));
    CHECK(disagreements == 0);
    CHECK(bad_proofs == 0);
    CHECK(leq_yes >= oracle_yes);
    MESSAGE(named_theory_name(n) << ": oracle " << oracle_yes << ", leq " << leq_yes);
  }
}

TEST_CASE("normalize is idempotent and preserves equivalence") {
  for (NamedTheory n : kAllNamedTheories) {
    const TheorySpec s = law_theory(n);
    Subtyper sub(s);
    for (const Type& t : enumerate_types(law_atoms(s), 7)) {
      const Type c = canonical(s, t);
      REQUIRE(canonical(s, c) == c);
      REQUIRE(sub.eq(t, c));
    }
  }
}

TEST_CASE("in BCD omega is below C -> D exactly when D is omega") {
  const TheorySpec s = law_theory(NamedTheory::BCD);
  Subtyper sub(s);
  const auto types = enumerate_types(law_atoms(s), 5);
  for (const Type& c : types) {
    for (const Type& d : types) {
      CHECK(sub.leq(Type::omega(), Type::arrow(c, d)) == sub.eq(d, Type::omega()));
    }
  }
}

TEST_CASE("a shared Subtyper gives the same answers across threads") {
  const TheorySpec s = law_theory(NamedTheory::BCD);
  const auto types = enumerate_types(law_atoms(s), 5);
  Subtyper reference(s);
  std::vector<char> expected;
  for (const Type& a : types) expected.push_back(reference.leq(a, types.back()));

  Subtyper shared(s);
  std::vector<std::vector<char>> got(4);
  std::vector<std::thread> pool;
  for (int t = 0; t < 4; ++t) {
    pool.emplace_back([&, t] {
      for (const Type& a : types) got[t].push_back(shared.leq(a, types.back()));
    });
  }
  for (auto& th : pool) th.join();
  for (const auto& g : got) CHECK(g == expected);
}
