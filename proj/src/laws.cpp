#include "itypes/laws.hpp"

#include <algorithm>
#include <random>

#include "itypes/classify.hpp"
#include "itypes/enumerate.hpp"
#include "itypes/filter.hpp"
#include "itypes/oracle.hpp"
#include "itypes/subtype.hpp"

namespace itypes {

namespace {

struct Tally {
  LawResult r;
  explicit Tally(std::string name) { r.name = std::move(name); }
  void check(bool ok, const std::string& what) {
    ++r.checked;
    if (ok) return;
    if (r.failures++ == 0) r.first_failure = what;
  }
  // Lazily built message; only evaluated on failure.
  template <typename F>
  void check_with(bool ok, F&& what) {
    ++r.checked;
    if (ok) return;
    if (r.failures++ == 0) r.first_failure = what();
  }
};

std::string pair_str(const Type& a, const Type& b) {
  return print_type(a) + " <= " + print_type(b);
}

Type random_type(std::mt19937_64& rng, const std::vector<std::string>& atoms, std::size_t size) {
  if (size <= 1) return Type::atom(atoms[rng() % atoms.size()]);
  const std::size_t inner = size - 1;
  const std::size_t l = 2 * (rng() % (inner / 2)) + 1;
  Type left = random_type(rng, atoms, l);
  Type right = random_type(rng, atoms, inner - l);
  return rng() % 2 ? Type::arrow(left, right) : Type::inter(left, right);
}

Term random_term(std::mt19937_64& rng, const std::vector<std::string>& vars, std::size_t size) {
  if (size <= 1) return Term::var(vars[rng() % vars.size()]);
  if (size == 2 || rng() % 3 == 0) {
    return Term::lam(vars[rng() % vars.size()], random_term(rng, vars, size - 1));
  }
  const std::size_t l = 1 + rng() % (size - 2);
  return Term::app(random_term(rng, vars, l), random_term(rng, vars, size - 1 - l));
}

Term rename_binders(const Term& t, int& counter, const std::map<std::string, std::string>& env) {
  switch (t.kind()) {
    case Term::Kind::Var: {
      auto it = env.find(t.name());
      return Term::var(it == env.end() ? t.name() : it->second);
    }
    case Term::Kind::Lam: {
      auto inner = env;
      const std::string fresh = "r" + std::to_string(counter++);
      inner.insert_or_assign(t.name(), fresh);
      return Term::lam(fresh, rename_binders(t.body(), counter, inner));
    }
    case Term::Kind::App:
      return Term::app(rename_binders(t.fun(), counter, env),
                       rename_binders(t.arg(), counter, env));
  }
  return t;
}

const Term& delta() {
  static const Term d = parse_term("\\x. x x");
  return d;
}

}  // namespace

LawUniverse law_universe(const TheorySpec& spec) {
  LawUniverse u{spec, {}};
  std::vector<std::string> plain = spec.plain_atoms();
  for (std::size_t i = 0; plain.size() < 2; ++i) {
    const std::string fresh = "a" + std::to_string(i);
    if (!spec.has_atom(fresh)) {
      u.spec = u.spec.with_atoms({fresh});
      plain.push_back(fresh);
    }
  }
  u.atoms = {plain[0], plain[1]};
  if (spec.has_omega) u.atoms.push_back(std::string(kOmega));
  if (spec.has_nu) u.atoms.push_back(std::string(kNu));
  return u;
}

// ------------------------------------------------------------- syntax, theory

std::vector<LawResult> syntax_laws(const LawConfig& cfg) {
  std::mt19937_64 rng(cfg.seed);
  Tally types("syntax/type-roundtrip");
  const std::vector<std::string> atoms{"a", "b", "omega", "nu"};
  for (int i = 0; i < 1000; ++i) {
    const Type t = random_type(rng, atoms, 2 * (rng() % 25) + 1);
    const std::string s = print_type(t);
    types.check(parse_type(s) == t, s);
  }
  Tally terms("syntax/term-roundtrip");
  const std::vector<std::string> vars{"x", "y", "z"};
  for (int i = 0; i < 1000; ++i) {
    const Term t = random_term(rng, vars, 1 + rng() % 50);
    const std::string s = print_term(t);
    terms.check(alpha_eq(parse_term(s), t) && print_term(parse_term(s)) == s, s);
  }
  return {types.r, terms.r};
}

std::vector<LawResult> theory_laws(const TheorySpec& spec) {
  Tally wf("theory/well-formed");
  for (Violation v : validate(spec)) wf.check(false, std::string(violation_name(v)));
  wf.check(true, "");
  Tally ba("theory/validates-ba");
  ba.check(validates_ba(spec), spec.name);
  return {wf.r, ba.r};
}

// ------------------------------------------------------------- subtype

std::vector<LawResult> preorder_laws(const TheorySpec& spec, const LawConfig& cfg) {
  const LawUniverse u = law_universe(spec);
  Subtyper sub(u.spec);
  std::mt19937_64 rng(cfg.seed);
  const auto raw = enumerate_types(u.atoms, cfg.size);
  const auto canon = enumerate_canonical(u.spec, u.atoms, cfg.size);

  Tally refl("subtype/refl");
  Tally idem("subtype/idem");
  for (const Type& a : enumerate_types(u.atoms, cfg.size + 2)) {
    refl.check_with(sub.leq(a, a), [&] { return pair_str(a, a); });
    idem.check_with(sub.leq(a, Type::inter(a, a)), [&] { return pair_str(a, Type::inter(a, a)); });
  }

  Tally incl("subtype/incl");
  Tally arrow_inter("subtype/arrow-inter");
  for (const Type& a : raw) {
    for (const Type& b : raw) {
      const Type ab = Type::inter(a, b);
      incl.check_with(sub.leq(ab, a) && sub.leq(ab, b), [&] { return print_type(ab); });
    }
  }
  for (const Type& a : canon) {
    for (const Type& b : canon) {
      for (const Type& c : canon) {
        if (a.size() + b.size() + c.size() > cfg.size + 4) continue;
        const Type lhs = Type::inter(Type::arrow(a, b), Type::arrow(a, c));
        const Type rhs = Type::arrow(a, Type::inter(b, c));
        arrow_inter.check_with(sub.leq(lhs, rhs), [&] { return pair_str(lhs, rhs); });
      }
    }
  }

  // Relation matrix over canonical types.
  const std::size_t k = canon.size();
  std::vector<char> rel(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) rel[i * k + j] = sub.leq(canon[i], canon[j]);
  }
  Tally trans("subtype/trans");
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (!rel[i * k + j]) continue;
      for (std::size_t l = 0; l < k; ++l) {
        if (!rel[j * k + l]) continue;
        trans.check_with(rel[i * k + l] != 0, [&] {
          return pair_str(canon[i], canon[j]) + " and " + pair_str(canon[j], canon[l]);
        });
      }
    }
  }

  // mon and eta: exhaustive on related pairs of size <= 3, sampled above.
  std::vector<std::pair<std::size_t, std::size_t>> related;
  std::vector<std::pair<std::size_t, std::size_t>> related_small;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (!rel[i * k + j]) continue;
      related.emplace_back(i, j);
      if (canon[i].size() <= 3 && canon[j].size() <= 3) related_small.emplace_back(i, j);
    }
  }
  Tally mon("subtype/mon");
  Tally eta("subtype/eta");
  auto instance = [&](std::pair<std::size_t, std::size_t> p, std::pair<std::size_t, std::size_t> q) {
    const Type& a = canon[p.first];
    const Type& a2 = canon[p.second];
    const Type& b = canon[q.first];
    const Type& b2 = canon[q.second];
    const Type l = Type::inter(a, b);
    const Type r = Type::inter(a2, b2);
    mon.check_with(sub.leq(l, r), [&] { return pair_str(l, r); });
    // a <= a2 and b <= b2 give a2 -> b <= a -> b2.
    const Type el = Type::arrow(a2, b);
    const Type er = Type::arrow(a, b2);
    eta.check_with(sub.leq(el, er), [&] { return pair_str(el, er); });
  };
  for (const auto& p : related_small) {
    for (const auto& q : related_small) instance(p, q);
  }
  for (std::size_t s = 0; s < cfg.samples && !related.empty(); ++s) {
    instance(related[rng() % related.size()], related[rng() % related.size()]);
  }
  mon.r.note = eta.r.note = "exhaustive at size 3, " + std::to_string(cfg.samples) +
                            " sampled instances at size " + std::to_string(cfg.size);
  return {refl.r, trans.r, idem.r, incl.r, mon.r, eta.r, arrow_inter.r};
}

LawResult oracle_agreement(const TheorySpec& spec, const LawConfig& cfg) {
  const LawUniverse u = law_universe(spec);
  Subtyper sub(u.spec);
  Tally t("subtype/oracle-agreement");
  const std::size_t pair_size = std::min<std::size_t>(cfg.size, 5);
  const auto rel = OracleRelation::saturate(u.spec, u.atoms, cfg.oracle_bound);
  const auto types = enumerate_types(u.atoms, pair_size);
  std::size_t oracle_yes = 0;
  std::size_t leq_yes = 0;
  for (const Type& a : types) {
    for (const Type& b : types) {
      const bool o = rel.holds(a, b).value_or(false);
      const ProofPtr p = sub.prove(a, b);
      oracle_yes += o;
      leq_yes += p != nullptr;
      bool ok = !o || p;
      std::string why;
      if (p) {
        const ProofCheck c = check_subtype_proof(u.spec, *p);
        if (!c) why = "proof rejected: " + c.message;
        if (p->lhs != a || p->rhs != b) why = "proof concludes the wrong pair";
        ok = ok && c && p->lhs == a && p->rhs == b;
      } else if (o) {
        why = "oracle derives it, leq refutes it";
      }
      t.check_with(ok, [&] { return pair_str(a, b) + ": " + why; });
    }
  }
  t.r.note = std::to_string(types.size() * types.size()) + " pairs, oracle bound " +
             std::to_string(cfg.oracle_bound) + " (universe " +
             std::to_string(rel.universe_size()) + "); oracle yes " + std::to_string(oracle_yes) +
             ", leq yes " + std::to_string(leq_yes);
  return t.r;
}

std::vector<LawResult> subtype_laws(const TheorySpec& spec, const LawConfig& cfg) {
  std::vector<LawResult> out = preorder_laws(spec, cfg);
  out.push_back(oracle_agreement(spec, cfg));

  const LawUniverse u = law_universe(spec);
  Subtyper sub(u.spec);
  Tally norm("subtype/normalize");
  for (const Type& t : enumerate_types(u.atoms, cfg.size)) {
    const Type c = canonical(u.spec, t);
    norm.check_with(canonical(u.spec, c) == c && sub.eq(t, c), [&] { return print_type(t); });
  }
  out.push_back(norm.r);

  if (spec.has(Rule::OmegaEta)) {
    Tally top("subtype/omega-below-arrow");
    const auto types = enumerate_types(u.atoms, std::min<std::size_t>(cfg.size, 5));
    for (const Type& c : types) {
      for (const Type& d : types) {
        const Type cd = Type::arrow(c, d);
        top.check_with(sub.leq(Type::omega(), cd) == sub.eq(d, Type::omega()),
                       [&] { return print_type(cd); });
      }
    }
    out.push_back(top.r);
  }
  return out;
}

// ------------------------------------------------------------- assign

std::vector<Judgment> yes_corpus(const TheorySpec& spec, std::size_t count, const LawConfig& cfg) {
  const LawUniverse u = law_universe(spec);
  Searcher search(u.spec, cfg.budget);
  const Type p = Type::atom(u.atoms[0]);
  const Type q = Type::atom(u.atoms[1]);
  std::vector<Judgment> golden{
      {{}, delta(), Type::arrow(Type::inter(Type::arrow(p, q), p), q)},
      {{}, parse_term("\\x. x"), Type::arrow(p, p)},
      {{}, parse_term("\\x. x"), Type::inter(Type::arrow(p, p), Type::arrow(q, q))},
  };
  const Term k = parse_term("\\y. \\x. x");
  if (spec.has_omega) golden.push_back({{}, Term::app(k, Term::app(delta(), delta())), Type::arrow(p, p)});
  if (spec.has_nu) {
    golden.push_back(
        {{}, Term::app(k, Term::lam("z", Term::app(delta(), delta()))), Type::arrow(p, p)});
  }
  std::vector<Judgment> out;
  for (const Judgment& j : golden) {
    if (out.size() < count && search.derives(j.ctx, j.term, j.type).verdict == Verdict::Yes) {
      out.push_back(j);
    }
  }
  std::mt19937_64 rng(cfg.seed ^ 0x9e3779b97f4a7c15ULL);
  const auto types = enumerate_canonical(u.spec, u.atoms, 3);
  for (std::size_t attempt = 0; out.size() < count && attempt < 200000; ++attempt) {
    const Term m = random_term(rng, {"x", "y"}, 1 + rng() % 7);
    Basis ctx;
    if (rng() % 10 < 8) ctx.emplace("x", types[rng() % types.size()]);
    if (rng() % 2) ctx.emplace("y", types[rng() % types.size()]);
    const Type a = types[rng() % types.size()];
    if (spec.has_omega && search.subtyper().is_top(a)) continue;
    if (search.derives(ctx, m, a).verdict == Verdict::Yes) out.push_back({ctx, m, a});
  }
  return out;
}

LawResult generation_law(const TheorySpec& spec, const std::vector<Judgment>& corpus,
                         const LawConfig& cfg) {
  const LawUniverse u = law_universe(spec);
  Searcher search(u.spec, cfg.budget);
  Tally t("assign/generation-roundtrip");
  for (const Judgment& j : corpus) {
    const SearchResult r = search.derives(j.ctx, j.term, j.type);
    if (r.verdict != Verdict::Yes) {
      t.check(false, print_judgment(j) + ": not derivable");
      continue;
    }
    const DerivationCheck c = check_derivation(u.spec, *r.derivation);
    const std::string rt = generation_roundtrip(u.spec, j, *r.derivation, cfg.budget);
    t.check(c && rt.empty(), print_judgment(j) + ": " + (c ? rt : c.message));
  }
  t.r.note = std::to_string(corpus.size()) + " judgments";
  return t.r;
}

LawResult admissibility_law(const TheorySpec& spec, const std::vector<Judgment>& corpus,
                            const LawConfig& cfg) {
  const LawUniverse u = law_universe(spec);
  const AdmissibilityReport rep = admissible_rule_suite(u.spec, corpus, cfg.budget);
  LawResult r;
  r.name = "assign/admissible-rules";
  r.checked = rep.checks;
  r.failures = rep.counterexamples.size() + rep.skipped;
  if (!rep.counterexamples.empty()) {
    r.first_failure = rep.counterexamples.front();
  } else if (rep.skipped) {
    r.first_failure = std::to_string(rep.skipped) + " corpus judgments were not derivable";
  }
  r.note = std::to_string(rep.judgments) + " judgments (weakening, strengthening, "
           "intersection elimination, <= left)";
  return r;
}

std::vector<LawResult> assign_laws(const TheorySpec& spec, const LawConfig& cfg) {
  const LawUniverse u = law_universe(spec);
  const auto corpus = yes_corpus(spec, 50, cfg);
  std::vector<LawResult> out{generation_law(spec, corpus, cfg),
                             admissibility_law(spec, corpus, cfg)};

  std::mt19937_64 rng(cfg.seed + 17);
  const auto types = enumerate_canonical(u.spec, u.atoms, 3);
  SearchBudget small = cfg.budget;
  small.max_candidate_type_size = std::max<std::size_t>(1, small.max_candidate_type_size - 2);
  Searcher search(u.spec, cfg.budget);
  Searcher smaller(u.spec, small);
  Tally sound("assign/search-soundness");
  Tally mono("assign/budget-monotonicity");
  Tally alpha("assign/alpha-invariance");
  for (int i = 0; i < 300; ++i) {
    const Term m = random_term(rng, {"x", "y"}, 1 + rng() % 7);
    Basis ctx;
    if (rng() % 10 < 7) ctx.emplace("x", types[rng() % types.size()]);
    if (rng() % 2) ctx.emplace("y", types[rng() % types.size()]);
    const Type a = types[rng() % types.size()];
    const Judgment j{ctx, m, a};
    const SearchResult r = search.derives(ctx, m, a);
    if (r.verdict == Verdict::Yes) {
      const DerivationCheck c = check_derivation(u.spec, *r.derivation);
      sound.check(c && r.derivation->term == m && r.derivation->type == a,
                  print_judgment(j) + ": " + c.message);
    }
    const Verdict lo = smaller.derives(ctx, m, a).verdict;
    mono.check(lo == Verdict::Unknown || lo == r.verdict,
               print_judgment(j) + ": " + std::string(verdict_name(lo)) + " then " +
                   std::string(verdict_name(r.verdict)));
    int counter = 0;
    const Term renamed = rename_binders(m, counter, {});
    alpha.check(search.derives(ctx, renamed, a).verdict == r.verdict, print_judgment(j));
  }
  out.push_back(sound.r);
  out.push_back(mono.r);
  out.push_back(alpha.r);
  return out;
}

// ------------------------------------------------------------- filter

std::vector<LawResult> filter_closure_laws(const TheorySpec& spec, const LawConfig& cfg) {
  const LawUniverse u = law_universe(spec);
  FilterModel m(u.spec);
  const auto types = enumerate_canonical(u.spec, u.atoms, cfg.size);
  Tally upward("filter/upward-closure");
  Tally inter("filter/inter-closure");
  Tally v0("filter/principal-membership");
  std::vector<FiniteFilter> filters{FiniteFilter::empty()};
  for (const Type& g : types) filters.push_back(FiniteFilter::up(g));
  for (const FiniteFilter& x : filters) {
    std::vector<const Type*> in;
    for (const Type& a : types) {
      if (m.member(x, a)) in.push_back(&a);
      if (x.generator) {
        v0.check_with(m.member(x, a) == m.subtyper().leq(*x.generator, a),
                      [&] { return print_filter(x) + " / " + print_type(a); });
      }
    }
    for (const Type* a : in) {
      for (const Type& b : types) {
        if (!m.subtyper().leq(*a, b)) continue;
        upward.check_with(m.member(x, b), [&] {
          return print_filter(x) + " has " + print_type(*a) + " but not " + print_type(b);
        });
      }
      for (const Type* b : in) {
        const Type ab = Type::inter(*a, *b);
        inter.check_with(m.member(x, ab), [&] { return print_filter(x) + " / " + print_type(ab); });
      }
    }
  }
  return {upward.r, inter.r, v0.r};
}

LawResult apply_monotonicity(const TheorySpec& spec, const LawConfig& cfg) {
  const LawUniverse u = law_universe(spec);
  FilterModel m(u.spec);
  const auto gens = enumerate_canonical(u.spec, u.atoms, cfg.size);
  const auto args = enumerate_canonical(u.spec, u.atoms, std::min<std::size_t>(cfg.size, 3));
  Tally t("filter/apply-monotonicity");
  for (const Type& y : args) {
    std::vector<FiniteFilter> res;
    for (const Type& g : gens) res.push_back(m.apply(FiniteFilter::up(g), FiniteFilter::up(y)));
    for (std::size_t i = 0; i < gens.size(); ++i) {
      for (std::size_t j = 0; j < gens.size(); ++j) {
        if (!m.subtyper().leq(gens[i], gens[j])) continue;
        t.check_with(m.includes(res[i], res[j]), [&] {
          return "up(" + print_type(gens[i]) + ") . up(" + print_type(y) + ") misses up(" +
                 print_type(gens[j]) + ") . up(" + print_type(y) + ")";
        });
      }
    }
  }
  for (const Type& g : gens) {
    const FiniteFilter x = FiniteFilter::up(g);
    for (const Type& y1 : args) {
      for (const Type& y2 : args) {
        if (!m.subtyper().leq(y1, y2)) continue;
        t.check_with(m.includes(m.apply(x, FiniteFilter::up(y1)), m.apply(x, FiniteFilter::up(y2))),
                     [&] { return print_type(g) + " applied to " + print_type(y1) + " / " +
                                  print_type(y2); });
      }
    }
  }
  t.r.note = "in both arguments";
  return t.r;
}

LawResult prop_simple_law(const TheorySpec& spec, const LawConfig& cfg) {
  const LawUniverse u = law_universe(spec);
  FilterModel m(u.spec);
  const auto gens = enumerate_canonical(u.spec, u.atoms, cfg.size);
  const auto small = enumerate_canonical(u.spec, u.atoms, std::min<std::size_t>(cfg.size, 3));
  Tally t("filter/prop-simple");
  for (const Type& g : gens) {
    const FiniteFilter x = FiniteFilter::up(g);
    if (!m.prop_simple_precondition(x)) continue;
    for (const Type& a : small) {
      for (const Type& b : small) {
        t.check_with(m.prop_simple(x, a, b), [&] {
          return "x = up(" + print_type(g) + "), A = " + print_type(a) + ", B = " + print_type(b);
        });
      }
    }
  }
  return t.r;
}

LawResult interpretation_law(const TheorySpec& spec, const LawConfig& cfg) {
  const LawUniverse u = law_universe(spec);
  const std::vector<Term> terms{parse_term("\\x. x"), parse_term("\\x. \\y. x"),
                                parse_term("\\x. x x"), parse_term("x"), parse_term("x y"),
                                parse_term("x x"), parse_term("\\y. x y"), parse_term("x (\\z. z)")};
  Denotation den(u.spec, cfg.budget);
  Searcher search(u.spec, cfg.budget);
  const auto gens = enumerate_canonical(u.spec, u.atoms, 3);
  const auto types = enumerate_canonical(u.spec, u.atoms, 3);
  Tally t("filter/interpretation");
  std::size_t yes = 0;
  for (const Term& term : terms) {
    const auto fv = free_vars(term);
    for (std::size_t ix = 0; ix < gens.size(); ++ix) {
      if (!fv.count("x") && ix > 0) break;
      for (std::size_t iy = 0; iy < gens.size(); ++iy) {
        if (!fv.count("y") && iy > 0) break;
        const Env env{{"x", FiniteFilter::up(gens[ix])}, {"y", FiniteFilter::up(gens[iy])}};
        const Basis ctx = env_basis(u.spec, term, env);
        for (const Type& a : types) {
          const Verdict i = search.derives(ctx, term, a).verdict;
          const Verdict d = den.member(term, env, a);
          yes += i == Verdict::Yes;
          t.check_with(i == d, [&] {
            return print_term(term) + " x=" + print_type(gens[ix]) + " y=" + print_type(gens[iy]) +
                   " : " + print_type(a) + " search " + std::string(verdict_name(i)) +
                   ", denotation " + std::string(verdict_name(d));
          });
        }
      }
    }
  }
  t.r.note = std::to_string(yes) + " members";
  return t.r;
}

std::vector<LawResult> filter_laws(const TheorySpec& spec, const LawConfig& cfg) {
  std::vector<LawResult> out = filter_closure_laws(spec, cfg);
  out.push_back(apply_monotonicity(spec, cfg));
  out.push_back(prop_simple_law(spec, cfg));
  out.push_back(interpretation_law(spec, cfg));
  return out;
}

// ------------------------------------------------------------- classify

std::vector<LawResult> classify_laws(const TheorySpec& spec, const LawConfig& cfg) {
  const LawUniverse u = law_universe(spec);
  const auto types = enumerate_types(u.atoms, cfg.size);
  Tally fun("classify/fun-recursion");
  for (const Type& t : types) {
    if (!t.is_inter()) continue;
    const Verdict whole = fun_predicate(u.spec, t);
    const Verdict l = fun_predicate(u.spec, t.left());
    const Verdict r = fun_predicate(u.spec, t.right());
    const Verdict expect = (l == Verdict::Yes || r == Verdict::Yes) ? Verdict::Yes
                           : (l == Verdict::Unknown || r == Verdict::Unknown) ? Verdict::Unknown
                                                                               : Verdict::No;
    fun.check_with(whole == expect, [&] { return print_type(t); });
  }

  Tally phi("classify/functional-in-phi");
  if (is_f_type_theory(spec).verdict == Verdict::Yes) {
    FilterModel m(u.spec);
    for (const Type& t : types) {
      if (fun_predicate(u.spec, t) != Verdict::Yes) continue;
      phi.check_with(m.phi(FiniteFilter::up(t)), [&] { return print_type(t); });
    }
  } else {
    phi.r.note = "not an F-type theory; nothing to check";
  }

  Tally rep("classify/report-invariants");
  const AdequacyReport a = adequacy_report(spec);
  rep.check(a.inference_adequate == (a.strict || a.natural), "inference_adequate");
  rep.check(a.simple_adequate == ((a.strict && !spec.has_nu) ||
                                  (a.natural && spec.has(Rule::OmegaEta))),
            "simple_adequate");
  rep.check(a.f_adequate == a.f_type_theory, "f_adequate");
  return {fun.r, phi.r, rep.r};
}

std::vector<LawResult> all_laws(const TheorySpec& spec, const LawConfig& cfg) {
  std::vector<LawResult> out = syntax_laws(cfg);
  for (auto&& group : {theory_laws(spec), subtype_laws(spec, cfg), assign_laws(spec, cfg),
                       filter_laws(spec, cfg), classify_laws(spec, cfg)}) {
    out.insert(out.end(), group.begin(), group.end());
  }
  return out;
}

}  // namespace itypes
