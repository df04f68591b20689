#include "itypes/assign.hpp"

#include <algorithm>
#include <unordered_set>

#include "itypes/enumerate.hpp"
#include "itypes/oracle.hpp"

namespace itypes {

namespace {

constexpr std::pair<DerivRule, std::string_view> kDerivRuleNames[] = {
    {DerivRule::Ax, "Ax"},         {DerivRule::AxOmega, "AxOmega"}, {DerivRule::AxNu, "AxNu"},
    {DerivRule::ArrowI, "ArrowI"}, {DerivRule::ArrowE, "ArrowE"},   {DerivRule::InterI, "InterI"},
    {DerivRule::Leq, "Leq"},
};

constexpr std::size_t kExact = std::numeric_limits<std::size_t>::max();

DerivPtr make(DerivRule rule, const Basis& ctx, const Term& term, const Type& type,
              std::vector<DerivPtr> premises = {},
              std::optional<std::pair<Type, Type>> leq = std::nullopt) {
  return std::make_shared<const Derivation>(
      Derivation{rule, ctx, term, type, std::move(premises), std::move(leq)});
}

// d concludes type A; append a Leq node to `target` unless they coincide.
DerivPtr weaken_to(const DerivPtr& d, const Type& target) {
  if (d->type == target) return d;
  return make(DerivRule::Leq, d->ctx, d->term, target, {d}, std::make_pair(d->type, target));
}

// Left-nested InterI over the parts; the conclusion type is the matching
// left-nested intersection.
DerivPtr inter_intro(const std::vector<DerivPtr>& parts) {
  DerivPtr acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) {
    acc = make(DerivRule::InterI, acc->ctx, acc->term, Type::inter(acc->type, parts[i]->type),
               {acc, parts[i]});
  }
  return acc;
}

Type inter_left(const std::vector<Type>& parts) {
  Type acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = Type::inter(acc, parts[i]);
  return acc;
}

void subterms(const Type& t, std::vector<Type>& out) {
  out.push_back(t);
  if (!t.is_atom()) {
    subterms(t.left(), out);
    subterms(t.right(), out);
  }
}

std::string fresh_var(const std::set<std::string>& used, const std::string& stem) {
  for (std::size_t i = 1;; ++i) {
    std::string v = stem + std::to_string(i);
    if (!used.count(v)) return v;
  }
}

std::set<std::string> vars_of(const Basis& ctx, const Term& term) {
  std::set<std::string> used = free_vars(term);
  for (const auto& kv : ctx) used.insert(kv.first);
  // Binders too, so fresh names never shadow.
  std::vector<Term> work{term};
  while (!work.empty()) {
    Term t = work.back();
    work.pop_back();
    if (t.is_lam()) {
      used.insert(t.name());
      work.push_back(t.body());
    } else if (t.is_app()) {
      work.push_back(t.fun());
      work.push_back(t.arg());
    }
  }
  return used;
}

}  // namespace

std::string print_basis(const Basis& ctx) {
  std::string out;
  for (const auto& [x, t] : ctx) {
    if (!out.empty()) out += ", ";
    out += x + ": " + print_type(t);
  }
  return out;
}

std::string_view deriv_rule_name(DerivRule r) {
  for (auto [rule, name] : kDerivRuleNames) {
    if (rule == r) return name;
  }
  return "?";
}

std::optional<DerivRule> deriv_rule_from_name(std::string_view s) {
  for (auto [rule, name] : kDerivRuleNames) {
    if (name == s) return rule;
  }
  return std::nullopt;
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::Unknown: return "unknown";
  }
  return "?";
}

std::size_t derivation_size(const Derivation& d) {
  std::size_t n = 1;
  for (const auto& p : d.premises) n += derivation_size(*p);
  return n;
}

// ------------------------------------------------------------- checking

DerivationCheck check_derivation(const TheorySpec& spec, const Derivation& root) {
  Subtyper sub(spec);
  struct Item {
    const Derivation* d;
    std::vector<std::size_t> path;
  };
  std::vector<Item> work{{&root, {}}};
  while (!work.empty()) {
    Item item = std::move(work.back());
    work.pop_back();
    const Derivation& d = *item.d;
    auto fail = [&](std::string msg) {
      return DerivationCheck{false, item.path,
                             std::string(deriv_rule_name(d.rule)) + " node for " +
                                 print_term(d.term) + " : " + print_type(d.type) + ": " + msg};
    };
    auto arity = [&](std::size_t n) { return d.premises.size() == n; };
    for (const auto& p : d.premises) {
      if (!p) return fail("null premise");
    }
    // Premises other than ArrowI share the conclusion's basis.
    if (d.rule != DerivRule::ArrowI) {
      for (const auto& p : d.premises) {
        if (p->ctx != d.ctx) return fail("premise basis differs from conclusion basis");
      }
    }
    switch (d.rule) {
      case DerivRule::Ax: {
        if (!arity(0)) return fail("axiom with premises");
        if (!d.term.is_var()) return fail("subject is not a variable");
        auto it = d.ctx.find(d.term.name());
        if (it == d.ctx.end()) return fail("variable not in basis");
        if (it->second != d.type) return fail("type differs from the basis entry");
        break;
      }
      case DerivRule::AxOmega:
        if (!arity(0)) return fail("axiom with premises");
        if (!spec.has_omega) return fail("omega is not a constant of the theory");
        if (!d.type.is_omega()) return fail("type is not omega");
        break;
      case DerivRule::AxNu:
        if (!arity(0)) return fail("axiom with premises");
        if (!spec.has_nu) return fail("nu is not a constant of the theory");
        if (!d.term.is_lam()) return fail("subject is not an abstraction");
        if (!d.type.is_nu()) return fail("type is not nu");
        break;
      case DerivRule::ArrowI: {
        if (!arity(1)) return fail("expects one premise");
        if (!d.term.is_lam() || !d.type.is_arrow()) return fail("expects \\x.M : C -> D");
        const Derivation& p = *d.premises[0];
        Basis expect = d.ctx;
        expect.insert_or_assign(d.term.name(), d.type.dom());
        if (p.ctx != expect) return fail("premise basis is not ctx[x:=C]");
        if (p.term != d.term.body()) return fail("premise subject is not the body");
        if (p.type != d.type.cod()) return fail("premise type is not the codomain");
        break;
      }
      case DerivRule::ArrowE: {
        if (!arity(2)) return fail("expects two premises");
        if (!d.term.is_app()) return fail("subject is not an application");
        const Derivation& f = *d.premises[0];
        const Derivation& a = *d.premises[1];
        if (f.term != d.term.fun() || a.term != d.term.arg()) return fail("premise subjects");
        if (!f.type.is_arrow() || f.type.cod() != d.type || f.type.dom() != a.type) {
          return fail("premises are not M : B -> A and N : B");
        }
        break;
      }
      case DerivRule::InterI: {
        if (!arity(2)) return fail("expects two premises");
        if (!d.type.is_inter()) return fail("type is not an intersection");
        const Derivation& l = *d.premises[0];
        const Derivation& r = *d.premises[1];
        if (l.term != d.term || r.term != d.term) return fail("premise subjects differ");
        if (l.type != d.type.left() || r.type != d.type.right()) return fail("premise types");
        break;
      }
      case DerivRule::Leq: {
        if (!arity(1)) return fail("expects one premise");
        const Derivation& p = *d.premises[0];
        if (p.term != d.term) return fail("premise subject differs");
        if (!d.leq) return fail("missing subtyping pair");
        if (d.leq->first != p.type || d.leq->second != d.type) {
          return fail("subtyping pair does not match premise and conclusion");
        }
        if (!sub.leq(p.type, d.type)) {
          return fail(print_type(p.type) + " <= " + print_type(d.type) + " does not hold");
        }
        break;
      }
    }
    for (std::size_t i = d.premises.size(); i-- > 0;) {
      auto path = item.path;
      path.push_back(i);
      work.push_back({d.premises[i].get(), std::move(path)});
    }
  }
  return {};
}

// ------------------------------------------------------------- search

std::size_t Searcher::KeyHash::operator()(const Key& k) const {
  std::size_t h = k.term.hash() * 1000003u ^ k.type.hash();
  for (const auto& [x, t] : k.ctx) {
    h = h * 31 + std::hash<std::string>{}(x);
    h = h * 31 + t.hash();
  }
  return h;
}

Searcher::Searcher(const TheorySpec& spec, SearchBudget budget)
    : spec_(spec), budget_(budget), sub_(std::make_unique<Subtyper>(spec)) {
  if (budget_.max_candidate_type_size == 0) budget_.max_candidate_type_size = 1;
  if (budget_.max_depth == 0) budget_.max_depth = 1;
}

SearchResult Searcher::derives(const Basis& ctx, const Term& term, const Type& type) {
  return run(ctx, term, type, 0);
}

SearchResult Searcher::run(const Basis& ctx, const Term& term, const Type& type,
                           std::size_t depth) {
  const std::size_t remaining = budget_.max_depth > depth ? budget_.max_depth - depth : 0;
  Key key{ctx, term, type};
  if (auto it = memo_.find(key); it != memo_.end()) {
    // An Unknown found with less depth left may improve with more.
    if (it->second.result.verdict != Verdict::Unknown || it->second.remaining >= remaining) {
      return it->second.result;
    }
  }
  SearchResult r;
  if (remaining > 0) r = compute(ctx, term, type, depth);
  const std::size_t stored = r.verdict == Verdict::Unknown ? remaining : kExact;
  memo_.insert_or_assign(std::move(key), Entry{r, stored});
  return r;
}

SearchResult Searcher::compute(const Basis& ctx, const Term& term, const Type& type,
                               std::size_t depth) {
  if (spec_.has_omega && sub_->is_top(type)) {
    return {Verdict::Yes, weaken_to(make(DerivRule::AxOmega, ctx, term, Type::omega()), type)};
  }
  if (term.is_lam()) return abstraction(ctx, term, type, depth);
  Term head = term;
  while (head.is_app()) head = head.fun();
  if (head.is_var()) return spine(ctx, term, type, depth);
  return application(ctx, term, type, depth);
}

SearchResult Searcher::abstraction(const Basis& ctx, const Term& term, const Type& type,
                                   std::size_t depth) {
  if (spec_.has_nu && sub_->leq(Type::nu(), type)) {
    return {Verdict::Yes, weaken_to(make(DerivRule::AxNu, ctx, term, Type::nu()), type)};
  }
  // Conjuncts with equation atoms unfolded; omega-like parts are implied by
  // the others.
  std::vector<Type> parts;
  std::vector<Type> work = normalize(spec_, type).conjuncts;
  for (std::size_t i = 0; i < work.size(); ++i) {
    const Type c = work[i];
    if (c.is_atom()) {
      if (const Type* rhs = spec_.equation(c.name())) {
        for (const Type& d : normalize(spec_, *rhs).conjuncts) work.push_back(d);
        continue;
      }
    }
    if (spec_.has_omega && sub_->is_top(c)) continue;
    parts.push_back(c);
  }

  std::vector<DerivPtr> derivs;
  bool unknown = false;
  Basis inner = ctx;
  for (const Type& c : parts) {
    if (spec_.has_nu && sub_->leq(Type::nu(), c)) {
      derivs.push_back(make(DerivRule::AxNu, ctx, term, Type::nu()));
      continue;
    }
    if (!c.is_arrow()) return {Verdict::No, nullptr};  // plain atom
    inner.insert_or_assign(term.name(), c.dom());
    SearchResult r = run(inner, term.body(), c.cod(), depth + 1);
    if (r.verdict == Verdict::No) return r;
    if (r.verdict == Verdict::Unknown) {
      unknown = true;
      continue;
    }
    derivs.push_back(make(DerivRule::ArrowI, ctx, term, c, {r.derivation}));
  }
  if (unknown) return {Verdict::Unknown, nullptr};
  if (derivs.empty()) {
    // Only reachable when every conjunct is omega-like, handled earlier.
    return {Verdict::Unknown, nullptr};
  }
  return {Verdict::Yes, weaken_to(inter_intro(derivs), type)};
}

SearchResult Searcher::spine(const Basis& ctx, const Term& term, const Type& type,
                             std::size_t depth) {
  std::vector<Term> args;
  Term head = term;
  while (head.is_app()) {
    args.push_back(head.arg());
    head = head.fun();
  }
  std::reverse(args.begin(), args.end());

  // sure: a type of the current prefix with its derivation (or absent);
  // poss: a lower bound of every type the prefix can have (absent = none).
  std::optional<Type> sure;
  DerivPtr sure_d;
  std::optional<Type> poss;
  if (auto it = ctx.find(head.name()); it != ctx.end()) {
    sure = poss = it->second;
    sure_d = make(DerivRule::Ax, ctx, head, it->second);
  } else if (spec_.has_omega) {
    sure = poss = Type::omega();
    sure_d = make(DerivRule::AxOmega, ctx, head, Type::omega());
  } else {
    return {Verdict::No, nullptr};
  }

  Term prefix = head;
  for (const Term& n : args) {
    const Term next = Term::app(prefix, n);
    if (sure) {
      std::vector<Type> doms;
      std::vector<Type> cods;
      std::vector<DerivPtr> arg_d;
      for (const ArrowHead& h : sub_->arrow_heads(*sure)) {
        SearchResult r = run(ctx, n, h.dom, depth + 1);
        if (r.verdict != Verdict::Yes) continue;
        doms.push_back(h.dom);
        cods.push_back(h.cod);
        arg_d.push_back(r.derivation);
      }
      if (!doms.empty()) {
        const Type arrow = Type::arrow(inter_left(doms), inter_left(cods));
        DerivPtr fun_d = weaken_to(sure_d, arrow);
        sure = arrow.cod();
        sure_d = make(DerivRule::ArrowE, ctx, next, *sure, {fun_d, inter_intro(arg_d)});
      } else if (spec_.has_omega) {
        sure = Type::omega();
        sure_d = make(DerivRule::AxOmega, ctx, next, Type::omega());
      } else {
        sure.reset();
        sure_d.reset();
      }
    }
    if (poss) {
      std::vector<Type> cods;
      for (const ArrowHead& h : sub_->arrow_heads(*poss)) {
        if (run(ctx, n, h.dom, depth + 1).verdict != Verdict::No) cods.push_back(h.cod);
      }
      if (!cods.empty()) {
        poss = inter_left(cods);
      } else if (spec_.has_omega) {
        poss = Type::omega();
      } else {
        poss.reset();
      }
    }
    prefix = next;
  }

  if (sure && sub_->leq(*sure, type)) return {Verdict::Yes, weaken_to(sure_d, type)};
  if (!poss || !sub_->leq(*poss, type)) return {Verdict::No, nullptr};
  return {Verdict::Unknown, nullptr};
}

const std::vector<Type>& Searcher::pool(const Basis& ctx, const Type& type) {
  std::set<std::string> atom_set = atoms_of(type);
  for (const auto& kv : ctx) {
    for (const auto& a : atoms_of(kv.second)) atom_set.insert(a);
  }
  if (spec_.has_omega) atom_set.insert(std::string(kOmega));
  if (spec_.has_nu) atom_set.insert(std::string(kNu));
  std::vector<std::string> atoms(atom_set.begin(), atom_set.end());
  std::vector<Type> seeds;
  for (const auto& kv : ctx) subterms(canonical(spec_, kv.second), seeds);
  subterms(canonical(spec_, type), seeds);
  // Seeds are part of the key: the pool depends on ctx and type, not just atoms.
  std::vector<std::string> key = atoms;
  for (const Type& s : seeds) key.push_back(print_type(s));
  auto it = pools_.find(key);
  if (it != pools_.end()) return it->second;

  std::vector<Type> out;
  std::unordered_set<Type> seen;
  std::vector<Type> canon_seeds;
  for (const Type& s : seeds) canon_seeds.push_back(canonical(spec_, s));
  std::stable_sort(canon_seeds.begin(), canon_seeds.end(), [](const Type& a, const Type& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return print_type(a) < print_type(b);
  });
  for (const Type& s : canon_seeds) {
    if (seen.insert(s).second) out.push_back(s);
  }
  for (const Type& t : enumerate_canonical(spec_, atoms, budget_.max_candidate_type_size)) {
    if (seen.insert(t).second) out.push_back(t);
  }
  return pools_.emplace(std::move(key), std::move(out)).first->second;
}

SearchResult Searcher::application(const Basis& ctx, const Term& term, const Type& type,
                                   std::size_t depth) {
  // Copy: recursive calls may grow pools_.
  const std::vector<Type> candidates = pool(ctx, type);
  for (const Type& b : candidates) {
    SearchResult f = run(ctx, term.fun(), Type::arrow(b, type), depth + 1);
    if (f.verdict != Verdict::Yes) continue;
    SearchResult a = run(ctx, term.arg(), b, depth + 1);
    if (a.verdict != Verdict::Yes) continue;
    return {Verdict::Yes, make(DerivRule::ArrowE, ctx, term, type, {f.derivation, a.derivation})};
  }
  return {Verdict::Unknown, nullptr};
}

SearchResult derives(const TheorySpec& spec, const Basis& ctx, const Term& term, const Type& type,
                     SearchBudget budget) {
  Searcher s(spec, budget);
  return s.derives(ctx, term, type);
}

std::vector<Type> infer_types(const TheorySpec& spec, const Basis& ctx, const Term& term,
                              std::size_t size_bound, const std::set<std::string>& atoms,
                              SearchBudget budget, std::size_t cap) {
  std::set<std::string> all = atoms;
  if (spec.has_omega) all.insert(std::string(kOmega));
  if (spec.has_nu) all.insert(std::string(kNu));
  const std::vector<std::string> list(all.begin(), all.end());
  const std::size_t planned = count_types(list.size(), size_bound);
  if (planned > cap) {
    throw ResourceLimit("type universe of " + std::to_string(planned) + " types exceeds cap " +
                        std::to_string(cap));
  }
  Searcher s(spec, budget);
  std::vector<Type> out;
  for (const Type& t : enumerate_canonical(spec, list, size_bound)) {
    if (s.derives(ctx, term, t).verdict == Verdict::Yes) out.push_back(t);
  }
  return out;
}

// ------------------------------------------------------------- meta checks

std::string print_judgment(const Judgment& j) {
  return print_basis(j.ctx) + " |- " + print_term(j.term) + " : " + print_type(j.type);
}

AdmissibilityReport admissible_rule_suite(const TheorySpec& spec,
                                          const std::vector<Judgment>& corpus,
                                          SearchBudget budget) {
  AdmissibilityReport report;
  Searcher s(spec, budget);
  const std::vector<std::string> plain = spec.plain_atoms();
  const Type extra = plain.empty() ? (spec.has_nu ? Type::nu() : Type::omega())
                                   : Type::atom(plain.front());

  for (const Judgment& j : corpus) {
    if (s.derives(j.ctx, j.term, j.type).verdict != Verdict::Yes) {
      ++report.skipped;
      continue;
    }
    ++report.judgments;
    auto expect = [&](const char* rule, const Basis& ctx, const Type& type) {
      ++report.checks;
      const Verdict v = s.derives(ctx, j.term, type).verdict;
      if (v != Verdict::Yes) {
        report.counterexamples.push_back(std::string(rule) + ": from " + print_judgment(j) +
                                         " got " + std::string(verdict_name(v)) + " for " +
                                         print_judgment({ctx, j.term, type}));
      }
    };

    // Weakening with a fresh variable.
    Basis wider = j.ctx;
    wider.emplace(fresh_var(vars_of(j.ctx, j.term), "w"), extra);
    expect("weakening", wider, j.type);

    // Strengthening to the free variables.
    Basis narrow;
    for (const auto& x : free_vars(j.term)) {
      if (auto it = j.ctx.find(x); it != j.ctx.end()) narrow.insert(*it);
    }
    expect("strengthening", narrow, j.type);

    // Intersection elimination.
    if (j.type.is_inter()) {
      expect("inter-elim-left", j.ctx, j.type.left());
      expect("inter-elim-right", j.ctx, j.type.right());
    }

    // (<= L): strengthen each used assumption.
    for (const auto& x : free_vars(j.term)) {
      auto it = j.ctx.find(x);
      if (it == j.ctx.end()) continue;
      Basis lower = j.ctx;
      lower.insert_or_assign(x, Type::inter(it->second, extra));
      expect("leq-left", lower, j.type);
    }
  }
  return report;
}

namespace {

// Peels Leq and InterI nodes down to the rule instances that introduce the
// subject; collects those nodes.
void cores(const DerivPtr& d, std::vector<DerivPtr>& out) {
  if (d->rule == DerivRule::Leq || d->rule == DerivRule::InterI) {
    for (const auto& p : d->premises) cores(p, out);
  } else {
    out.push_back(d);
  }
}

}  // namespace

std::string generation_roundtrip(const TheorySpec& spec, const Judgment& j, const Derivation& d,
                                 SearchBudget budget) {
  Subtyper sub(spec);
  if (spec.has_omega && sub.is_top(j.type)) return {};
  if (j.term.is_var()) {
    auto it = j.ctx.find(j.term.name());
    if (it == j.ctx.end()) return "variable typed without a basis entry";
    if (!sub.leq(it->second, j.type)) return "basis type is not below the target";
    return {};
  }
  std::vector<DerivPtr> parts;
  cores(std::make_shared<const Derivation>(d), parts);
  Searcher fresh(spec, budget);
  if (j.term.is_app()) {
    std::vector<Type> cods;
    for (const DerivPtr& p : parts) {
      if (p->rule == DerivRule::AxOmega) continue;
      if (p->rule != DerivRule::ArrowE) return "application part is not an arrow elimination";
      const Type& fun_type = p->premises[0]->type;
      if (fresh.derives(j.ctx, j.term.fun(), fun_type).verdict != Verdict::Yes) {
        return "function premise not re-derivable at " + print_type(fun_type);
      }
      if (fresh.derives(j.ctx, j.term.arg(), fun_type.dom()).verdict != Verdict::Yes) {
        return "argument premise not re-derivable at " + print_type(fun_type.dom());
      }
      cods.push_back(fun_type.cod());
    }
    if (cods.empty()) return "no arrow premise for a non-omega target";
    if (!sub.leq(inter_left(cods), j.type)) return "codomains are not below the target";
    return {};
  }
  // Abstraction.
  if (spec.has_nu && sub.leq(Type::nu(), j.type)) return {};
  std::vector<Type> arrows;
  for (const DerivPtr& p : parts) {
    if (p->rule == DerivRule::AxNu || p->rule == DerivRule::AxOmega) continue;
    if (p->rule != DerivRule::ArrowI) return "abstraction part is not an arrow introduction";
    Basis inner = j.ctx;
    inner.insert_or_assign(j.term.name(), p->type.dom());
    if (fresh.derives(inner, j.term.body(), p->type.cod()).verdict != Verdict::Yes) {
      return "body not re-derivable at " + print_type(p->type);
    }
    arrows.push_back(p->type);
  }
  if (arrows.empty()) return "no arrow part for a target above neither omega nor nu";
  if (!sub.leq(inter_left(arrows), j.type)) return "arrow parts are not below the target";
  return {};
}

std::string_view hindley_status_name(HindleyStatus s) {
  switch (s) {
    case HindleyStatus::AdmissibleOnInstance: return "admissible-on-instance";
    case HindleyStatus::CounterexampleCandidate: return "counterexample-candidate";
    case HindleyStatus::Unknown: return "unknown";
  }
  return "?";
}

Type omega_arity(std::size_t n) {
  Type t = Type::omega();
  for (std::size_t i = 0; i < n; ++i) t = Type::arrow(Type::omega(), t);
  return t;
}

std::vector<HindleyInstance> hindley_rule_check(const TheorySpec& spec, const std::string& psi,
                                                std::size_t n, SearchBudget budget,
                                                std::vector<std::pair<Basis, Term>> corpus) {
  if (!spec.has_omega) throw std::invalid_argument("the Hindley rule needs omega");
  if (!spec.has_atom(psi)) throw UnknownAtomError(psi);
  const Type psi_t = Type::atom(psi);
  const Type premise_type = Type::inter(psi_t, omega_arity(n));
  if (corpus.empty()) {
    const Term x = Term::var("x");
    corpus.push_back({Basis{{"x", premise_type}}, x});
    corpus.push_back({Basis{{"x", psi_t}}, x});
    corpus.push_back({Basis{{"x", omega_arity(n)}}, x});
  }
  Searcher s(spec, budget);
  std::vector<HindleyInstance> out;
  for (auto& [ctx, m] : corpus) {
    std::set<std::string> used = vars_of(ctx, m);
    std::vector<std::string> binders;
    Term body = m;
    for (std::size_t i = 0; i < n; ++i) {
      binders.push_back(fresh_var(used, "x"));
      used.insert(binders.back());
      body = Term::app(body, Term::var(binders.back()));
    }
    for (std::size_t i = n; i-- > 0;) body = Term::lam(binders[i], body);
    HindleyInstance inst{ctx, m, premise_type, body, psi_t};
    inst.premise = s.derives(ctx, m, premise_type).verdict;
    if (inst.premise == Verdict::No) {
      inst.conclusion = Verdict::Unknown;
      inst.status = HindleyStatus::AdmissibleOnInstance;
    } else {
      inst.conclusion = s.derives(ctx, body, psi_t).verdict;
      if (inst.premise == Verdict::Unknown) {
        inst.status = inst.conclusion == Verdict::Yes ? HindleyStatus::AdmissibleOnInstance
                                                      : HindleyStatus::Unknown;
      } else if (inst.conclusion == Verdict::Yes) {
        inst.status = HindleyStatus::AdmissibleOnInstance;
      } else if (inst.conclusion == Verdict::No) {
        inst.status = HindleyStatus::CounterexampleCandidate;
      } else {
        inst.status = HindleyStatus::Unknown;
      }
    }
    out.push_back(std::move(inst));
  }
  return out;
}

}  // namespace itypes
