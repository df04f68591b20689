#include "itypes/filter.hpp"

#include <algorithm>

#include "itypes/enumerate.hpp"

namespace itypes {

namespace {

Type inter_left(const std::vector<Type>& parts) {
  Type acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = Type::inter(acc, parts[i]);
  return acc;
}

Verdict both(Verdict a, Verdict b) {
  if (a == Verdict::No || b == Verdict::No) return Verdict::No;
  if (a == Verdict::Unknown || b == Verdict::Unknown) return Verdict::Unknown;
  return Verdict::Yes;
}

}  // namespace

FiniteFilter FiniteFilter::of(const std::vector<Type>& gens) {
  if (gens.empty()) return empty();
  return up(inter_left(gens));
}

std::string print_filter(const FiniteFilter& f) {
  return f.generator ? print_type(*f.generator) : "empty";
}

FilterModel::FilterModel(const TheorySpec& spec) : sub_(spec) {}

std::optional<Type> FilterModel::effective(const FiniteFilter& x) const {
  if (x.generator) return x.generator;
  if (spec().has_omega) return Type::omega();
  return std::nullopt;
}

bool FilterModel::member(const FiniteFilter& x, const Type& a) {
  if (!x.generator) return spec().has_omega && sub_.is_top(a);
  return sub_.leq(*x.generator, a);
}

bool FilterModel::includes(const FiniteFilter& x, const FiniteFilter& y) {
  if (!y.generator) return true;  // up(empty) is the least filter
  return member(x, *y.generator);
}

std::pair<FiniteFilter, FiniteFilter> FilterModel::apply_by(
    const FiniteFilter& x, const std::function<Verdict(const Type&)>& in) {
  const std::optional<Type> g = effective(x);
  if (!g) return {FiniteFilter::empty(), FiniteFilter::empty()};
  std::vector<Type> sure;
  std::vector<Type> poss;
  for (const ArrowHead& h : sub_.arrow_heads(*g)) {
    const Verdict v = in(h.dom);
    if (v == Verdict::Yes) sure.push_back(h.cod);
    if (v != Verdict::No) poss.push_back(h.cod);
  }
  auto make = [&](const std::vector<Type>& cods) {
    if (cods.empty()) return FiniteFilter::empty();
    return FiniteFilter::up(canonical(spec(), inter_left(cods)));
  };
  return {make(sure), make(poss)};
}

FiniteFilter FilterModel::apply(const FiniteFilter& x, const FiniteFilter& y) {
  if (!spec().has_omega && (!x.generator || !y.generator)) return FiniteFilter::empty();
  return apply_by(x, [&](const Type& a) { return member(y, a) ? Verdict::Yes : Verdict::No; })
      .first;
}

FiniteFilter FilterModel::abstraction(const std::vector<std::pair<Type, Type>>& table) {
  std::vector<Type> parts;
  for (const auto& [a, b] : table) parts.push_back(Type::arrow(a, b));
  if (spec().has_omega) parts.push_back(Type::arrow(Type::omega(), Type::omega()));
  if (spec().has_nu) parts.push_back(Type::nu());
  if (parts.empty()) return FiniteFilter::empty();
  return FiniteFilter::up(canonical(spec(), inter_left(parts)));
}

bool FilterModel::phi(const FiniteFilter& x) {
  if (spec().has_omega) return member(x, Type::arrow(Type::omega(), Type::omega()));
  if (spec().has_nu) return member(x, Type::nu());
  return true;
}

bool FilterModel::prop_simple_precondition(const FiniteFilter& x) {
  return !spec().has_omega || member(x, Type::arrow(Type::omega(), Type::omega()));
}

bool FilterModel::prop_simple(const FiniteFilter& x, const Type& a, const Type& b) {
  return member(apply(x, FiniteFilter::up(a)), b) == member(x, Type::arrow(a, b));
}

bool member(const TheorySpec& spec, const FiniteFilter& x, const Type& a) {
  return FilterModel(spec).member(x, a);
}

FiniteFilter apply(const TheorySpec& spec, const FiniteFilter& x, const FiniteFilter& y) {
  return FilterModel(spec).apply(x, y);
}

FiniteFilter make_abstraction_filter(const TheorySpec& spec,
                                     const std::vector<std::pair<Type, Type>>& table) {
  return FilterModel(spec).abstraction(table);
}

bool phi_membership(const TheorySpec& spec, const FiniteFilter& x) {
  return FilterModel(spec).phi(x);
}

bool prop_simple_check(const TheorySpec& spec, const FiniteFilter& x, const Type& a,
                       const Type& b) {
  return FilterModel(spec).prop_simple(x, a, b);
}

Basis env_basis(const TheorySpec& spec, const Term& term, const Env& env) {
  Basis ctx;
  for (const auto& x : free_vars(term)) {
    auto it = env.find(x);
    if (it != env.end() && it->second.generator) {
      ctx.emplace(x, *it->second.generator);
    } else if (spec.has_omega) {
      ctx.emplace(x, Type::omega());
    } else {
      throw EmptyEnvFilter("environment maps " + x + " to the empty filter");
    }
  }
  return ctx;
}

Verdict interpret_member(const TheorySpec& spec, const Term& term, const Env& env, const Type& a,
                         SearchBudget budget) {
  return derives(spec, env_basis(spec, term, env), term, a, budget).verdict;
}

// ------------------------------------------------------------- denotation

Denotation::Denotation(const TheorySpec& spec, SearchBudget budget)
    : model_(spec), budget_(budget) {}

Verdict Denotation::member(const Term& term, const Env& env, const Type& a) {
  return run(term, env, a, 0);
}

Verdict Denotation::run(const Term& term, const Env& env, const Type& a, std::size_t depth) {
  const TheorySpec& spec = model_.spec();
  Subtyper& sub = model_.subtyper();
  if (depth >= budget_.max_depth) return Verdict::Unknown;
  if (spec.has_omega && sub.is_top(a)) return Verdict::Yes;

  if (term.is_lam()) {
    if (spec.has_nu && sub.leq(Type::nu(), a)) return Verdict::Yes;
    std::vector<Type> work = normalize(spec, a).conjuncts;
    Verdict out = Verdict::Yes;
    for (std::size_t i = 0; i < work.size(); ++i) {
      const Type c = work[i];
      if (c.is_atom()) {
        if (const Type* rhs = spec.equation(c.name())) {
          for (const Type& d : normalize(spec, *rhs).conjuncts) work.push_back(d);
          continue;
        }
      }
      if (spec.has_omega && sub.is_top(c)) continue;
      if (spec.has_nu && sub.leq(Type::nu(), c)) continue;
      if (!c.is_arrow()) return Verdict::No;
      Env inner = env;
      inner.insert_or_assign(term.name(), FiniteFilter::up(c.dom()));
      out = both(out, run(term.body(), inner, c.cod(), depth + 1));
      if (out == Verdict::No) return out;
    }
    return out;
  }

  std::vector<Term> args;
  Term head = term;
  while (head.is_app()) {
    args.push_back(head.arg());
    head = head.fun();
  }
  std::reverse(args.begin(), args.end());

  if (head.is_var()) {
    auto it = env.find(head.name());
    FiniteFilter sure = it == env.end() ? FiniteFilter::empty() : it->second;
    FiniteFilter poss = sure;
    for (const Term& n : args) {
      auto in = [&](const Type& dom) { return run(n, env, dom, depth + 1); };
      sure = model_.apply_by(sure, in).first;
      poss = model_.apply_by(poss, in).second;
    }
    if (model_.member(sure, a)) return Verdict::Yes;
    if (!model_.member(poss, a)) return Verdict::No;
    return Verdict::Unknown;
  }

  // a in X . Y  iff  B -> a in X for some B in Y.
  std::set<std::string> atom_set = atoms_of(a);
  for (const auto& [x, f] : env) {
    if (f.generator) {
      for (const auto& at : atoms_of(*f.generator)) atom_set.insert(at);
    }
  }
  if (spec.has_omega) atom_set.insert(std::string(kOmega));
  if (spec.has_nu) atom_set.insert(std::string(kNu));
  const std::vector<std::string> atoms(atom_set.begin(), atom_set.end());
  for (const Type& b : enumerate_canonical(spec, atoms, budget_.max_candidate_type_size)) {
    if (run(term.fun(), env, Type::arrow(b, a), depth + 1) != Verdict::Yes) continue;
    if (run(term.arg(), env, b, depth + 1) == Verdict::Yes) return Verdict::Yes;
  }
  return Verdict::Unknown;
}

}  // namespace itypes
