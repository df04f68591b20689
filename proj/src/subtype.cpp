#include "itypes/subtype.hpp"

#include <algorithm>

namespace itypes {

// ============================================================ canonical form

namespace {

void flatten(const Type& t, std::vector<Type>& out) {
  if (t.is_inter()) {
    flatten(t.left(), out);
    flatten(t.right(), out);
  } else {
    out.push_back(t);
  }
}

// Atoms by name, then arrows by (dom, cod) printed forms.
bool conjunct_less(const Type& a, const Type& b) {
  if (a.is_atom() != b.is_atom()) return a.is_atom();
  if (a.is_atom()) return a.name() < b.name();
  const std::string da = print_type(a.dom());
  const std::string db = print_type(b.dom());
  if (da != db) return da < db;
  return print_type(a.cod()) < print_type(b.cod());
}

}  // namespace

NormalType normalize(const TheorySpec& spec, const Type& t) {
  std::vector<Type> leaves;
  flatten(t, leaves);
  NormalType out;
  for (const Type& leaf : leaves) {
    Type c = leaf.is_arrow()
                 ? Type::arrow(canonical(spec, leaf.dom()), canonical(spec, leaf.cod()))
                 : leaf;
    if (std::find(out.conjuncts.begin(), out.conjuncts.end(), c) == out.conjuncts.end()) {
      out.conjuncts.push_back(std::move(c));
    }
  }
  if (spec.has_omega) {
    const bool only_omega = std::all_of(out.conjuncts.begin(), out.conjuncts.end(),
                                        [](const Type& c) { return c.is_omega(); });
    if (only_omega) {
      out.conjuncts = {Type::omega()};
      out.is_top = true;
      return out;
    }
    std::erase_if(out.conjuncts, [](const Type& c) { return c.is_omega(); });
  }
  std::sort(out.conjuncts.begin(), out.conjuncts.end(), conjunct_less);
  return out;
}

Type denormalize(const NormalType& n) {
  if (n.is_top || n.conjuncts.empty()) return Type::omega();
  Type acc = n.conjuncts.front();
  for (std::size_t i = 1; i < n.conjuncts.size(); ++i) acc = Type::inter(acc, n.conjuncts[i]);
  return acc;
}

Type canonical(const TheorySpec& spec, const Type& t) { return denormalize(normalize(spec, t)); }

// ============================================================ proof checking

std::string_view sub_rule_name(SubRule r) {
  switch (r) {
    case SubRule::Refl: return "refl";
    case SubRule::Idem: return "idem";
    case SubRule::InclL: return "incl-l";
    case SubRule::InclR: return "incl-r";
    case SubRule::Mon: return "mon";
    case SubRule::Trans: return "trans";
    case SubRule::OmegaTop: return "omega";
    case SubRule::NuTop: return "nu";
    case SubRule::OmegaEta: return "omega-eta";
    case SubRule::OmegaLazy: return "omega-lazy";
    case SubRule::ArrowInter: return "arrow-inter";
    case SubRule::Eta: return "eta";
    case SubRule::Unfold: return "unfold";
    case SubRule::Fold: return "fold";
  }
  return "?";
}

namespace {

bool is_omega_arrow(const Type& t) {
  return t.is_arrow() && t.dom().is_omega() && t.cod().is_omega();
}

std::string describe(const SubtypeProof& p) {
  return std::string(sub_rule_name(p.rule)) + " node " + print_type(p.lhs) + " <= " +
         print_type(p.rhs);
}

ProofCheck check_node(const TheorySpec& spec, const SubtypeProof& p) {
  auto bad = [&](const std::string& why) { return ProofCheck{false, describe(p) + ": " + why}; };
  const auto& pr = p.premises;
  auto arity = [&](std::size_t n) { return pr.size() == n; };
  for (const auto& q : pr) {
    if (!q) return bad("null premise");
  }
  for (const auto& a : atoms_of(p.lhs)) {
    if (!spec.has_atom(a)) return bad("atom '" + a + "' not in the theory");
  }
  for (const auto& a : atoms_of(p.rhs)) {
    if (!spec.has_atom(a)) return bad("atom '" + a + "' not in the theory");
  }
  const Type& l = p.lhs;
  const Type& r = p.rhs;
  switch (p.rule) {
    case SubRule::Refl:
      if (arity(0) && l == r) return {};
      break;
    case SubRule::Idem:
      if (arity(0) && r.is_inter() && r.left() == l && r.right() == l) return {};
      break;
    case SubRule::InclL:
      if (arity(0) && l.is_inter() && l.left() == r) return {};
      break;
    case SubRule::InclR:
      if (arity(0) && l.is_inter() && l.right() == r) return {};
      break;
    case SubRule::Mon:
      if (arity(2) && l.is_inter() && r.is_inter() && pr[0]->lhs == l.left() &&
          pr[0]->rhs == r.left() && pr[1]->lhs == l.right() && pr[1]->rhs == r.right()) {
        return {};
      }
      break;
    case SubRule::Trans:
      if (arity(2) && pr[0]->lhs == l && pr[0]->rhs == pr[1]->lhs && pr[1]->rhs == r) return {};
      break;
    case SubRule::OmegaTop:
      if (!spec.has(Rule::OmegaTop)) return bad("theory lacks (omega)");
      if (arity(0) && r.is_omega()) return {};
      break;
    case SubRule::NuTop:
      if (!spec.has(Rule::NuTop)) return bad("theory lacks (nu)");
      if (arity(0) && l.is_arrow() && r.is_nu()) return {};
      break;
    case SubRule::OmegaEta:
      if (!spec.has(Rule::OmegaEta)) return bad("theory lacks (omega-eta)");
      if (arity(0) && l.is_omega() && is_omega_arrow(r)) return {};
      break;
    case SubRule::OmegaLazy:
      if (!spec.has(Rule::OmegaLazy)) return bad("theory lacks (omega-lazy)");
      if (arity(0) && l.is_arrow() && is_omega_arrow(r)) return {};
      break;
    case SubRule::ArrowInter:
      if (!spec.has(Rule::ArrowInter)) return bad("theory lacks (arrow-inter)");
      if (arity(0) && l.is_inter() && l.left().is_arrow() && l.right().is_arrow() &&
          r.is_arrow() && r.cod().is_inter() && l.left().dom() == r.dom() &&
          l.right().dom() == r.dom() && l.left().cod() == r.cod().left() &&
          l.right().cod() == r.cod().right()) {
        return {};
      }
      break;
    case SubRule::Eta:
      if (!spec.has(Rule::Eta)) return bad("theory lacks (eta)");
      if (arity(2) && l.is_arrow() && r.is_arrow() && pr[0]->lhs == r.dom() &&
          pr[0]->rhs == l.dom() && pr[1]->lhs == l.cod() && pr[1]->rhs == r.cod()) {
        return {};
      }
      break;
    case SubRule::Unfold:
      if (arity(0) && l.is_atom()) {
        const Type* rhs = spec.equation(l.name());
        if (rhs != nullptr && *rhs == r) return {};
      }
      break;
    case SubRule::Fold:
      if (arity(0) && r.is_atom()) {
        const Type* rhs = spec.equation(r.name());
        if (rhs != nullptr && *rhs == l) return {};
      }
      break;
  }
  return bad("not an instance of the rule");
}

}  // namespace

ProofCheck check_subtype_proof(const TheorySpec& spec, const SubtypeProof& proof) {
  std::vector<const SubtypeProof*> stack{&proof};
  while (!stack.empty()) {
    const SubtypeProof* p = stack.back();
    stack.pop_back();
    if (ProofCheck c = check_node(spec, *p); !c) return c;
    for (const auto& q : p->premises) stack.push_back(q.get());
  }
  return {};
}

std::size_t proof_size(const SubtypeProof& proof) {
  std::size_t n = 1;
  for (const auto& q : proof.premises) n += proof_size(*q);
  return n;
}

// ============================================================ proof builders

namespace {

ProofPtr node(SubRule rule, Type lhs, Type rhs, std::vector<ProofPtr> premises = {}) {
  return std::make_shared<const SubtypeProof>(
      SubtypeProof{rule, std::move(lhs), std::move(rhs), std::move(premises)});
}

ProofPtr refl(const Type& a) { return node(SubRule::Refl, a, a); }

// Null `p` stands for reflexivity.
ProofPtr trans(const ProofPtr& p, const ProofPtr& q) {
  if (!p) return q;
  if (!q) return p;
  if (p->rule == SubRule::Refl) return q;
  if (q->rule == SubRule::Refl) return p;
  return node(SubRule::Trans, p->lhs, q->rhs, {p, q});
}

ProofPtr mon(const ProofPtr& p, const ProofPtr& q) {
  return node(SubRule::Mon, Type::inter(p->lhs, q->lhs), Type::inter(p->rhs, q->rhs), {p, q});
}

// From p : X <= A and q : X <= B derive X <= A & B.
ProofPtr glb(const ProofPtr& p, const ProofPtr& q) {
  const Type& x = p->lhs;
  return trans(node(SubRule::Idem, x, Type::inter(x, x)), mon(p, q));
}

// From p : A' <= A and q : B <= B' derive A -> B <= A' -> B'.
ProofPtr eta(const ProofPtr& p, const ProofPtr& q) {
  return node(SubRule::Eta, Type::arrow(p->rhs, q->lhs), Type::arrow(p->lhs, q->rhs), {p, q});
}

// Leaves of the intersection tree of `t`, each with a projection proof from
// the tree's root (null when the leaf is the root).
void leaves(const Type& t, const ProofPtr& to_t, std::vector<std::pair<Type, ProofPtr>>& out) {
  if (t.is_inter()) {
    leaves(t.left(), trans(to_t, node(SubRule::InclL, t, t.left())), out);
    leaves(t.right(), trans(to_t, node(SubRule::InclR, t, t.right())), out);
  } else {
    out.emplace_back(t, to_t);
  }
}

constexpr int kMaxDepth = 20000;

}  // namespace

// ============================================================ Subtyper

Subtyper::Subtyper(TheorySpec spec) : spec_(std::move(spec)) {
  if (!validates_ba(spec_)) {
    throw UnsupportedTheory("theory '" + spec_.name +
                            "' does not validate Ba (needs arrow-inter and eta)");
  }
  if (auto v = validate(spec_); !v.empty()) {
    throw UnsupportedTheory("theory '" + spec_.name + "' is ill-formed: " +
                            std::string(violation_name(v.front())));
  }
}

bool Subtyper::is_top(const Type& t) { return spec_.has_omega && leq(Type::omega(), t); }

ProofPtr Subtyper::prove(const Type& a, const Type& b) { return prove_rec(a, b, 0); }

ProofPtr Subtyper::prove_rec(const Type& a, const Type& b, int depth) {
  if (depth > kMaxDepth) throw std::logic_error("subtype recursion exceeded depth bound");
  auto key = std::make_pair(a, b);
  {
    std::lock_guard lock(mu_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  }
  ProofPtr result = compute(a, b, depth);
  std::lock_guard lock(mu_);
  memo_.emplace(std::move(key), result);
  return result;
}

std::vector<ArrowHead> Subtyper::arrow_heads(const Type& t) {
  std::vector<ArrowHead> heads;
  auto add = [&](const Type& arrow, ProofPtr proof) {
    for (const auto& h : heads) {
      if (h.dom == arrow.dom() && h.cod == arrow.cod()) return;
    }
    heads.push_back({arrow.dom(), arrow.cod(), proof ? proof : refl(arrow)});
  };
  // Worklist of (leaf, proof t <= leaf); equation atoms unfold into more leaves.
  std::vector<std::pair<Type, ProofPtr>> work;
  leaves(t, nullptr, work);
  for (std::size_t i = 0; i < work.size(); ++i) {
    auto [leaf, proof] = work[i];
    if (leaf.is_arrow()) {
      add(leaf, proof);
    } else if (leaf.is_atom()) {
      if (const Type* rhs = spec_.equation(leaf.name())) {
        leaves(*rhs, trans(proof, node(SubRule::Unfold, leaf, *rhs)), work);
      }
    }
  }
  const Type omega_arrow = Type::arrow(Type::omega(), Type::omega());
  if (spec_.has(Rule::OmegaEta)) {
    ProofPtr to_omega = t.is_omega() ? nullptr : node(SubRule::OmegaTop, t, Type::omega());
    add(omega_arrow, trans(to_omega, node(SubRule::OmegaEta, Type::omega(), omega_arrow)));
  }
  if (spec_.has(Rule::OmegaLazy) && !heads.empty()) {
    const ArrowHead& h = heads.front();
    const Type arrow = Type::arrow(h.dom, h.cod);
    add(omega_arrow, trans(h.proof, node(SubRule::OmegaLazy, arrow, omega_arrow)));
  }
  return heads;
}

ProofPtr Subtyper::compute(const Type& a, const Type& b, int depth) {
  if (a == b) return refl(a);

  if (b.is_inter()) {
    ProofPtr p = prove_rec(a, b.left(), depth + 1);
    if (!p) return nullptr;
    ProofPtr q = prove_rec(a, b.right(), depth + 1);
    if (!q) return nullptr;
    return glb(p, q);
  }

  if (b.is_omega() && spec_.has(Rule::OmegaTop)) return node(SubRule::OmegaTop, a, b);

  std::vector<std::pair<Type, ProofPtr>> parts;
  leaves(a, nullptr, parts);
  for (const auto& [leaf, proof] : parts) {
    if (leaf == b) return proof;
  }

  if (b.is_atom()) {
    if (const Type* rhs = spec_.equation(b.name())) {
      ProofPtr p = prove_rec(a, *rhs, depth + 1);
      return p ? trans(p, node(SubRule::Fold, *rhs, b)) : nullptr;
    }
    if (b.is_nu() && spec_.has(Rule::NuTop)) {
      auto heads = arrow_heads(a);
      if (heads.empty()) return nullptr;
      const Type arrow = Type::arrow(heads.front().dom, heads.front().cod);
      return trans(heads.front().proof, node(SubRule::NuTop, arrow, b));
    }
    return nullptr;
  }

  // b = C -> D
  const Type& c = b.dom();
  const Type& d = b.cod();
  std::vector<ArrowHead> selected;
  std::vector<ProofPtr> dom_proofs;  // C <= A_i
  for (auto& h : arrow_heads(a)) {
    if (ProofPtr p = prove_rec(c, h.dom, depth + 1)) {
      selected.push_back(std::move(h));
      dom_proofs.push_back(std::move(p));
    }
  }
  if (selected.empty()) return nullptr;

  std::vector<Type> cods;
  for (const auto& h : selected) cods.push_back(h.cod);
  const Type meet = inter_all(cods);
  ProofPtr cod_proof = prove_rec(meet, d, depth + 1);
  if (!cod_proof) return nullptr;

  const std::size_t n = selected.size();
  // a <= /\ (A_i -> B_i)
  ProofPtr gather = selected[n - 1].proof;
  for (std::size_t i = n - 1; i-- > 0;) gather = glb(selected[i].proof, gather);
  // /\ (A_i -> B_i) <= /\ (C -> B_i)
  auto eta_i = [&](std::size_t i) { return eta(dom_proofs[i], refl(selected[i].cod)); };
  ProofPtr narrow = eta_i(n - 1);
  for (std::size_t i = n - 1; i-- > 0;) narrow = mon(eta_i(i), narrow);
  // /\ (C -> B_i) <= C -> /\ B_i
  ProofPtr merge = nullptr;
  Type merged_cod = selected[n - 1].cod;
  for (std::size_t i = n - 1; i-- > 0;) {
    const Type left = Type::arrow(c, selected[i].cod);
    ProofPtr inner = merge ? mon(refl(left), merge) : nullptr;
    const Type pre = Type::inter(left, Type::arrow(c, merged_cod));
    ProofPtr ai = node(SubRule::ArrowInter, pre,
                       Type::arrow(c, Type::inter(selected[i].cod, merged_cod)));
    merge = trans(inner, ai);
    merged_cod = Type::inter(selected[i].cod, merged_cod);
  }
  // C -> /\ B_i <= C -> D
  ProofPtr finish = eta(refl(c), cod_proof);
  return trans(trans(trans(gather, narrow), merge), finish);
}

bool leq(const TheorySpec& spec, const Type& a, const Type& b) {
  return Subtyper(spec).leq(a, b);
}

bool eq(const TheorySpec& spec, const Type& a, const Type& b) { return Subtyper(spec).eq(a, b); }

ProofPtr leq_proof(const TheorySpec& spec, const Type& a, const Type& b) {
  return Subtyper(spec).prove(a, b);
}

}  // namespace itypes
