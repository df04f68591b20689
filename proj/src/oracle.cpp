#include "itypes/oracle.hpp"

#include <algorithm>
#include <set>

#include "itypes/enumerate.hpp"

namespace itypes {

namespace {

void subterms(const Type& t, std::vector<Type>& out) {
  if (!t.is_atom()) {
    subterms(t.left(), out);
    subterms(t.right(), out);
  }
  out.push_back(t);
}

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

}  // namespace

OracleRelation OracleRelation::saturate(const TheorySpec& spec, std::vector<std::string> atoms,
                                        std::size_t bound, const std::vector<Type>& extra,
                                        std::size_t cap,
                                        std::optional<std::pair<Type, Type>> stop_at) {
  std::set<std::string> atom_set(atoms.begin(), atoms.end());
  if (spec.has_omega) atom_set.insert(std::string(kOmega));
  if (spec.has_nu) atom_set.insert(std::string(kNu));
  for (const Type& t : extra) {
    for (const auto& a : atoms_of(t)) atom_set.insert(a);
  }
  // Close under atoms mentioned by equations of included atoms.
  for (bool grew = true; grew;) {
    grew = false;
    for (const auto& a : std::vector<std::string>(atom_set.begin(), atom_set.end())) {
      if (const Type* rhs = spec.equation(a)) {
        for (const auto& b : atoms_of(*rhs)) grew |= atom_set.insert(b).second;
      }
    }
  }
  atoms.assign(atom_set.begin(), atom_set.end());

  const std::size_t planned = count_types(atoms.size(), bound);
  if (planned > cap) {
    throw ResourceLimit("oracle universe of " + std::to_string(planned) +
                        " types exceeds cap " + std::to_string(cap));
  }

  OracleRelation rel;
  auto add = [&](const Type& t) {
    if (rel.index_.emplace(t, rel.types_.size()).second) rel.types_.push_back(t);
  };
  for (const Type& t : enumerate_types(atoms, bound)) add(t);
  std::vector<Type> closure;
  for (const Type& t : extra) subterms(t, closure);
  for (const auto& a : atoms) {
    if (const Type* rhs = spec.equation(a)) subterms(*rhs, closure);
  }
  for (const Type& t : closure) add(t);
  if (rel.types_.size() > cap) {
    throw ResourceLimit("oracle universe of " + std::to_string(rel.types_.size()) +
                        " types exceeds cap " + std::to_string(cap));
  }

  const std::size_t n = rel.types_.size();
  rel.words_ = (n + 63) / 64;
  rel.bits_.assign(n * rel.words_, 0);
  auto idx = [&](const Type& t) {
    auto it = rel.index_.find(t);
    return it == rel.index_.end() ? kNone : it->second;
  };

  std::vector<std::size_t> left(n, kNone);
  std::vector<std::size_t> right(n, kNone);
  std::vector<std::size_t> inters;
  std::vector<std::size_t> arrows;
  for (std::size_t i = 0; i < n; ++i) {
    const Type& t = rel.types_[i];
    if (t.is_atom()) continue;
    left[i] = idx(t.left());
    right[i] = idx(t.right());
    (t.is_inter() ? inters : arrows).push_back(i);
  }

  std::size_t target_a = kNone;
  std::size_t target_b = kNone;
  if (stop_at) {
    target_a = idx(stop_at->first);
    target_b = idx(stop_at->second);
  }
  auto done = [&] { return target_a != kNone && target_b != kNone && rel.get(target_a, target_b); };

  // Axioms and zero-premise rules.
  const std::size_t omega = spec.has_omega ? idx(Type::omega()) : kNone;
  const std::size_t nu = spec.has_nu ? idx(Type::nu()) : kNone;
  const std::size_t omega_arrow =
      spec.has_omega ? idx(Type::arrow(Type::omega(), Type::omega())) : kNone;
  for (std::size_t i = 0; i < n; ++i) {
    rel.set(i, i);
    if (omega != kNone && spec.has(Rule::OmegaTop)) rel.set(i, omega);
  }
  for (std::size_t k : inters) {
    rel.set(k, left[k]);
    rel.set(k, right[k]);
    if (left[k] == right[k]) rel.set(left[k], k);
    const Type& t = rel.types_[k];
    if (spec.has(Rule::ArrowInter) && t.left().is_arrow() && t.right().is_arrow() &&
        t.left().dom() == t.right().dom()) {
      const std::size_t target =
          idx(Type::arrow(t.left().dom(), Type::inter(t.left().cod(), t.right().cod())));
      if (target != kNone) rel.set(k, target);
    }
  }
  for (std::size_t k : arrows) {
    if (nu != kNone && spec.has(Rule::NuTop)) rel.set(k, nu);
    if (omega_arrow != kNone && spec.has(Rule::OmegaLazy)) rel.set(k, omega_arrow);
  }
  if (omega != kNone && omega_arrow != kNone && spec.has(Rule::OmegaEta)) {
    rel.set(omega, omega_arrow);
  }
  for (const auto& [atom, rhs] : spec.equations) {
    const std::size_t a = idx(Type::atom(atom));
    const std::size_t r = idx(rhs);
    if (a != kNone && r != kNone) {
      rel.set(a, r);
      rel.set(r, a);
    }
  }

  for (bool changed = true; changed && !done();) {
    changed = false;
    ++rel.rounds_;
    // (mon)
    for (std::size_t k1 : inters) {
      for (std::size_t k2 : inters) {
        if (rel.get(left[k1], left[k2]) && rel.get(right[k1], right[k2])) {
          changed |= rel.set(k1, k2);
        }
      }
    }
    // (eta)
    if (spec.has(Rule::Eta)) {
      for (std::size_t k1 : arrows) {
        for (std::size_t k2 : arrows) {
          if (rel.get(left[k2], left[k1]) && rel.get(right[k1], right[k2])) {
            changed |= rel.set(k1, k2);
          }
        }
      }
    }
    if (done()) break;
    // (trans): Warshall closure over bit rows.
    const std::size_t w = rel.words_;
    for (std::size_t k = 0; k < n; ++k) {
      const std::uint64_t* row_k = &rel.bits_[k * w];
      for (std::size_t i = 0; i < n; ++i) {
        if (i == k || !rel.get(i, k)) continue;
        std::uint64_t* row_i = &rel.bits_[i * w];
        for (std::size_t x = 0; x < w; ++x) {
          const std::uint64_t merged = row_i[x] | row_k[x];
          if (merged != row_i[x]) {
            row_i[x] = merged;
            changed = true;
          }
        }
      }
    }
  }
  return rel;
}

std::optional<bool> OracleRelation::holds(const Type& a, const Type& b) const {
  auto ia = index_.find(a);
  auto ib = index_.find(b);
  if (ia == index_.end() || ib == index_.end()) return std::nullopt;
  return get(ia->second, ib->second);
}

OracleVerdict leq_oracle(const TheorySpec& spec, const Type& a, const Type& b,
                         std::size_t universe_bound, std::size_t cap) {
  std::set<std::string> atoms = atoms_of(a);
  for (const auto& x : atoms_of(b)) atoms.insert(x);
  auto rel = OracleRelation::saturate(spec, {atoms.begin(), atoms.end()}, universe_bound, {a, b},
                                      cap, std::make_pair(a, b));
  return rel.holds(a, b).value_or(false) ? OracleVerdict::Yes : OracleVerdict::NotFound;
}

}  // namespace itypes
