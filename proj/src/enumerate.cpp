#include "itypes/enumerate.hpp"

#include <algorithm>
#include <unordered_set>

#include "itypes/subtype.hpp"

namespace itypes {

std::vector<Type> enumerate_types(const std::vector<std::string>& atoms, std::size_t max_size) {
  // by_size[s] holds every type of size s (s odd).
  std::vector<std::vector<Type>> by_size(max_size + 1);
  if (max_size >= 1) {
    for (const auto& a : atoms) by_size[1].push_back(Type::atom(a));
  }
  for (std::size_t s = 3; s <= max_size; s += 2) {
    for (std::size_t l = 1; l + 2 <= s; l += 2) {
      const std::size_t r = s - 1 - l;
      for (const Type& x : by_size[l]) {
        for (const Type& y : by_size[r]) {
          by_size[s].push_back(Type::arrow(x, y));
          by_size[s].push_back(Type::inter(x, y));
        }
      }
    }
  }
  std::vector<Type> out;
  for (auto& v : by_size) {
    for (auto& t : v) out.push_back(std::move(t));
  }
  return out;
}

std::size_t count_types(std::size_t atom_count, std::size_t max_size) {
  std::vector<std::size_t> n(max_size + 1, 0);
  if (max_size >= 1) n[1] = atom_count;
  std::size_t total = n.size() > 1 ? n[1] : 0;
  for (std::size_t s = 3; s <= max_size; s += 2) {
    for (std::size_t l = 1; l + 2 <= s; l += 2) n[s] += 2 * n[l] * n[s - 1 - l];
    total += n[s];
  }
  return total;
}

std::vector<Type> enumerate_canonical(const TheorySpec& spec,
                                      const std::vector<std::string>& atoms,
                                      std::size_t max_size) {
  std::unordered_set<Type> seen;
  std::vector<Type> out;
  for (const Type& t : enumerate_types(atoms, max_size)) {
    Type c = canonical(spec, t);
    if (c.size() > max_size) continue;
    if (seen.insert(c).second) out.push_back(std::move(c));
  }
  std::stable_sort(out.begin(), out.end(), [](const Type& a, const Type& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return print_type(a) < print_type(b);
  });
  return out;
}

std::vector<Term> enumerate_terms(const std::vector<std::string>& free,
                                  const std::vector<std::string>& binders,
                                  std::size_t max_size) {
  // Terms of size s with the given variables in scope.
  std::vector<Term> out;
  struct Gen {
    const std::vector<std::string>& binders;
    std::vector<Term> of_size(std::size_t s, const std::vector<std::string>& scope) {
      std::vector<Term> r;
      if (s == 1) {
        for (const auto& v : scope) r.push_back(Term::var(v));
        return r;
      }
      for (const auto& b : binders) {
        std::vector<std::string> inner = scope;
        if (std::find(inner.begin(), inner.end(), b) == inner.end()) inner.push_back(b);
        for (auto& body : of_size(s - 1, inner)) r.push_back(Term::lam(b, std::move(body)));
      }
      for (std::size_t l = 1; l + 1 < s; ++l) {
        auto fs = of_size(l, scope);
        auto as = of_size(s - 1 - l, scope);
        for (const auto& f : fs) {
          for (const auto& a : as) r.push_back(Term::app(f, a));
        }
      }
      return r;
    }
  } gen{binders};
  for (std::size_t s = 1; s <= max_size; ++s) {
    for (auto& t : gen.of_size(s, free)) out.push_back(std::move(t));
  }
  return out;
}

}  // namespace itypes
