#pragma once

#include <random>
#include <set>
#include <string>

#include "itypes/syntax.hpp"
#include "itypes/theory.hpp"

namespace itypes::testing {

// Named theory extended with the atoms a..d used in hand-written fixtures.
inline TheorySpec fixture(NamedTheory n, std::set<std::string> extra = {"a", "b", "c", "d"}) {
  return named_theory(n, 2).with_atoms(extra);
}

inline Type ty(const TheorySpec& spec, std::string_view src) { return parse_type(src, spec); }
inline Term tm(std::string_view src) { return parse_term(src); }

// Random type with exactly `size` nodes (size odd).
inline Type random_type(std::mt19937_64& rng, const std::vector<std::string>& atoms,
                        std::size_t size) {
  if (size <= 1) {
    std::uniform_int_distribution<std::size_t> pick(0, atoms.size() - 1);
    return Type::atom(atoms[pick(rng)]);
  }
  const std::size_t inner = size - 1;
  std::uniform_int_distribution<std::size_t> split(0, inner / 2 - 1);
  const std::size_t l = 2 * split(rng) + 1;
  Type left = random_type(rng, atoms, l);
  Type right = random_type(rng, atoms, inner - l);
  return std::bernoulli_distribution(0.5)(rng) ? Type::arrow(left, right)
                                               : Type::inter(left, right);
}

// Random term with roughly `size` nodes over the given variable names.
inline Term random_term(std::mt19937_64& rng, const std::vector<std::string>& vars,
                        std::size_t size) {
  std::uniform_int_distribution<std::size_t> pick(0, vars.size() - 1);
  if (size <= 1) return Term::var(vars[pick(rng)]);
  if (size == 2 || std::bernoulli_distribution(0.35)(rng)) {
    return Term::lam(vars[pick(rng)], random_term(rng, vars, size - 1));
  }
  std::uniform_int_distribution<std::size_t> split(1, size - 2);
  const std::size_t l = split(rng);
  return Term::app(random_term(rng, vars, l), random_term(rng, vars, size - 1 - l));
}

}  // namespace itypes::testing
