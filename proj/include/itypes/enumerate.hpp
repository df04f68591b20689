#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "itypes/syntax.hpp"
#include "itypes/theory.hpp"

namespace itypes {

/// All types of size <= max_size over the given atoms, ordered by size and
/// then by construction order. Sizes are always odd.
std::vector<Type> enumerate_types(const std::vector<std::string>& atoms, std::size_t max_size);

/// Canonical forms (see normalize) of enumerate_types, deduplicated, ordered
/// by size then printed form.
std::vector<Type> enumerate_canonical(const TheorySpec& spec,
                                      const std::vector<std::string>& atoms,
                                      std::size_t max_size);

/// Number of types enumerate_types would return, without building them.
std::size_t count_types(std::size_t atom_count, std::size_t max_size);

/// Every term of size <= max_size over the given free variables, with
/// binders drawn from `binders`.
std::vector<Term> enumerate_terms(const std::vector<std::string>& free,
                                  const std::vector<std::string>& binders,
                                  std::size_t max_size);

}  // namespace itypes
