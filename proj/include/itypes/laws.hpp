#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "itypes/assign.hpp"
#include "itypes/theory.hpp"

namespace itypes {

struct LawResult {
  std::string name;
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::string first_failure;
  std::string note;

  bool passed() const { return failures == 0; }
};

struct LawConfig {
  std::size_t size = 5;  // enumeration size for types
  std::uint64_t seed = 1;
  std::size_t oracle_bound = 7;
  std::size_t samples = 20000;
  SearchBudget budget{};
};

/// The theory used for enumeration: the given one, extended with fresh
/// equation-free atoms until it has two plain atoms; `atoms` are those two
/// plus omega/nu when they are constants.
struct LawUniverse {
  TheorySpec spec;
  std::vector<std::string> atoms;
};
LawUniverse law_universe(const TheorySpec& spec);

std::vector<LawResult> syntax_laws(const LawConfig& cfg);
std::vector<LawResult> theory_laws(const TheorySpec& spec);

// refl, trans, idem, incl, mon, eta, arrow-inter over the enumeration.
std::vector<LawResult> preorder_laws(const TheorySpec& spec, const LawConfig& cfg);
// leq_oracle Yes => leq, and every leq carries a checked proof trace.
LawResult oracle_agreement(const TheorySpec& spec, const LawConfig& cfg);
std::vector<LawResult> subtype_laws(const TheorySpec& spec, const LawConfig& cfg);

/// Yes-judgments: fixed golden ones for the theory (when it has the shape of
/// a named theory) followed by random ones, `count` in total.
std::vector<Judgment> yes_corpus(const TheorySpec& spec, std::size_t count, const LawConfig& cfg);
LawResult generation_law(const TheorySpec& spec, const std::vector<Judgment>& corpus,
                         const LawConfig& cfg);
LawResult admissibility_law(const TheorySpec& spec, const std::vector<Judgment>& corpus,
                            const LawConfig& cfg);
std::vector<LawResult> assign_laws(const TheorySpec& spec, const LawConfig& cfg);

// Upward and intersection closure of every represented filter.
std::vector<LawResult> filter_closure_laws(const TheorySpec& spec, const LawConfig& cfg);
LawResult apply_monotonicity(const TheorySpec& spec, const LawConfig& cfg);
LawResult prop_simple_law(const TheorySpec& spec, const LawConfig& cfg);
// Search on env bases versus the compositional denotation.
LawResult interpretation_law(const TheorySpec& spec, const LawConfig& cfg);
std::vector<LawResult> filter_laws(const TheorySpec& spec, const LawConfig& cfg);

std::vector<LawResult> classify_laws(const TheorySpec& spec, const LawConfig& cfg);

std::vector<LawResult> all_laws(const TheorySpec& spec, const LawConfig& cfg);

}  // namespace itypes
