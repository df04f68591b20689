#pragma once

#include <string>
#include <vector>

#include "itypes/assign.hpp"
#include "itypes/syntax.hpp"
#include "itypes/theory.hpp"

namespace itypes {

// Omega-free and validating Ba.
bool is_strict(const TheorySpec& spec);
// Omega present and validating AO.
bool is_natural(const TheorySpec& spec);

/// fun(A -> B) = Yes; fun(A & B) = fun(A) or fun(B); an atom is functional when
/// it is nu-equivalent, carries an equation, or is omega under omega-eta.
Verdict fun_predicate(const TheorySpec& spec, const Type& a);

struct FTypeVerdict {
  Verdict verdict = Verdict::Unknown;
  std::vector<std::string> notes;
};

/// Decision by cases: natural with omega-eta needs an equation on every plain
/// atom; strict with nu likewise; theories shaped like the four named ones
/// take the tabulated answer; otherwise equations on every plain atom give
/// Yes and anything else is Unknown.
FTypeVerdict is_f_type_theory(const TheorySpec& spec);

struct FunAlternativeReport {
  bool precondition_met = false;  // is_f_type_theory == Yes
  std::size_t checked = 0;
  std::vector<std::string> mismatches;
};

/// fun(A) = Yes iff A ~ nu or A ~ /\ arrows, where the arrows come from A's
/// conjuncts after unfolding equations (and omega under omega-eta). Runs even
/// when the precondition fails; the report says so.
FunAlternativeReport fun_alternative_check(const TheorySpec& spec, const std::vector<Type>& corpus);

struct AdequacyReport {
  bool strict = false;
  bool natural = false;
  bool inference_adequate = false;
  bool simple_adequate = false;
  Verdict f_type_theory = Verdict::Unknown;
  Verdict f_adequate = Verdict::Unknown;
  std::vector<std::string> notes;
};

AdequacyReport adequacy_report(const TheorySpec& spec);

}  // namespace itypes
