#pragma once

#include <cstddef>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "itypes/subtype.hpp"
#include "itypes/syntax.hpp"
#include "itypes/theory.hpp"

namespace itypes {

/// Gamma: one type per variable.
using Basis = std::map<std::string, Type>;

std::string print_basis(const Basis& ctx);

enum class DerivRule { Ax, AxOmega, AxNu, ArrowI, ArrowE, InterI, Leq };

std::string_view deriv_rule_name(DerivRule r);
std::optional<DerivRule> deriv_rule_from_name(std::string_view s);

struct Derivation;
using DerivPtr = std::shared_ptr<const Derivation>;

/// One rule instance concluding ctx |- term : type.
///   Ax      x : ctx(x)
///   AxOmega M : omega                      (omega a constant)
///   AxNu    \x.M : nu                      (nu a constant)
///   ArrowI  \x.M : C -> D   from  ctx[x:=C] |- M : D
///   ArrowE  M N : A         from  M : B -> A  and  N : B
///   InterI  M : A & B       from  M : A  and  M : B
///   Leq     M : B           from  M : A  with  leq = (A, B)
struct Derivation {
  DerivRule rule;
  Basis ctx;
  Term term;
  Type type;
  std::vector<DerivPtr> premises;
  std::optional<std::pair<Type, Type>> leq;
};

std::size_t derivation_size(const Derivation& d);

struct DerivationCheck {
  bool ok = true;
  // Premise indices from the root to the first bad node.
  std::vector<std::size_t> path;
  std::string message;
  explicit operator bool() const { return ok; }
};

/// Schema check of every node; Leq nodes go through subtype::leq.
/// Throws UnsupportedTheory when the theory does not validate Ba.
DerivationCheck check_derivation(const TheorySpec& spec, const Derivation& d);

struct SearchBudget {
  std::size_t max_candidate_type_size = 6;
  std::size_t max_depth = 64;
};

enum class Verdict { Yes, No, Unknown };

std::string_view verdict_name(Verdict v);

struct SearchResult {
  Verdict verdict = Verdict::Unknown;
  // Set iff verdict is Yes.
  DerivPtr derivation;
};

/// Generation-lemma-directed search for ctx |- term : type.
///
/// Variable-headed spines x N1 .. Nk are decided exactly: the types of
/// x N1 .. Nj form the principal filter generated by the intersection of the
/// codomains B_i of those arrow heads A_i -> B_i of the previous generator with
/// N_j : A_i. Unknown sub-answers widen that set into a sure and a possible
/// generator. Abstractions split the target into conjuncts. Other
/// applications try candidate argument types from a bounded pool and never
/// answer No.
///
/// Requires a theory validating Ba. Results are memoized per instance.
class Searcher {
 public:
  Searcher(const TheorySpec& spec, SearchBudget budget = {});

  SearchResult derives(const Basis& ctx, const Term& term, const Type& type);

  const TheorySpec& spec() const { return spec_; }
  const SearchBudget& budget() const { return budget_; }
  Subtyper& subtyper() { return *sub_; }

 private:
  struct Key {
    Basis ctx;
    Term term;
    Type type;
    friend bool operator==(const Key& a, const Key& b) {
      return a.term == b.term && a.type == b.type && a.ctx == b.ctx;
    }
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const;
  };
  struct Entry {
    SearchResult result;
    // Remaining depth the answer was computed with; exact answers use max.
    std::size_t remaining;
  };

  SearchResult run(const Basis& ctx, const Term& term, const Type& type, std::size_t depth);
  SearchResult compute(const Basis& ctx, const Term& term, const Type& type, std::size_t depth);
  SearchResult abstraction(const Basis& ctx, const Term& term, const Type& type,
                           std::size_t depth);
  SearchResult spine(const Basis& ctx, const Term& term, const Type& type, std::size_t depth);
  SearchResult application(const Basis& ctx, const Term& term, const Type& type,
                           std::size_t depth);
  const std::vector<Type>& pool(const Basis& ctx, const Type& type);

  TheorySpec spec_;
  SearchBudget budget_;
  std::unique_ptr<Subtyper> sub_;
  std::unordered_map<Key, Entry, KeyHash> memo_;
  std::map<std::vector<std::string>, std::vector<Type>> pools_;
};

SearchResult derives(const TheorySpec& spec, const Basis& ctx, const Term& term, const Type& type,
                     SearchBudget budget = {});

inline constexpr std::size_t kDefaultInferCap = 200000;

/// Canonical types of size <= size_bound over `atoms` (plus the theory's
/// omega/nu) for which the search answers Yes.
std::vector<Type> infer_types(const TheorySpec& spec, const Basis& ctx, const Term& term,
                              std::size_t size_bound, const std::set<std::string>& atoms,
                              SearchBudget budget = {}, std::size_t cap = kDefaultInferCap);

struct Judgment {
  Basis ctx;
  Term term;
  Type type;
};

std::string print_judgment(const Judgment& j);

struct AdmissibilityReport {
  std::size_t judgments = 0;  // Yes-judgments examined
  std::size_t skipped = 0;    // corpus entries that were not Yes
  std::size_t checks = 0;
  std::vector<std::string> counterexamples;
};

/// Weakening, strengthening, intersection elimination and (<= L) on every
/// Yes-judgment of the corpus. A derived judgment that is not Yes is reported.
AdmissibilityReport admissible_rule_suite(const TheorySpec& spec,
                                          const std::vector<Judgment>& corpus,
                                          SearchBudget budget = {});

/// Inversion check of a Yes-judgment against the shape of its derivation:
/// variables need (x : B) in ctx with B <= A; applications need arrow premises
/// M : B_i -> C_i, N : B_i with /\ C_i <= A; abstractions need arrow parts
/// ctx[x:=B_i] |- M : C_i with /\ (B_i -> C_i) <= A, or nu <= A. Component
/// judgments are re-derived with a fresh searcher. Omega-equivalent targets
/// pass trivially. Returns an empty string on success.
std::string generation_roundtrip(const TheorySpec& spec, const Judgment& j, const Derivation& d,
                                 SearchBudget budget = {});

enum class HindleyStatus { AdmissibleOnInstance, CounterexampleCandidate, Unknown };

std::string_view hindley_status_name(HindleyStatus s);

struct HindleyInstance {
  Basis ctx;
  Term premise_term;     // M
  Type premise_type;     // psi & (omega^n -> omega)
  Term conclusion_term;  // \x1 .. xn. M x1 .. xn
  Type conclusion_type;  // psi
  Verdict premise = Verdict::Unknown;
  Verdict conclusion = Verdict::Unknown;
  HindleyStatus status = HindleyStatus::Unknown;
};

/// omega^n -> omega, i.e. omega -> .. -> omega with n arrows.
Type omega_arity(std::size_t n);

/// Instantiates  ctx |- M : psi & (omega^n -> omega)  ==>
/// ctx |- \x1 .. xn. M x1 .. xn : psi  over a corpus of (ctx, M). The default
/// corpus (empty argument) uses M = x with x : psi & (omega^n -> omega), x : psi
/// and x : omega^n -> omega. A vacuous premise (No) counts as admissible.
std::vector<HindleyInstance> hindley_rule_check(
    const TheorySpec& spec, const std::string& psi, std::size_t n, SearchBudget budget = {},
    std::vector<std::pair<Basis, Term>> corpus = {});

}  // namespace itypes
