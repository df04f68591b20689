#pragma once

#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "itypes/syntax.hpp"
#include "itypes/theory.hpp"

namespace itypes {

class UnsupportedTheory : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ------------------------------------------------------------- canonical form

/// Flattened, deduplicated, sorted intersection. `is_top` marks the lone
/// conjunct omega. Arrow components are themselves canonical.
struct NormalType {
  std::vector<Type> conjuncts;
  bool is_top = false;

  friend bool operator==(const NormalType& a, const NormalType& b) {
    return a.is_top == b.is_top && a.conjuncts == b.conjuncts;
  }
};

NormalType normalize(const TheorySpec& spec, const Type& t);
// Left-nested intersection of the conjuncts.
Type denormalize(const NormalType& n);
// denormalize(normalize(t)).
Type canonical(const TheorySpec& spec, const Type& t);

// ------------------------------------------------------------- proof traces

enum class SubRule {
  Refl, Idem, InclL, InclR, Mon, Trans,
  OmegaTop, NuTop, OmegaEta, OmegaLazy, ArrowInter, Eta,
  Unfold,  // psi <= rhs(psi)
  Fold,    // rhs(psi) <= psi
};

std::string_view sub_rule_name(SubRule r);

struct SubtypeProof;
using ProofPtr = std::shared_ptr<const SubtypeProof>;

/// One rule instance concluding lhs <= rhs.
struct SubtypeProof {
  SubRule rule;
  Type lhs;
  Type rhs;
  std::vector<ProofPtr> premises;
};

struct ProofCheck {
  bool ok = true;
  std::string message;
  explicit operator bool() const { return ok; }
};

/// Checks every node of a proof tree against the base preorder rules plus the
/// theory's own axioms, rules and equations. Independent of Subtyper.
ProofCheck check_subtype_proof(const TheorySpec& spec, const SubtypeProof& proof);

std::size_t proof_size(const SubtypeProof& proof);

// ------------------------------------------------------------- decision

/// An arrow A_i -> B_i lying above a type, with the proof of that fact.
struct ArrowHead {
  Type dom;
  Type cod;
  ProofPtr proof;
};

/// Decides A <= B for theories validating Ba (arrow-inter and eta).
///
/// B is split into conjuncts. Omega on the right is trivial; a plain atom must
/// occur as a conjunct of A; nu needs an arrow head of A; an equation atom is
/// folded from its right-hand side. For C -> D the arrow heads A_i -> B_i of A
/// are collected (explicit arrows, equation unfoldings, omega -> omega under
/// omega-eta, and under omega-lazy when some head exists) and the test is
///   S = { i | C <= A_i } nonempty  and  /\_{i in S} B_i <= D.
/// S is the largest admissible index set, so the test is exhaustive.
///
/// Every positive answer carries a proof tree. The memo table is shared
/// between threads.
class Subtyper {
 public:
  explicit Subtyper(TheorySpec spec);

  const TheorySpec& spec() const { return spec_; }

  bool leq(const Type& a, const Type& b) { return prove(a, b) != nullptr; }
  bool eq(const Type& a, const Type& b) { return leq(a, b) && leq(b, a); }
  // omega <= t (false when omega is not a constant).
  bool is_top(const Type& t);
  // Null when a <= b does not hold.
  ProofPtr prove(const Type& a, const Type& b);

  std::vector<ArrowHead> arrow_heads(const Type& t);

 private:
  struct PairHash {
    std::size_t operator()(const std::pair<Type, Type>& p) const {
      return p.first.hash() * 31 + p.second.hash();
    }
  };

  ProofPtr compute(const Type& a, const Type& b, int depth);
  ProofPtr prove_rec(const Type& a, const Type& b, int depth);

  TheorySpec spec_;
  std::mutex mu_;
  std::unordered_map<std::pair<Type, Type>, ProofPtr, PairHash> memo_;
};

bool leq(const TheorySpec& spec, const Type& a, const Type& b);
bool eq(const TheorySpec& spec, const Type& a, const Type& b);
ProofPtr leq_proof(const TheorySpec& spec, const Type& a, const Type& b);

}  // namespace itypes
