#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "itypes/syntax.hpp"
#include "itypes/theory.hpp"

namespace itypes {

class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultOracleCap = 20000;

/// Least relation closed under the base preorder rules and the theory's
/// axioms/rules, computed by saturation over a finite universe of types.
/// Shares no code with Subtyper; used to cross-check it.
class OracleRelation {
 public:
  /// Universe: every type of size <= bound over `atoms` (plus omega/nu when
  /// they are constants), the subterms of `extra`, and the subterms of
  /// equation right-hand sides for atoms in the universe.
  /// With `stop_at`, saturation returns as soon as that pair is derived.
  static OracleRelation saturate(const TheorySpec& spec, std::vector<std::string> atoms,
                                 std::size_t bound, const std::vector<Type>& extra = {},
                                 std::size_t cap = kDefaultOracleCap,
                                 std::optional<std::pair<Type, Type>> stop_at = std::nullopt);

  // nullopt when either side is outside the universe.
  std::optional<bool> holds(const Type& a, const Type& b) const;
  bool contains(const Type& t) const { return index_.count(t) != 0; }
  std::size_t universe_size() const { return types_.size(); }
  std::size_t rounds() const { return rounds_; }
  const std::vector<Type>& universe() const { return types_; }

 private:
  bool get(std::size_t i, std::size_t j) const {
    return (bits_[i * words_ + j / 64] >> (j % 64)) & 1U;
  }
  bool set(std::size_t i, std::size_t j) {
    std::uint64_t& w = bits_[i * words_ + j / 64];
    const std::uint64_t m = std::uint64_t{1} << (j % 64);
    if (w & m) return false;
    w |= m;
    return true;
  }

  std::vector<Type> types_;
  std::unordered_map<Type, std::size_t> index_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
  std::size_t rounds_ = 0;
};

enum class OracleVerdict { Yes, NotFound };

/// Semi-decision for a <= b: Yes is sound; NotFound only means no proof uses
/// cut types inside the bounded universe.
OracleVerdict leq_oracle(const TheorySpec& spec, const Type& a, const Type& b,
                         std::size_t universe_bound, std::size_t cap = kDefaultOracleCap);

}  // namespace itypes
