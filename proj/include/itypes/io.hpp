#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "itypes/assign.hpp"
#include "itypes/classify.hpp"
#include "itypes/filter.hpp"
#include "itypes/subtype.hpp"
#include "itypes/theory.hpp"

namespace itypes {

using Json = nlohmann::json;

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// {"name", "atoms", "omega", "nu", "rules", "equations": {atom: type}}
Json theory_to_json(const TheorySpec& spec);
// Throws FormatError on shape errors and on validation failures.
TheorySpec theory_from_json(const Json& j);

/// Locates a theory file: the path itself, then each directory of the
/// colon-separated ITYPES_THEORY_PATH; ".json" is tried as a suffix too.
std::filesystem::path resolve_theory_file(const std::string& path);

/// "ba" / "ehr" / "ao" / "bcd" (any case; extra_atoms fresh atoms for Ba and
/// BCD) or "file:<path>".
TheorySpec load_theory(const std::string& ref, std::size_t extra_atoms);

// {"rule", "ctx": {var: type}, "term", "type", "premises": [...], "leq"?: [lhs, rhs]}
Json derivation_to_json(const Derivation& d);
DerivPtr derivation_from_json(const Json& j);

// {"rule", "lhs", "rhs", "premises": [...]}
Json proof_to_json(const SubtypeProof& p);

Json report_to_json(const AdequacyReport& r);

// Canonical generator string or "empty".
Json filter_to_json(const FiniteFilter& f);

// "x: type" with an empty string giving no entry.
Basis parse_basis(const std::vector<std::string>& entries, const TheorySpec& spec);

}  // namespace itypes
