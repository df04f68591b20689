#include "itypes/io.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace itypes {

namespace {

std::string verdict_word(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "Yes";
    case Verdict::No: return "No";
    case Verdict::Unknown: return "Unknown";
  }
  return "?";
}

template <typename T>
T field(const Json& j, const char* key) {
  if (!j.contains(key)) throw FormatError(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw FormatError(std::string("field \"") + key + "\" has the wrong type");
  }
}

}  // namespace

Json theory_to_json(const TheorySpec& spec) {
  Json rules = Json::array();
  for (Rule r : spec.rules) rules.push_back(std::string(rule_name(r)));
  Json eqs = Json::object();
  for (const auto& [atom, rhs] : spec.equations) eqs[atom] = print_type(rhs);
  return Json{{"name", spec.name},   {"atoms", spec.atoms}, {"omega", spec.has_omega},
              {"nu", spec.has_nu},   {"rules", rules},      {"equations", eqs}};
}

TheorySpec theory_from_json(const Json& j) {
  if (!j.is_object()) throw FormatError("theory must be a JSON object");
  TheorySpec spec;
  spec.name = j.value("name", std::string());
  spec.atoms = field<std::vector<std::string>>(j, "atoms");
  spec.has_omega = field<bool>(j, "omega");
  spec.has_nu = field<bool>(j, "nu");
  for (const auto& r : field<std::vector<std::string>>(j, "rules")) {
    auto rule = rule_from_name(r);
    if (!rule) throw FormatError("unknown rule \"" + r + "\"");
    spec.rules.insert(*rule);
  }
  if (j.contains("equations")) {
    for (const auto& [atom, rhs] : field<std::map<std::string, std::string>>(j, "equations")) {
      try {
        spec.equations.insert_or_assign(atom, parse_type(rhs));
      } catch (const ParseError& e) {
        throw FormatError("equation for " + atom + ": " + e.what());
      }
    }
  }
  const auto violations = validate(spec);
  if (!violations.empty()) {
    std::string msg = "theory violates:";
    for (Violation v : violations) msg += " " + std::string(violation_name(v));
    throw FormatError(msg);
  }
  return spec;
}

std::filesystem::path resolve_theory_file(const std::string& path) {
  namespace fs = std::filesystem;
  std::vector<fs::path> tries{path, path + ".json"};
  if (const char* env = std::getenv("ITYPES_THEORY_PATH"); env && fs::path(path).is_relative()) {
    std::stringstream dirs(env);
    std::string dir;
    while (std::getline(dirs, dir, ':')) {
      if (dir.empty()) continue;
      tries.push_back(fs::path(dir) / path);
      tries.push_back(fs::path(dir) / (path + ".json"));
    }
  }
  for (const auto& p : tries) {
    std::error_code ec;
    if (fs::is_regular_file(p, ec)) return p;
  }
  throw FormatError("theory file not found: " + path);
}

TheorySpec load_theory(const std::string& ref, std::size_t extra_atoms) {
  if (ref.rfind("file:", 0) == 0) {
    const auto path = resolve_theory_file(ref.substr(5));
    std::ifstream in(path);
    Json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw FormatError(path.string() + ": " + e.what());
    }
    return theory_from_json(j);
  }
  auto n = named_theory_from_name(ref);
  if (!n) throw FormatError("unknown theory \"" + ref + "\" (expected ba, ehr, ao, bcd or file:PATH)");
  return named_theory(*n, extra_atoms);
}

Json derivation_to_json(const Derivation& d) {
  Json ctx = Json::object();
  for (const auto& [x, t] : d.ctx) ctx[x] = print_type(t);
  Json premises = Json::array();
  for (const auto& p : d.premises) premises.push_back(derivation_to_json(*p));
  Json j{{"rule", std::string(deriv_rule_name(d.rule))},
         {"ctx", ctx},
         {"term", print_term(d.term)},
         {"type", print_type(d.type)},
         {"premises", premises}};
  if (d.leq) j["leq"] = Json::array({print_type(d.leq->first), print_type(d.leq->second)});
  return j;
}

DerivPtr derivation_from_json(const Json& j) {
  if (!j.is_object()) throw FormatError("derivation node must be an object");
  const auto rule_s = field<std::string>(j, "rule");
  auto rule = deriv_rule_from_name(rule_s);
  if (!rule) throw FormatError("unknown derivation rule \"" + rule_s + "\"");
  try {
    Basis ctx;
    for (const auto& [x, t] : field<std::map<std::string, std::string>>(j, "ctx")) {
      ctx.emplace(x, parse_type(t));
    }
    std::vector<DerivPtr> premises;
    if (j.contains("premises")) {
      for (const auto& p : j.at("premises")) premises.push_back(derivation_from_json(p));
    }
    std::optional<std::pair<Type, Type>> leq;
    if (j.contains("leq")) {
      const auto pair = field<std::vector<std::string>>(j, "leq");
      if (pair.size() != 2) throw FormatError("\"leq\" must hold two types");
      leq = std::make_pair(parse_type(pair[0]), parse_type(pair[1]));
    }
    return std::make_shared<const Derivation>(
        Derivation{*rule, std::move(ctx), parse_term(field<std::string>(j, "term")),
                   parse_type(field<std::string>(j, "type")), std::move(premises),
                   std::move(leq)});
  } catch (const ParseError& e) {
    throw FormatError(std::string("derivation: ") + e.what());
  }
}

Json proof_to_json(const SubtypeProof& p) {
  Json premises = Json::array();
  for (const auto& q : p.premises) premises.push_back(proof_to_json(*q));
  return Json{{"rule", std::string(sub_rule_name(p.rule))},
              {"lhs", print_type(p.lhs)},
              {"rhs", print_type(p.rhs)},
              {"premises", premises}};
}

Json report_to_json(const AdequacyReport& r) {
  return Json{{"strict", r.strict},
              {"natural", r.natural},
              {"inference_adequate", r.inference_adequate},
              {"simple_adequate", r.simple_adequate},
              {"f_type_theory", verdict_word(r.f_type_theory)},
              {"f_adequate", verdict_word(r.f_adequate)},
              {"notes", r.notes}};
}

Json filter_to_json(const FiniteFilter& f) { return print_filter(f); }

Basis parse_basis(const std::vector<std::string>& entries, const TheorySpec& spec) {
  Basis ctx;
  for (const auto& e : entries) {
    if (e.find_first_not_of(" \t") == std::string::npos) continue;
    const auto colon = e.find(':');
    if (colon == std::string::npos) throw FormatError("basis entry \"" + e + "\" lacks ':'");
    std::string var = e.substr(0, colon);
    var.erase(0, var.find_first_not_of(" \t"));
    var.erase(var.find_last_not_of(" \t") + 1);
    if (!is_identifier(var)) throw FormatError("bad variable name \"" + var + "\"");
    if (ctx.count(var)) throw FormatError("variable " + var + " bound twice");
    ctx.emplace(var, parse_type(e.substr(colon + 1), spec));
  }
  return ctx;
}

}  // namespace itypes
