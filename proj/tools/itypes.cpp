// itypes: command-line front end for the intersection-type library.
//
// Exit codes: leq 0 true / 1 false; check and interp 0 yes / 1 no / 3 unknown;
// laws 0 iff every law passes; 2 on any input or theory error.

#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "itypes/io.hpp"
#include "itypes/laws.hpp"

namespace {

using namespace itypes;

constexpr int kExitError = 2;

struct Config {
  std::string theory = "ba";
  std::size_t atoms = 3;
  std::size_t budget_size = 6;
  std::size_t budget_depth = 64;
  std::string output = "text";
  std::uint64_t seed = 1;

  bool json() const { return output == "json"; }
  SearchBudget budget() const { return {budget_size, budget_depth}; }
};

std::string fresh_atom_name(std::size_t i) {
  return i < 26 ? std::string(1, static_cast<char>('a' + i)) : "a" + std::to_string(i);
}

TheorySpec base_theory(const Config& cfg) {
  if (cfg.theory.rfind("file:", 0) == 0) return load_theory(cfg.theory, 0);
  auto n = named_theory_from_name(cfg.theory);
  if (!n) throw FormatError("unknown theory \"" + cfg.theory + "\" (expected ba, ehr, ao, bcd or file:PATH)");
  TheorySpec spec = named_theory(*n, 0);
  if (*n == NamedTheory::Ba || *n == NamedTheory::BCD) {
    std::set<std::string> fresh;
    for (std::size_t i = 0; i < cfg.atoms; ++i) fresh.insert(fresh_atom_name(i));
    spec = spec.with_atoms(fresh);
  }
  return spec;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) {
    if (item.find_first_not_of(" \t") != std::string::npos) out.push_back(item);
  }
  return out;
}

// Adds every unknown non-reserved atom of the given type strings.
TheorySpec extend_for(const TheorySpec& spec, const std::vector<std::string>& types) {
  std::set<std::string> fresh;
  for (const auto& s : types) {
    for (const auto& a : atoms_of(parse_type(s))) {
      if (!spec.has_atom(a)) fresh.insert(a);
    }
  }
  return spec.with_atoms(fresh);
}

// Type strings after the separator of "x:type" / "x=type" entries.
std::vector<std::string> entry_types(const std::vector<std::string>& entries, char sep) {
  std::vector<std::string> out;
  for (const auto& e : entries) {
    const auto at = e.find(sep);
    if (at == std::string::npos) {
      throw FormatError("entry \"" + e + "\" lacks '" + std::string(1, sep) + "'");
    }
    std::string t = e.substr(at + 1);
    t.erase(0, t.find_first_not_of(" \t"));
    t.erase(t.find_last_not_of(" \t") + 1);
    if (t != "empty") out.push_back(t);
  }
  return out;
}

Json basis_json(const Basis& ctx) {
  Json j = Json::object();
  for (const auto& [x, t] : ctx) j[x] = print_type(t);
  return j;
}

void print_derivation(std::ostream& out, const Derivation& d, std::size_t indent) {
  out << std::string(indent, ' ') << "(" << deriv_rule_name(d.rule) << ") "
      << print_judgment({d.ctx, d.term, d.type});
  if (d.leq) out << "   [" << print_type(d.leq->first) << " <= " << print_type(d.leq->second) << "]";
  out << "\n";
  for (const auto& p : d.premises) print_derivation(out, *p, indent + 2);
}

void print_proof(std::ostream& out, const SubtypeProof& p, std::size_t indent) {
  out << std::string(indent, ' ') << "(" << sub_rule_name(p.rule) << ") " << print_type(p.lhs)
      << " <= " << print_type(p.rhs) << "\n";
  for (const auto& q : p.premises) print_proof(out, *q, indent + 2);
}

int verdict_exit(Verdict v) {
  switch (v) {
    case Verdict::Yes: return 0;
    case Verdict::No: return 1;
    case Verdict::Unknown: return 3;
  }
  return kExitError;
}

int cmd_leq(const Config& cfg, const std::string& lhs_s, const std::string& rhs_s) {
  const TheorySpec spec = extend_for(base_theory(cfg), {lhs_s, rhs_s});
  const Type lhs = parse_type(lhs_s, spec);
  const Type rhs = parse_type(rhs_s, spec);
  Subtyper sub(spec);
  const ProofPtr proof = sub.prove(lhs, rhs);
  if (cfg.json()) {
    std::cout << Json{{"theory", spec.name},
                      {"lhs", print_type(lhs)},
                      {"rhs", print_type(rhs)},
                      {"result", proof != nullptr},
                      {"proof", proof ? proof_to_json(*proof) : Json(nullptr)}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << (proof ? "true" : "false") << "\n";
  }
  return proof ? 0 : 1;
}

int cmd_check(const Config& cfg, const std::string& ctx_s, const std::string& term_s,
              const std::string& type_s) {
  const auto entries = split(ctx_s, ',');
  auto types = entry_types(entries, ':');
  types.push_back(type_s);
  const TheorySpec spec = extend_for(base_theory(cfg), types);
  const Basis ctx = parse_basis(entries, spec);
  const Term term = parse_term(term_s);
  const Type type = parse_type(type_s, spec);
  const SearchResult r = derives(spec, ctx, term, type, cfg.budget());
  if (cfg.json()) {
    std::cout << Json{{"theory", spec.name},
                      {"ctx", basis_json(ctx)},
                      {"term", print_term(term)},
                      {"type", print_type(type)},
                      {"verdict", std::string(verdict_name(r.verdict))},
                      {"derivation", r.derivation ? derivation_to_json(*r.derivation) : Json(nullptr)}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << verdict_name(r.verdict) << "\n";
    if (r.derivation) print_derivation(std::cout, *r.derivation, 2);
  }
  return verdict_exit(r.verdict);
}

int cmd_infer(const Config& cfg, const std::string& ctx_s, const std::string& term_s,
              std::size_t size) {
  const auto entries = split(ctx_s, ',');
  const TheorySpec spec = extend_for(base_theory(cfg), entry_types(entries, ':'));
  const Basis ctx = parse_basis(entries, spec);
  const Term term = parse_term(term_s);
  const auto plain = spec.plain_atoms();
  const std::set<std::string> atoms(plain.begin(), plain.end());
  const auto types = infer_types(spec, ctx, term, size, atoms, cfg.budget());
  if (cfg.json()) {
    Json list = Json::array();
    for (const Type& t : types) list.push_back(print_type(t));
    std::cout << Json{{"theory", spec.name},
                      {"ctx", basis_json(ctx)},
                      {"term", print_term(term)},
                      {"size", size},
                      {"types", list}}
                     .dump(2)
              << "\n";
  } else {
    for (const Type& t : types) std::cout << print_type(t) << "\n";
  }
  return 0;
}

int cmd_interp(const Config& cfg, const std::string& env_s, const std::string& term_s,
               const std::string& type_s) {
  const auto entries = split(env_s, ',');
  auto types = entry_types(entries, '=');
  types.push_back(type_s);
  const TheorySpec spec = extend_for(base_theory(cfg), types);
  Env env;
  for (const auto& e : entries) {
    const auto at = e.find('=');
    std::string var = e.substr(0, at);
    var.erase(0, var.find_first_not_of(" \t"));
    var.erase(var.find_last_not_of(" \t") + 1);
    if (!is_identifier(var)) throw FormatError("bad variable name \"" + var + "\"");
    std::string t = e.substr(at + 1);
    t.erase(0, t.find_first_not_of(" \t"));
    t.erase(t.find_last_not_of(" \t") + 1);
    env.insert_or_assign(var, t == "empty" ? FiniteFilter::empty()
                                           : FiniteFilter::up(parse_type(t, spec)));
  }
  const Term term = parse_term(term_s);
  const Type type = parse_type(type_s, spec);
  const Verdict v = interpret_member(spec, term, env, type, cfg.budget());
  if (cfg.json()) {
    Json jenv = Json::object();
    for (const auto& [x, f] : env) jenv[x] = filter_to_json(f);
    std::cout << Json{{"theory", spec.name},
                      {"env", jenv},
                      {"term", print_term(term)},
                      {"type", print_type(type)},
                      {"verdict", std::string(verdict_name(v))}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << verdict_name(v) << "\n";
  }
  return verdict_exit(v);
}

int cmd_classify(const Config& cfg) {
  const TheorySpec spec = base_theory(cfg);
  const AdequacyReport r = adequacy_report(spec);
  if (cfg.json()) {
    Json j = report_to_json(r);
    j["theory"] = spec.name;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  const auto word = [](Verdict v) {
    return v == Verdict::Yes ? "Yes" : v == Verdict::No ? "No" : "Unknown";
  };
  std::cout << "theory: " << spec.name << "\n"
            << "strict: " << (r.strict ? "true" : "false") << "\n"
            << "natural: " << (r.natural ? "true" : "false") << "\n"
            << "inference_adequate: " << (r.inference_adequate ? "true" : "false") << "\n"
            << "simple_adequate: " << (r.simple_adequate ? "true" : "false") << "\n"
            << "f_type_theory: " << word(r.f_type_theory) << "\n"
            << "f_adequate: " << word(r.f_adequate) << "\n";
  for (const auto& n : r.notes) std::cout << "  " << n << "\n";
  return 0;
}

int cmd_laws(const Config& cfg, std::size_t size) {
  const TheorySpec spec = base_theory(cfg);
  LawConfig lc;
  lc.size = size;
  lc.seed = cfg.seed;
  lc.budget = cfg.budget();
  const auto results = all_laws(spec, lc);
  std::size_t failed = 0;
  for (const auto& r : results) failed += !r.passed();
  if (cfg.json()) {
    Json laws = Json::array();
    for (const auto& r : results) {
      laws.push_back({{"name", r.name},
                      {"passed", r.passed()},
                      {"checked", r.checked},
                      {"failures", r.failures},
                      {"first_failure", r.first_failure},
                      {"note", r.note}});
    }
    std::cout << Json{{"theory", spec.name},
                      {"size", size},
                      {"seed", cfg.seed},
                      {"passed", failed == 0},
                      {"laws", laws}}
                     .dump(2)
              << "\n";
  } else {
    for (const auto& r : results) {
      std::cout << (r.passed() ? "PASS " : "FAIL ") << r.name << " (" << r.checked << " checked";
      if (!r.passed()) std::cout << ", " << r.failures << " failed";
      std::cout << ")";
      if (!r.note.empty()) std::cout << " " << r.note;
      std::cout << "\n";
      if (!r.passed()) std::cout << "  first failure: " << r.first_failure << "\n";
    }
    std::cout << (results.size() - failed) << "/" << results.size() << " laws passed\n";
  }
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Intersection-type theories: subtyping, type assignment, filter models"};
  app.require_subcommand(1);
  Config cfg;
  app.add_option("--theory", cfg.theory, "ba, ehr, ao, bcd or file:PATH")->capture_default_str();
  app.add_option("--atoms", cfg.atoms, "fresh atoms for ba and bcd")->capture_default_str();
  app.add_option("--budget-size", cfg.budget_size, "candidate type size bound")->capture_default_str();
  app.add_option("--budget-depth", cfg.budget_depth, "search depth bound")->capture_default_str();
  app.add_option("--output", cfg.output, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed for sampled laws")->capture_default_str();
  app.fallthrough();

  std::string a, b, c;
  std::size_t size = 3;
  int code = 0;

  auto* leq = app.add_subcommand("leq", "decide LHS <= RHS");
  leq->add_option("lhs", a)->required();
  leq->add_option("rhs", b)->required();
  leq->callback([&] { code = cmd_leq(cfg, a, b); });

  auto* check = app.add_subcommand("check", "decide CTX |- TERM : TYPE");
  check->add_option("ctx", a, "comma-separated x:type entries")->required();
  check->add_option("term", b)->required();
  check->add_option("type", c)->required();
  check->callback([&] { code = cmd_check(cfg, a, b, c); });

  auto* infer = app.add_subcommand("infer", "derivable canonical types up to --size");
  infer->add_option("ctx", a, "comma-separated x:type entries")->required();
  infer->add_option("term", b)->required();
  infer->add_option("--size", size)->capture_default_str();
  infer->callback([&] { code = cmd_infer(cfg, a, b, size); });

  auto* interp = app.add_subcommand("interp", "TYPE in the interpretation of TERM");
  interp->add_option("env", a, "comma-separated x=type entries (type or empty)")->required();
  interp->add_option("term", b)->required();
  interp->add_option("type", c)->required();
  interp->callback([&] { code = cmd_interp(cfg, a, b, c); });

  auto* classify = app.add_subcommand("classify", "strict / natural / adequacy report");
  classify->callback([&] { code = cmd_classify(cfg); });

  std::size_t law_size = 5;
  auto* laws = app.add_subcommand("laws", "run the property suites");
  laws->add_option("--size", law_size, "type enumeration size")->capture_default_str();
  laws->callback([&] { code = cmd_laws(cfg, law_size); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "itypes: " << e.what() << "\n";
    return kExitError;
  }
  return code;
}
