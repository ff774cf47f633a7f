#include "commands.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "glue/composer.hpp"
#include "glue/error.hpp"
#include "glue/inhabitation.hpp"
#include "glue/kernel.hpp"
#include "glue/lexicon.hpp"
#include "glue/parse.hpp"
#include "glue/pipeline.hpp"

namespace glue::cli {

namespace {

using Json = nlohmann::ordered_json;

class InputError : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Outcome input_error(const std::string& message) { return {kInputError, "", "error: " + message + "\n"}; }

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// Loads a lexicon or reports why it cannot be used.
std::optional<Lexicon> open_lexicon(const std::string& path, Outcome& failure) {
  LexiconCheck check = check_lexicon(read_file(path));
  if (check.lexicon) return std::move(check.lexicon);
  std::string err = "error: " + path + " is not a valid lexicon\n";
  for (const auto& d : check.diagnostics) err += "  " + describe(d) + "\n";
  failure = {kInputError, "", err};
  return std::nullopt;
}

std::string describe_used(const Analysis& a) {
  std::string out;
  for (const auto& [index, adaptations] : a.used) {
    if (!out.empty()) out += "; ";
    out += a.occurrences[index] + "#" + std::to_string(index) + ":";
    for (const auto& ad : adaptations) out += " " + ad.describe();
  }
  return out;
}

Json used_json(const Analysis& a) {
  Json out = Json::array();
  for (const auto& [index, adaptations] : a.used) {
    Json labels = Json::array();
    for (const auto& ad : adaptations) labels.push_back(ad.describe());
    out.push_back({{"occurrence", index}, {"word", a.occurrences[index]}, {"adaptations", labels}});
  }
  return out;
}

}  // namespace

Outcome lexicon_check(const std::string& path, bool json) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const InputError& e) {
    return input_error(e.what());
  }
  LexiconCheck check = check_lexicon(text);
  bool syntax = false;
  for (const auto& d : check.diagnostics) syntax = syntax || d.kind == LexiconDiagnostic::Kind::SyntaxError;
  int code = check.diagnostics.empty() ? kOk : syntax ? kInputError : kFailure;

  if (json) {
    Json j{{"input", path}, {"ok", check.diagnostics.empty()}};
    if (check.lexicon) {
      j["sorts"] = check.lexicon->declared_sorts.size();
      j["coercions"] = check.lexicon->coercions.edges().size();
      j["words"] = check.lexicon->entries.size();
    }
    Json diags = Json::array();
    for (const auto& d : check.diagnostics)
      diags.push_back({{"kind", to_string(d.kind)}, {"line", d.line}, {"word", d.word}, {"message", d.message}});
    j["diagnostics"] = diags;
    return {code, dump(j), ""};
  }
  std::ostringstream os;
  if (check.lexicon) {
    os << path << ": ok (" << check.lexicon->declared_sorts.size() << " sorts, "
       << check.lexicon->coercions.edges().size() << " coercions, " << check.lexicon->entries.size() << " words)\n";
  } else {
    std::size_t n = check.diagnostics.size();
    os << path << ": " << n << (n == 1 ? " problem\n" : " problems\n");
    for (const auto& d : check.diagnostics) os << "  " << describe(d) << '\n';
  }
  return {code, os.str(), ""};
}

Outcome compose(const std::string& lexicon_path, const std::string& trees_path, const ComposeFlags& flags) {
  try {
    Outcome failure;
    auto lex = open_lexicon(lexicon_path, failure);
    if (!lex) return failure;
    std::vector<ParseTree> trees;
    try {
      trees = read_trees(read_file(trees_path), lex->signature);
    } catch (const SyntaxError& e) {
      return input_error(trees_path + ": " + e.what());
    }
    std::size_t limit = flags.limit.value_or(kDefaultAnalysisLimit);
    bool show_formula = flags.show_formula || (!flags.show_term && !flags.profile);

    int code = kOk;
    std::ostringstream os;
    Json report{{"lexicon", lexicon_path}, {"trees", trees_path}, {"items", Json::array()}};
    for (std::size_t i = 0; i < trees.size(); ++i) {
      Composition comp = compose_with_diagnosis(trees[i], *lex, limit);
      if (comp.analyses.empty()) code = kFailure;
      Json item{{"tree", print_tree(trees[i])}, {"status", comp.analyses.empty() ? "fail" : "ok"}};
      Json analyses = Json::array();
      std::size_t n = comp.analyses.size();
      os << "tree " << i + 1 << ": " << print_tree(trees[i]) << '\n';
      os << "  " << n << (n == 1 ? " analysis\n" : " analyses\n");
      for (std::size_t k = 0; k < n; ++k) {
        const Analysis& a = comp.analyses[k];
        Json ja{{"type", print_type(a.result_type)}, {"adaptations", used_json(a)}};
        os << "  analysis " << k + 1 << '\n';
        os << "    uses: " << describe_used(a) << '\n';
        if (flags.show_term || flags.json) {
          ja["term"] = print_term(a.term);
          if (flags.show_term) os << "    term: " << print_term(a.term) << '\n';
        }
        try {
          Reading r = read_analysis(a, lex->signature);
          ja["normal"] = print_term(r.eta_long.term);
          ja["formula"] = hol::print_formula(r.formula);
          ja["formula_unicode"] = hol::print_formula(r.formula, hol::Style::Unicode);
          ja["profile"] = {{"order", r.profile.order}, {"sorts", r.profile.sorts}};
          if (flags.show_term) os << "    normal: " << print_term(r.eta_long.term) << '\n';
          if (show_formula) os << "    formula: " << hol::print_formula(r.formula) << '\n';
          if (flags.profile) os << "    profile: order " << r.profile.order << ", sorts " << r.profile.sorts << '\n';
        } catch (const hol::ExtractionError& e) {
          ja["formula_error"] = e.what();
          os << "    formula: none (" << e.what() << ")\n";
        }
        analyses.push_back(ja);
      }
      item["analyses"] = analyses;
      if (!comp.diagnosis.empty()) {
        item["diagnosis"] = comp.diagnosis.describe();
        os << "  diagnosis: " << comp.diagnosis.describe() << '\n';
      }
      report["items"].push_back(item);
    }
    report["ok"] = code == kOk;
    return {code, flags.json ? dump(report) : os.str(), ""};
  } catch (const InputError& e) {
    return input_error(e.what());
  } catch (const UnknownWord& e) {
    return input_error(e.what());
  }
}

namespace {

struct ParsedTerm {
  Lexicon lexicon;
  Term term;
  Type type;
};

// Shared front half of typecheck and normalize.
std::variant<ParsedTerm, Outcome> parse_and_check(const std::string& lexicon_path, const std::string& text, bool json) {
  Outcome failure;
  auto lex = open_lexicon(lexicon_path, failure);
  if (!lex) return failure;
  auto fail = [&](int code, const std::string& kind, const std::string& message, const std::string& path) {
    if (json) {
      Json j{{"term", text}, {"ok", false}, {"error", kind}, {"message", message}};
      if (!path.empty()) j["path"] = path;
      return Outcome{code, dump(j), ""};
    }
    return Outcome{code, "", "error: " + message + "\n"};
  };
  Term term = Term::var("_");
  try {
    term = parse_term(text, lex->signature);
  } catch (const SyntaxError& e) {
    return fail(kInputError, "SyntaxError", e.what(), "");
  } catch (const UnknownSort& e) {
    return fail(kFailure, "UnknownSort", e.what(), "");
  } catch (const UnknownConstant& e) {
    return fail(kFailure, "UnknownConstant", e.what(), "");
  }
  try {
    Type type = typecheck(term, lex->signature);
    return ParsedTerm{std::move(*lex), term, type};
  } catch (const TypeError& e) {
    return fail(kFailure, to_string(e.kind()), e.what(), e.path_string());
  }
}

}  // namespace

Outcome typecheck(const std::string& lexicon_path, const std::string& text, bool json) {
  try {
    auto parsed = parse_and_check(lexicon_path, text, json);
    if (auto* o = std::get_if<Outcome>(&parsed)) return *o;
    const auto& p = std::get<ParsedTerm>(parsed);
    if (json) return {kOk, dump(Json{{"term", print_term(p.term)}, {"ok", true}, {"type", print_type(p.type)}}), ""};
    return {kOk, "type: " + print_type(p.type) + "\n", ""};
  } catch (const InputError& e) {
    return input_error(e.what());
  }
}

Outcome normalize(const std::string& lexicon_path, const std::string& text, bool eta_long, bool json) {
  try {
    auto parsed = parse_and_check(lexicon_path, text, json);
    if (auto* o = std::get_if<Outcome>(&parsed)) return *o;
    const auto& p = std::get<ParsedTerm>(parsed);
    const Signature& sig = p.lexicon.signature;
    NormalForm nf = normalize(unfold_definitions(p.term, sig), sig);
    std::optional<NormalForm> eta;
    if (eta_long) eta = eta_expand(nf.term, sig);
    if (json) {
      Json j{{"term", print_term(p.term)}, {"ok", true}, {"type", print_type(p.type)},
             {"normal", print_term(nf.term)}, {"steps", nf.steps}};
      if (eta) j["eta_long"] = print_term(eta->term);
      return {kOk, dump(j), ""};
    }
    std::string out = "type: " + print_type(p.type) + "\nnormal: " + print_term(nf.term) + "\n";
    if (eta) out += "eta-long: " + print_term(eta->term) + "\n";
    out += "steps: " + std::to_string(nf.steps) + "\n";
    return {kOk, out, ""};
  } catch (const FuelExhausted& e) {
    return {kFailure, "", std::string("error: ") + e.what() + "\n"};
  } catch (const InputError& e) {
    return input_error(e.what());
  }
}

Outcome search_false(std::size_t max_size, const std::string& text, bool json) {
  Type target = Type::prop();
  try {
    target = parse_type(text);
  } catch (const Error& e) {
    return input_error(e.what());
  }
  if (!free_type_vars(target).empty()) return input_error("type must be closed: " + print_type(target));
  std::vector<Term> found = inhabitants(target, max_size);
  int code = found.empty() ? kOk : kFailure;
  if (json) {
    Json terms = Json::array();
    for (const auto& t : found) terms.push_back(print_term(t));
    return {code, dump(Json{{"type", print_type(target)}, {"max_size", max_size}, {"inhabitants", terms}}), ""};
  }
  std::ostringstream os;
  os << "type: " << print_type(target) << "\nmax size: " << max_size << "\ninhabitants: " << found.size() << '\n';
  for (const auto& t : found) os << "  " << print_term(t) << '\n';
  return {code, os.str(), ""};
}

Outcome run(const std::vector<std::string>& args) {
  CLI::App app{"Compose lexical λ-terms into many-sorted higher-order formulas", "glue"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Machine-readable output");

  std::string lexicon_path, trees_path, term_text, type_text;
  ComposeFlags compose_flags;
  bool eta_long = false;
  std::size_t max_size = 9;
  std::size_t limit = kDefaultAnalysisLimit;

  auto* lexicon_cmd = app.add_subcommand("lexicon", "Lexicon tools");
  lexicon_cmd->require_subcommand(1);
  auto* check_cmd = lexicon_cmd->add_subcommand("check", "Validate a lexicon and report every problem");
  check_cmd->add_option("path", lexicon_path, "Lexicon file")->required();

  auto* compose_cmd = app.add_subcommand("compose", "Compose parse trees against a lexicon");
  compose_cmd->add_option("lexicon", lexicon_path, "Lexicon file")->required();
  compose_cmd->add_option("trees", trees_path, "Parse tree file")->required();
  auto* limit_opt = compose_cmd->add_option("--limit", limit, "Maximum analyses per tree")->check(CLI::PositiveNumber);
  compose_cmd->add_flag("--show-term", compose_flags.show_term, "Print composed and normal terms");
  compose_cmd->add_flag("--show-formula", compose_flags.show_formula, "Print formulas (default)");
  compose_cmd->add_flag("--profile", compose_flags.profile, "Print order and sort count");

  auto* typecheck_cmd = app.add_subcommand("typecheck", "Print the type of a term");
  typecheck_cmd->add_option("lexicon", lexicon_path, "Lexicon file")->required();
  typecheck_cmd->add_option("term", term_text, "Term")->required();

  auto* normalize_cmd = app.add_subcommand("normalize", "Print the normal form of a term");
  normalize_cmd->add_option("lexicon", lexicon_path, "Lexicon file")->required();
  normalize_cmd->add_option("term", term_text, "Term")->required();
  normalize_cmd->add_flag("--eta-long", eta_long, "Also print the η-long form");

  auto* search_cmd = app.add_subcommand("search-false", "Enumerate closed constant-free inhabitants of a type");
  search_cmd->add_option("--max-size", max_size, "Largest term size")->check(CLI::Range(1, 12));
  search_cmd->add_option("type", type_text, "Closed type")->required();

  for (auto* sub : {check_cmd, compose_cmd, typecheck_cmd, normalize_cmd, search_cmd})
    sub->add_flag("--json", json, "Machine-readable output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    int code = app.exit(e, out, err);
    return {code == 0 ? kOk : kInputError, out.str(), err.str()};
  }

  if (*check_cmd) return lexicon_check(lexicon_path, json);
  if (*compose_cmd) {
    compose_flags.json = json;
    if (*limit_opt) compose_flags.limit = limit;
    return compose(lexicon_path, trees_path, compose_flags);
  }
  if (*typecheck_cmd) return typecheck(lexicon_path, term_text, json);
  if (*normalize_cmd) return normalize(lexicon_path, term_text, eta_long, json);
  return search_false(max_size, type_text, json);
}

}  // namespace glue::cli
