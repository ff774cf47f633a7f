#include "glue/lexicon.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "glue/inductives.hpp"
#include "glue/kernel.hpp"
#include "glue/parse.hpp"

namespace glue {

const char* to_string(Rigidity rigidity) { return rigidity == Rigidity::Rigid ? "rigid" : "flexible"; }

const char* to_string(LexiconDiagnostic::Kind kind) {
  using K = LexiconDiagnostic::Kind;
  switch (kind) {
    case K::SyntaxError:
      return "SyntaxError";
    case K::UnknownSort:
      return "UnknownSort";
    case K::DuplicateDeclaration:
      return "DuplicateDeclaration";
    case K::IncoherentCoercions:
      return "IncoherentCoercions";
    case K::DuplicateWord:
      return "DuplicateWord";
    case K::DuplicateLabel:
      return "DuplicateLabel";
    case K::UnknownWord:
      return "UnknownWord";
    case K::TypeErrorInEntry:
      return "TypeErrorInEntry";
  }
  return "LexiconError";
}

std::string describe(const LexiconDiagnostic& d) {
  std::string out;
  if (d.line > 0) out += "line " + std::to_string(d.line) + ": ";
  out += to_string(d.kind);
  if (!d.word.empty()) out += "(" + d.word + ")";
  if (!d.message.empty()) out += ": " + d.message;
  return out;
}

const LexEntry& Lexicon::entry(const std::string& word) const {
  auto it = entries.find(word);
  if (it == entries.end()) throw UnknownWord(word);
  return it->second;
}

const std::vector<TransferTerm>& transfers_for(const Lexicon& lexicon, const std::string& word) {
  return lexicon.entry(word).transfers;
}

Lexicon with_rigidity(Lexicon lexicon, const std::string& word, const std::string& label, Rigidity rigidity) {
  auto it = lexicon.entries.find(word);
  if (it == lexicon.entries.end()) throw UnknownWord(word);
  for (auto& transfer : it->second.transfers) {
    if (transfer.label == label) {
      transfer.rigidity = rigidity;
      return lexicon;
    }
  }
  throw Error("word " + word + " has no transfer labelled " + label);
}

namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number;
  std::string text;
  std::vector<Token> tokens;

  // Everything from token `i` to the end of the line.
  std::string_view rest(std::size_t i) const {
    return std::string_view(text).substr(tokens[i].column - 1);
  }
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string line(text.substr(start, end - start));
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    Line l{number, line, {}};
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      if (i >= line.size()) break;
      std::size_t s = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      l.tokens.push_back({line.substr(s, i - s), s + 1});
    }
    if (!l.tokens.empty()) out.push_back(std::move(l));
    start = end + 1;
  }
  return out;
}

class Loader {
 public:
  LexiconCheck run(std::string_view text) {
    lines_ = split_lines(text);
    lex_.signature = builtin_signature();

    for (const auto& line : lines_) {
      const auto& head = line.tokens[0].text;
      if (head == "use" || head == "sort") declare_sort_or_pragma(line);
    }
    for (const auto& line : lines_) {
      const auto& head = line.tokens[0].text;
      if (head == "coercion") declare_coercion(line);
      else if (head == "const") declare_constant(line);
    }
    for (const auto& line : lines_) {
      const auto& head = line.tokens[0].text;
      if (head == "word") declare_word(line);
      else if (head != "use" && head != "sort" && head != "coercion" && head != "const" && head != "word-transfer")
        report(LexiconDiagnostic::Kind::SyntaxError, line.number, "", "unknown directive '" + head + "'");
    }
    for (const auto& line : lines_)
      if (line.tokens[0].text == "word-transfer") declare_transfer(line);

    std::stable_sort(diagnostics_.begin(), diagnostics_.end(),
                     [](const auto& a, const auto& b) { return a.line < b.line; });
    for (const auto& v : check_coherence(lex_.coercions).violations)
      diagnostics_.push_back({LexiconDiagnostic::Kind::IncoherentCoercions, 0, "", describe(v)});

    LexiconCheck out;
    out.diagnostics = std::move(diagnostics_);
    if (out.diagnostics.empty()) out.lexicon = std::move(lex_);
    return out;
  }

 private:
  void report(LexiconDiagnostic::Kind kind, std::size_t line, std::string word, std::string message) {
    diagnostics_.push_back({kind, line, std::move(word), std::move(message)});
  }

  void report_error(const Line& line, const std::string& word, const std::exception& e) {
    using K = LexiconDiagnostic::Kind;
    if (dynamic_cast<const SyntaxError*>(&e)) return report(K::SyntaxError, line.number, word, e.what());
    if (dynamic_cast<const UnknownSort*>(&e)) return report(K::UnknownSort, line.number, word, e.what());
    report(word.empty() ? K::SyntaxError : K::TypeErrorInEntry, line.number, word, e.what());
  }

  void declare_sort_or_pragma(const Line& line) {
    using K = LexiconDiagnostic::Kind;
    if (line.tokens.size() != 2) return report(K::SyntaxError, line.number, "", "expected one operand");
    const std::string& arg = line.tokens[1].text;
    try {
      if (line.tokens[0].text == "use") {
        if (arg == "nat") {
          lex_.signature = register_nat(std::move(lex_.signature));
          lex_.uses_nat = true;
          lex_.coercions.add_node(names::kNatSort);
        } else if (arg == "finset") {
          lex_.signature = register_finset(std::move(lex_.signature));
          lex_.uses_finset = true;
        } else {
          report(K::SyntaxError, line.number, "", "unknown extension '" + arg + "'");
        }
        return;
      }
      if (!arg.starts_with("e:") || arg.size() == 2)
        return report(K::SyntaxError, line.number, "", "expected e:NAME, got '" + arg + "'");
      std::string name = arg.substr(2);
      lex_.signature.add_sort(name);
      lex_.declared_sorts.push_back(name);
      lex_.coercions.add_node(name);
    } catch (const SortClash& e) {
      report(K::DuplicateDeclaration, line.number, "", e.what());
    }
  }

  void declare_coercion(const Line& line) {
    using K = LexiconDiagnostic::Kind;
    const auto& t = line.tokens;
    if (t.size() != 6 || t[2].text != ":" || t[4].text != "->")
      return report(K::SyntaxError, line.number, "", "expected: coercion NAME : e:A -> e:B");
    std::string sorts[2];
    for (int i = 0; i < 2; ++i) {
      const std::string& s = t[3 + 2 * i].text;
      if (!s.starts_with("e:") || s.size() == 2)
        return report(K::SyntaxError, line.number, "", "coercions relate entity sorts, got '" + s + "'");
      sorts[i] = s.substr(2);
      if (!lex_.signature.has_sort(sorts[i])) return report(K::UnknownSort, line.number, "", "unknown sort: " + sorts[i]);
    }
    BaseCoercion edge{t[1].text, sorts[0], sorts[1]};
    if (lex_.signature.has_constant(edge.name))
      return report(K::DuplicateDeclaration, line.number, "", "constant already declared: " + edge.name);
    try {
      lex_.coercions.add_edge(edge);
      lex_.signature.add_constant(edge.name, edge.type());
    } catch (const Error& e) {
      report(K::IncoherentCoercions, line.number, "", e.what());
    }
  }

  void declare_constant(const Line& line) {
    using K = LexiconDiagnostic::Kind;
    const auto& t = line.tokens;
    if (t.size() < 4 || t[2].text != ":") return report(K::SyntaxError, line.number, "", "expected: const NAME : TYPE");
    const std::string& name = t[1].text;
    if (lex_.signature.has_constant(name))
      return report(K::DuplicateDeclaration, line.number, "", "constant already declared: " + name);
    try {
      Type type = parse_type(read_sexpr(line.rest(3), line.number - 1, t[3].column - 1), &lex_.signature);
      lex_.signature.add_constant(name, type);
      lex_.declared_constants.push_back(name);
    } catch (const std::exception& e) {
      report_error(line, "", e);
    }
  }

  std::optional<std::pair<Term, Type>> entry_term(const Line& line, std::size_t token, const std::string& word) {
    try {
      Term term = parse_term(read_sexpr(line.rest(token), line.number - 1, line.tokens[token].column - 1),
                             lex_.signature);
      Type type = typecheck(term, lex_.signature);
      return std::make_pair(term, type);
    } catch (const std::exception& e) {
      report_error(line, word, e);
      return std::nullopt;
    }
  }

  void declare_word(const Line& line) {
    using K = LexiconDiagnostic::Kind;
    const auto& t = line.tokens;
    if (t.size() < 4 || t[2].text != "main")
      return report(K::SyntaxError, line.number, "", "expected: word SURFACE main TERM");
    const std::string& word = t[1].text;
    if (lex_.entries.contains(word) || failed_words_.contains(word))
      return report(K::DuplicateWord, line.number, word, "word declared twice");
    auto parsed = entry_term(line, 3, word);
    if (!parsed) {
      failed_words_.insert(word);
      return;
    }
    lex_.entries.emplace(word, LexEntry{word, parsed->first, parsed->second, {}});
    lex_.word_order.push_back(word);
  }

  void declare_transfer(const Line& line) {
    using K = LexiconDiagnostic::Kind;
    const auto& t = line.tokens;
    if (t.size() < 5 || (t[3].text != "rigid" && t[3].text != "flexible"))
      return report(K::SyntaxError, line.number, "", "expected: word-transfer SURFACE LABEL (rigid|flexible) TERM");
    const std::string& word = t[1].text;
    const std::string& label = t[2].text;
    if (failed_words_.contains(word)) return;
    auto it = lex_.entries.find(word);
    if (it == lex_.entries.end()) return report(K::UnknownWord, line.number, word, "transfer for undeclared word");
    auto& transfers = it->second.transfers;
    if (std::any_of(transfers.begin(), transfers.end(), [&](const auto& x) { return x.label == label; }))
      return report(K::DuplicateLabel, line.number, word, "transfer label " + label + " used twice");
    auto parsed = entry_term(line, 4, word);
    if (!parsed) return;
    Rigidity rigidity = t[3].text == "rigid" ? Rigidity::Rigid : Rigidity::Flexible;
    transfers.push_back(TransferTerm{label, parsed->first, parsed->second, rigidity});
  }

  std::vector<Line> lines_;
  Lexicon lex_;
  std::vector<LexiconDiagnostic> diagnostics_;
  std::set<std::string> failed_words_;
};

}  // namespace

LexiconCheck check_lexicon(std::string_view text) { return Loader{}.run(text); }

Lexicon load_lexicon(std::string_view text) {
  auto check = check_lexicon(text);
  if (!check.diagnostics.empty()) throw LexiconError(check.diagnostics.front());
  return std::move(*check.lexicon);
}

std::string save_lexicon(const Lexicon& lex) {
  std::ostringstream os;
  if (lex.uses_nat) os << "use nat\n";
  if (lex.uses_finset) os << "use finset\n";
  for (const auto& s : lex.declared_sorts) os << "sort e:" << s << '\n';
  for (const auto& e : lex.coercions.edges()) os << "coercion " << e.name << " : e:" << e.from << " -> e:" << e.to << '\n';
  for (const auto& c : lex.declared_constants) os << "const " << c << " : " << print_type(*lex.signature.lookup(c)) << '\n';
  for (const auto& w : lex.word_order) {
    const auto& entry = lex.entry(w);
    os << "word " << w << " main " << print_term(entry.main) << '\n';
    for (const auto& t : entry.transfers)
      os << "word-transfer " << w << ' ' << t.label << ' ' << to_string(t.rigidity) << ' ' << print_term(t.term) << '\n';
  }
  return os.str();
}

}  // namespace glue
