#ifndef GLUE_LEXICON_HPP
#define GLUE_LEXICON_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "glue/coercion.hpp"
#include "glue/error.hpp"
#include "glue/signature.hpp"
#include "glue/term.hpp"
#include "glue/type.hpp"

namespace glue {

enum class Rigidity { Flexible, Rigid };

const char* to_string(Rigidity rigidity);

/// An optional meaning transfer attached to a word, e.g. book's g0 : book → phys.
struct TransferTerm {
  std::string label;
  Term term;
  Type type;
  Rigidity rigidity = Rigidity::Flexible;
};

struct LexEntry {
  std::string word;
  Term main;
  Type main_type;
  std::vector<TransferTerm> transfers;  // file order
};

/// A loaded, validated lexicon. Every term typechecks in the empty context and
/// the coercion graph is coherent.
struct Lexicon {
  Signature signature;
  CoercionGraph coercions;
  std::map<std::string, LexEntry> entries;

  // What the document declared, kept for save_lexicon.
  bool uses_nat = false;
  bool uses_finset = false;
  std::vector<std::string> declared_sorts;
  std::vector<std::string> declared_constants;
  std::vector<std::string> word_order;

  /// Throws UnknownWord.
  const LexEntry& entry(const std::string& word) const;
};

struct LexiconDiagnostic {
  enum class Kind {
    SyntaxError,
    UnknownSort,
    DuplicateDeclaration,
    IncoherentCoercions,
    DuplicateWord,
    DuplicateLabel,
    UnknownWord,
    TypeErrorInEntry,
  };
  Kind kind = Kind::SyntaxError;
  std::size_t line = 0;  // 0 when the problem is global (coherence)
  std::string word;
  std::string message;
};

const char* to_string(LexiconDiagnostic::Kind kind);
std::string describe(const LexiconDiagnostic& diagnostic);

class LexiconError : public Error {
 public:
  explicit LexiconError(LexiconDiagnostic diagnostic)
      : Error(describe(diagnostic)), diagnostic_(std::move(diagnostic)) {}
  const LexiconDiagnostic& diagnostic() const { return diagnostic_; }

 private:
  LexiconDiagnostic diagnostic_;
};

struct LexiconCheck {
  std::optional<Lexicon> lexicon;  // present iff diagnostics is empty
  std::vector<LexiconDiagnostic> diagnostics;
};

/// Validates the whole document and reports every failure, in line order
/// (coherence problems last).
LexiconCheck check_lexicon(std::string_view text);

/// Throws LexiconError carrying the first diagnostic.
Lexicon load_lexicon(std::string_view text);

std::string save_lexicon(const Lexicon& lexicon);

/// Declared transfers of `word` in file order; throws UnknownWord.
const std::vector<TransferTerm>& transfers_for(const Lexicon& lexicon, const std::string& word);

/// Copy of `lexicon` with one transfer's rigidity replaced; throws UnknownWord or Error.
Lexicon with_rigidity(Lexicon lexicon, const std::string& word, const std::string& label, Rigidity rigidity);

}  // namespace glue

#endif  // GLUE_LEXICON_HPP
