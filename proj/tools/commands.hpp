#ifndef GLUE_TOOLS_COMMANDS_HPP
#define GLUE_TOOLS_COMMANDS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace glue::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kInputError = 2 };

struct Outcome {
  int exit_code = kOk;
  std::string out;
  std::string err;
};

struct ComposeFlags {
  std::optional<std::size_t> limit;
  bool show_term = false;
  bool show_formula = false;
  bool profile = false;
  bool json = false;
};

Outcome lexicon_check(const std::string& path, bool json);
Outcome compose(const std::string& lexicon_path, const std::string& trees_path, const ComposeFlags& flags);
Outcome typecheck(const std::string& lexicon_path, const std::string& term, bool json);
Outcome normalize(const std::string& lexicon_path, const std::string& term, bool eta_long, bool json);
Outcome search_false(std::size_t max_size, const std::string& type, bool json);

/// Parses argv and dispatches; used by main and by the CLI tests.
Outcome run(const std::vector<std::string>& args);

}  // namespace glue::cli

#endif  // GLUE_TOOLS_COMMANDS_HPP
