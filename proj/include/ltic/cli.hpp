#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ltic/analyzer.hpp"

namespace ltic::cli {

enum ExitCode { kOk = 0, kInputError = 1, kNegative = 2 };

struct CorpusEntry {
  std::string id;
  std::string dsl_text;
  Verdict expected_verdict = Verdict::LTI;
  std::string note;
  /// A second representation that must canonicalize to the same form.
  std::optional<std::string> expected_canonical;
};

const std::vector<CorpusEntry>& builtin_corpus();

/// One entry per line: `dsl | verdict [| location [| equivalent-dsl]]`.
/// `#` starts a comment. Throws Error on a malformed line.
std::vector<CorpusEntry> parse_corpus(std::string_view text);

/// Runs the `ltic` command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ltic::cli
