#include <sstream>

#include "ltic/cli.hpp"
#include "ltic/errors.hpp"

namespace ltic::cli {

const std::vector<CorpusEntry>& builtin_corpus() {
  static const std::vector<CorpusEntry> corpus = {
      {"1", "y = a*x", Verdict::LTI, "scaling system", std::nullopt},
      {"2", "y = a*x + b", Verdict::NotLinear, "affine line", std::nullopt},
      {"3", "y = a*y + b*x", Verdict::LTI, "zero-order feedback", std::nullopt},
      {"4", "y = a*D[y,1] + b*x", Verdict::LTI, "first-order ODE", std::nullopt},
      {"5", "y = D[y,1] + x + a", Verdict::NotLinear, "feedback with offset", std::nullopt},
      {"6", "y = D[y,1] + I[y] + x", Verdict::LTI, "integral form and its ODE",
       "y = -D[y,2] + D[y,1] - D[x,1]"},
      {"7", "y = D[y,1] + I[x]", Verdict::LTI, "implicit form", "y = y + D[y,2] - D[y,1] + x"},
      {"8", "y = t*x", Verdict::NotTimeInvariant, "time-varying gain", std::nullopt},
      {"9", "y = sq(x)", Verdict::NotLinear, "squarer", std::nullopt},
  };
  return corpus;
}

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

}  // namespace

std::vector<CorpusEntry> parse_corpus(std::string_view text) {
  std::vector<CorpusEntry> out;
  std::istringstream in{std::string(text)};
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    const std::string body = trim(std::string_view(line).substr(0, line.find('#')));
    if (body.empty()) continue;
    std::vector<std::string> fields;
    std::string_view rest = body;
    while (true) {
      const auto bar = rest.find('|');
      fields.push_back(trim(rest.substr(0, bar)));
      if (bar == std::string_view::npos) break;
      rest.remove_prefix(bar + 1);
    }
    const auto verdict = fields.size() >= 2 ? verdict_from_string(fields[1]) : std::nullopt;
    if (fields.size() > 4 || fields[0].empty() || !verdict) {
      throw Error("corpus line " + std::to_string(line_no) +
                  ": expected 'system | verdict [| location [| equivalent system]]'");
    }
    CorpusEntry e;
    e.id = std::to_string(out.size() + 1);
    e.dsl_text = fields[0];
    e.expected_verdict = *verdict;
    if (fields.size() >= 3) e.note = fields[2];
    if (fields.size() == 4 && !fields[3].empty()) e.expected_canonical = fields[3];
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace ltic::cli
