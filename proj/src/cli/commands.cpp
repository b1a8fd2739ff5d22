#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ltic/analyzer_json.hpp"
#include "ltic/calculus.hpp"
#include "ltic/cli.hpp"
#include "ltic/errors.hpp"
#include "ltic/numeric/closed_form.hpp"
#include "ltic/numeric/csv.hpp"
#include "ltic/numeric/properties.hpp"
#include "ltic/numeric/report_json.hpp"
#include "ltic/parser.hpp"

namespace ltic::cli {

namespace {

using json = nlohmann::json;

struct VerifyConfig {
  std::vector<std::string> signals;
  std::optional<double> alpha;
  std::optional<double> beta;
  std::string shift_signal = "step@1";
  double delta = 0.5;
  TestGrid grid;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

/// Prints an error, with a caret under the offending offset for parse errors.
int report_error(const std::exception& e, std::string_view source, std::ostream& err) {
  err << "error: " << e.what() << "\n";
  if (const auto* pe = dynamic_cast<const ParseError*>(&e); pe && !source.empty()) {
    err << "  " << source << "\n  " << std::string(pe->position(), ' ') << "^\n";
  }
  return kInputError;
}

json analysis_json(const SystemDef& sys, const LinearityReport& report) {
  std::optional<CanonicalForm> cf;
  if (report.verdict == Verdict::LTI) {
    try {
      cf = canonicalize(sys);
    } catch (const AnalysisError&) {
    }
  }
  json out = to_json(report, cf);
  out["system"] = format_system(sys);
  if (sys.has_feedback()) {
    try {
      out["unrolled"] = format_system(unroll_zero_order(sys));
    } catch (const AnalysisError&) {
    }
  }
  return out;
}

/// Superposition, shift and zero-in/zero-out under one configuration. Without
/// explicit signals, a non-LTI system whose witness uses constant inputs is
/// tested on that witness configuration.
std::vector<PropertyReport> run_checks(const SystemDef& sys, const LinearityReport& report,
                                       const ParameterBinding& binding, const VerifyConfig& cfg) {
  std::string x1 = "step@1";
  std::string x2 = "sine@1:f=1";
  Real alpha = 2;
  Real beta = -3;
  const auto& w = report.witness;
  if (cfg.signals.empty() && w && w->kind == Witness::Kind::Superposition &&
      w->x1.rfind("const:", 0) == 0) {
    x1 = w->x1;
    x2 = w->x2;
    alpha = static_cast<Real>(w->alpha);
    beta = static_cast<Real>(w->beta);
  }
  if (!cfg.signals.empty()) x1 = cfg.signals[0];
  if (cfg.signals.size() > 1) x2 = cfg.signals[1];
  if (cfg.alpha) alpha = *cfg.alpha;
  if (cfg.beta) beta = *cfg.beta;
  return {
      empirical_superposition_test(sys, binding, TestSignal::parse(x1), TestSignal::parse(x2),
                                   alpha, beta, cfg.grid),
      empirical_shift_test(sys, binding, TestSignal::parse(cfg.shift_signal), cfg.delta, cfg.grid),
      zero_in_zero_out_test(sys, binding, cfg.grid),
  };
}

ParameterBinding load_binding(const std::string& bind, const std::string& bind_file) {
  ParameterBinding b;
  if (!bind_file.empty()) b = ParameterBinding::parse_file_text(read_file(bind_file));
  b.merge(ParameterBinding::parse(bind));
  return b;
}

int cmd_check(const std::string& text, std::ostream& out, std::ostream& err) {
  try {
    const SystemDef sys = parse_system(text);
    const LinearityReport report = classify(sys);
    out << analysis_json(sys, report).dump(2) << "\n";
    return report.verdict == Verdict::LTI ? kOk : kNegative;
  } catch (const Error& e) {
    return report_error(e, text, err);
  }
}

int cmd_verify(const std::string& text, const ParameterBinding& binding, const VerifyConfig& cfg,
               std::ostream& out, std::ostream& err) {
  try {
    const SystemDef sys = parse_system(text);
    binding.require_known(sys.rhs());
    const LinearityReport report = classify(sys);
    json doc = analysis_json(sys, report);
    doc["numeric_checks"] = json::array();
    bool all = true;
    for (const auto& r : run_checks(sys, report, binding, cfg)) {
      doc["numeric_checks"].push_back(to_json(r));
      all = all && r.passed;
    }
    out << doc.dump(2) << "\n";
    return all ? kOk : kNegative;
  } catch (const Error& e) {
    return report_error(e, text, err);
  }
}

int cmd_simulate(const std::string& text, const ParameterBinding& binding, const std::string& signal,
                 const TestGrid& grid, const std::string& path, std::ostream& out, std::ostream& err) {
  try {
    const SystemDef sys = parse_system(text);
    binding.require_known(sys.rhs());
    const TestSignal x = TestSignal::parse(signal);
    const Trajectory y = SystemSimulator(sys, binding).run(sample(x, grid.t_end, grid.dt));
    std::ofstream file(path);
    if (!file) throw Error("cannot write '" + path + "'");
    write_csv(file, y);
    file.close();
    if (!file) throw Error("failed writing '" + path + "'");
    Real peak = 0;
    for (Real v : y.samples) peak = std::max(peak, std::fabs(v));
    const json summary = {{"system", format_system(sys)},
                          {"signal", x.name()},
                          {"dt", static_cast<double>(grid.dt)},
                          {"t_end", static_cast<double>(grid.t_end)},
                          {"samples", y.samples.size()},
                          {"final_value", static_cast<double>(y.samples.back())},
                          {"max_abs", static_cast<double>(peak)},
                          {"out", path}};
    out << summary.dump(2) << "\n";
    return kOk;
  } catch (const Error& e) {
    return report_error(e, text, err);
  }
}

int cmd_demo(double a, double b, double y0, double delta, const std::string& signal,
             const TestGrid& grid, double threshold, std::ostream& out, std::ostream& err) {
  try {
    const PropertyReport r = demonstrate_fixed_y0_shift_failure(a, b, y0, TestSignal::parse(signal),
                                                                delta, grid, threshold);
    json doc = to_json(r);
    doc["demonstrated"] = r.passed;
    out << doc.dump(2) << "\n";
    return r.passed ? kOk : kNegative;
  } catch (const Error& e) {
    return report_error(e, {}, err);
  }
}

struct CorpusRow {
  std::string verdict;
  std::string roundtrip;
  std::string equivalent;
  std::string numeric;
  bool ok = true;
};

CorpusRow run_entry(const CorpusEntry& e) {
  CorpusRow row;
  const SystemDef sys = parse_system(e.dsl_text);
  const SystemDef again = parse_system(format_system(sys));
  row.roundtrip = again.rhs() == sys.rhs() && format_system(again) == format_system(sys) ? "ok" : "FAIL";
  row.ok = row.roundtrip == "ok";

  const LinearityReport report = classify(sys);
  row.verdict = to_string(report.verdict);
  row.ok = row.ok && report.verdict == e.expected_verdict;

  row.equivalent = "-";
  if (e.expected_canonical) {
    bool same = false;
    try {
      same = check_equivalence(sys, parse_system(*e.expected_canonical));
    } catch (const AnalysisError&) {
    }
    row.equivalent = same ? "yes" : "NO";
    row.ok = row.ok && same;
  }

  // Numeric cross-check under a = -1, b = 2: LTI systems must pass every
  // property, other systems must violate at least one.
  ParameterBinding binding;
  for (const auto& name : parameters(sys.rhs())) {
    if (name == "a") binding.set(name, -1);
    if (name == "b") binding.set(name, 2);
  }
  try {
    bool all = true;
    for (const auto& r : run_checks(sys, report, binding, {})) all = all && r.passed;
    const bool expect_all = e.expected_verdict == Verdict::LTI;
    row.numeric = all ? "pass" : "violated";
    if (all != expect_all) {
      row.numeric += "!";
      row.ok = false;
    }
  } catch (const NumericError& err) {
    row.numeric = std::string("n/a (") + to_string(err.code()) + ")";
  }
  return row;
}

int cmd_corpus(const std::string& file, std::ostream& out, std::ostream& err) {
  std::vector<CorpusEntry> entries;
  try {
    entries = file.empty() ? builtin_corpus() : parse_corpus(read_file(file));
  } catch (const Error& e) {
    return report_error(e, {}, err);
  }
  std::size_t width = 6;
  for (const auto& e : entries) width = std::max(width, e.dsl_text.size());
  auto row_line = [&](const std::vector<std::string>& cols) {
    static const int widths[] = {3, 0, 28, 28, 5, 5, 22, 0};
    std::ostringstream line;
    for (std::size_t i = 0; i < cols.size(); ++i) {
      const int w = i == 1 ? static_cast<int>(width) : widths[i];
      line << std::left << std::setw(w) << cols[i] << (i + 1 < cols.size() ? "  " : "");
    }
    std::string s = line.str();
    s.erase(s.find_last_not_of(' ') + 1);
    out << s << "\n";
  };
  row_line({"id", "system", "expected", "verdict", "round", "equiv", "numeric", "result"});
  std::size_t matched = 0;
  for (const auto& e : entries) {
    CorpusRow row;
    try {
      row = run_entry(e);
    } catch (const Error& ex) {
      err << "entry " << e.id << ": ";
      return report_error(ex, e.dsl_text, err);
    }
    matched += row.ok ? 1 : 0;
    row_line({e.id, e.dsl_text, to_string(e.expected_verdict), row.verdict, row.roundtrip,
              row.equivalent, row.numeric, row.ok ? "ok" : "MISMATCH"});
  }
  out << matched << "/" << entries.size() << " entries match\n";
  return matched == entries.size() ? kOk : kNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decide whether a system definition is linear time-invariant", "ltic"};
  app.require_subcommand(1);

  std::string system;
  std::string bind;
  std::string bind_file;
  std::string signal = "step@1";
  std::string out_path;
  std::string corpus_file;
  VerifyConfig cfg;
  double t_end = 5;
  double dt = 1e-3;
  double tol = 1e-6;
  double a = -1, b = 2, y0 = 0, demo_delta = 1, threshold = 1e-3;
  std::string demo_signal = "step@0";

  auto* check = app.add_subcommand("check", "Classify a system and print the report as JSON");
  check->add_option("system", system, "System definition, e.g. \"y = a*x\"")->required();

  auto add_numeric = [&](CLI::App* sub) {
    sub->add_option("system", system, "System definition")->required();
    sub->add_option("--bind", bind, "Parameter values, e.g. a=-1,b=2");
    sub->add_option("--bind-file", bind_file, "File of name=value lines; --bind overrides it");
    sub->add_option("--dt", dt, "Step size")->capture_default_str();
    sub->add_option("--t-end", t_end, "Simulation horizon")->capture_default_str();
  };
  auto* verify = app.add_subcommand("verify", "Run the empirical superposition, shift and zero tests");
  add_numeric(verify);
  verify->add_option("--signal", cfg.signals, "Input signal for superposition (give twice)")
      ->expected(1)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  verify->add_option("--alpha", cfg.alpha, "Superposition weight of the first signal");
  verify->add_option("--beta", cfg.beta, "Superposition weight of the second signal");
  verify->add_option("--delta", cfg.delta, "Shift delay")->capture_default_str();
  verify->add_option("--shift-signal", cfg.shift_signal, "Input signal for the shift test")
      ->capture_default_str();
  verify->add_option("--tol", tol, "Tolerance")->capture_default_str();

  auto* simulate = app.add_subcommand("simulate", "Simulate a system and write a t,y CSV");
  add_numeric(simulate);
  simulate->add_option("--signal", signal, "Input signal")->capture_default_str();
  simulate->add_option("--out", out_path, "Output CSV path")->required();

  auto* corpus = app.add_subcommand("corpus", "Check the built-in corpus or a corpus file");
  corpus->add_option("--file", corpus_file, "Corpus file: system | verdict [| note [| equivalent]]");

  auto* demo = app.add_subcommand("demo-shift-failure",
                                  "Show that the first-order solution with a fixed initial condition is not shift invariant");
  demo->add_option("--a", a, "Coefficient of D[y,1]")->capture_default_str();
  demo->add_option("--b", b, "Coefficient of x")->capture_default_str();
  demo->add_option("--y0", y0, "Initial condition")->capture_default_str();
  demo->add_option("--delta", demo_delta, "Shift")->capture_default_str();
  demo->add_option("--signal", demo_signal, "Input signal")->capture_default_str();
  demo->add_option("--dt", dt, "Step size")->capture_default_str();
  demo->add_option("--t-end", t_end, "Horizon")->capture_default_str();
  demo->add_option("--threshold", threshold, "Smallest discrepancy that counts")->capture_default_str();

  std::vector<std::string> argv_store{"ltic"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  cfg.grid = {t_end, dt, tol};
  const TestGrid grid{t_end, dt, tol};
  ParameterBinding binding;
  if (verify->parsed() || simulate->parsed()) {
    try {
      binding = load_binding(bind, bind_file);
    } catch (const Error& e) {
      return report_error(e, {}, err);
    }
  }
  if (check->parsed()) return cmd_check(system, out, err);
  if (verify->parsed()) return cmd_verify(system, binding, cfg, out, err);
  if (simulate->parsed()) return cmd_simulate(system, binding, signal, grid, out_path, out, err);
  if (corpus->parsed()) return cmd_corpus(corpus_file, out, err);
  if (demo->parsed()) return cmd_demo(a, b, y0, demo_delta, demo_signal, grid, threshold, out, err);
  return kInputError;
}

}  // namespace ltic::cli
