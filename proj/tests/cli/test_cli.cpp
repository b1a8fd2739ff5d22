#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"

#include "ltic/cli.hpp"
#include "ltic/errors.hpp"
#include "ltic/numeric/csv.hpp"

using namespace ltic;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const char* name) { return std::string(LTIC_FIXTURE_DIR) + "/" + name; }

std::filesystem::path temp_path(const char* name) {
  return std::filesystem::temp_directory_path() / (std::string("ltic_test_") + name);
}

}  // namespace

TEST_CASE("exit codes") {
  struct Row {
    std::vector<std::string> args;
    int code;
  };
  const Row table[] = {
      {{"check", "y = a*D[y,1] + b*x"}, 0},
      {{"check", "y = a*x + b"}, 2},
      {{"check", "y = t*x"}, 2},
      {{"check", "y ="}, 1},
      {{"check", "y = y + x"}, 0},
      {{"verify", "y = a*D[y,1] + b*x", "--bind", "a=-1,b=2"}, 0},
      {{"verify", "y = a*x + b", "--bind", "a=1,b=1"}, 2},
      {{"verify", "y = a*x", "--bind", "a=1,c=1"}, 1},
      {{"verify", "y = a*x"}, 1},
      {{"verify", "y = a*x", "--bind", "a"}, 1},
      {{"verify", "y = D[x,1]"}, 1},
      {{"verify", "y = a*x", "--bind", "a=2", "--shift-signal", "step@0.1"}, 1},
      {{"verify", "y = a*x", "--bind", "a=2", "--signal", "pulse"}, 1},
      {{"verify", "y = t*x"}, 2},
      {{"corpus"}, 0},
      {{"corpus", "--file", fixture("corrupted.corpus")}, 2},
      {{"corpus", "--file", fixture("bad_equivalent.corpus")}, 2},
      {{"corpus", "--file", fixture("empty.corpus")}, 0},
      {{"corpus", "--file", fixture("pair.corpus")}, 0},
      {{"corpus", "--file", fixture("malformed.corpus")}, 1},
      {{"corpus", "--file", fixture("missing.corpus")}, 1},
      {{"demo-shift-failure"}, 0},
      {{"demo-shift-failure", "--signal", "zero"}, 2},
      {{"demo-shift-failure", "--a", "0"}, 1},
      {{"demo-shift-failure", "--signal", "zero", "--y0", "1"}, 0},
      {{}, 1},
      {{"frobnicate"}, 1},
      {{"check"}, 1},
      {{"--help"}, 0},
  };
  for (const auto& row : table) {
    std::string joined;
    for (const auto& a : row.args) joined += a + " ";
    CAPTURE(joined);
    CHECK(run(row.args).code == row.code);
  }
}

TEST_CASE("check output") {
  const auto r = run({"check", "y = a*x + b"});
  CHECK(r.out.find("\"lhs\": \"7*a + b\"") != std::string::npos);
  CHECK(r.out.find("\"rhs\": \"7*a + 2*b\"") != std::string::npos);
  CHECK(r.err.empty());

  const auto fb = run({"check", "y = a*y + b*x"});
  CHECK(fb.out.find("\"unrolled\": \"y = (b/(1-a))*x\"") != std::string::npos);

  const auto bad = run({"check", "y = a*x +"});
  CHECK(bad.out.empty());
  CHECK(bad.err.find("offset 9") != std::string::npos);
  CHECK(bad.err.find("         ^") != std::string::npos);
}

TEST_CASE("verify uses the witness configuration for affine systems") {
  const auto r = run({"verify", "y = a*x + b", "--bind", "a=1,b=1"});
  CHECK(r.out.find("\"x1\": \"const:c=3\"") != std::string::npos);
  CHECK(r.out.find("\"max_abs_error\": 1.0,") != std::string::npos);
}

TEST_CASE("binding file with --bind override") {
  const auto r = run({"verify", "y = a*D[y,1] + b*x", "--bind-file", fixture("binding.txt"), "--bind", "b=2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"binding\": \"a=-1,b=2\"") != std::string::npos);
  CHECK(run({"verify", "y = a*x", "--bind-file", fixture("nope.txt")}).code == 1);
}

TEST_CASE("corpus output is deterministic") {
  const auto first = run({"corpus"});
  const auto second = run({"corpus"});
  CHECK(first.code == 0);
  CHECK(first.out == second.out);
  CHECK(first.out.find("9/9 entries match") != std::string::npos);

  const auto empty = run({"corpus", "--file", fixture("empty.corpus")});
  CHECK(empty.out.find("0/0 entries match") != std::string::npos);

  const auto corrupted = run({"corpus", "--file", fixture("corrupted.corpus")});
  CHECK(corrupted.out.find("MISMATCH") != std::string::npos);
  CHECK(corrupted.out.find("1/2 entries match") != std::string::npos);
}

TEST_CASE("corpus file format") {
  const auto entries = cli::parse_corpus(
      "# header\n\ny = a*x | LTI\ny = t*x|NotTimeInvariant|gain # trailing\n"
      "y = D[y,1] + I[x] | LTI | implicit | y = y + D[y,2] - D[y,1] + x\n");
  REQUIRE(entries.size() == 3);
  CHECK(entries[0].id == "1");
  CHECK(entries[1].dsl_text == "y = t*x");
  CHECK(entries[1].note == "gain");
  CHECK(entries[1].expected_verdict == Verdict::NotTimeInvariant);
  CHECK(entries[2].expected_canonical == "y = y + D[y,2] - D[y,1] + x");
  CHECK_THROWS_AS(cli::parse_corpus("y = x"), Error);
  CHECK_THROWS_AS(cli::parse_corpus("y = x | LTI | a | b | c"), Error);
  CHECK(cli::builtin_corpus().size() == 9);
}

TEST_CASE("simulate writes a CSV that round-trips") {
  const auto path = temp_path("step.csv");
  const auto r = run({"simulate", "y = a*D[y,1] + b*x", "--bind", "a=-1,b=2", "--signal", "step@0",
                      "--t-end", "10", "--out", path.string()});
  REQUIRE(r.code == 0);
  std::ifstream in(path);
  const auto traj = read_csv(in);
  REQUIRE(traj.samples.size() == 10001);
  CHECK(traj.dt == doctest::Approx(1e-3));
  CHECK(std::fabs(traj.samples.back() - 2) < 1e-3L);
  CHECK(r.out.find("\"samples\": 10001") != std::string::npos);
  std::filesystem::remove(path);

  const auto zpath = temp_path("zero.csv");
  REQUIRE(run({"simulate", "y = a*D[y,1] + b*x", "--bind", "a=-1,b=2", "--signal", "zero", "--out",
               zpath.string()})
              .code == 0);
  std::ifstream zin(zpath);
  for (Real v : read_csv(zin).samples) REQUIRE(v == 0);
  std::filesystem::remove(zpath);

  const auto ipath = temp_path("implicit.csv");
  CHECK(run({"simulate", "y = D[y,1] + I[x]", "--out", ipath.string()}).code == 0);
  std::filesystem::remove(ipath);

  CHECK(run({"simulate", "y = x", "--out", "/nonexistent-dir/out.csv"}).code == 1);
  CHECK(run({"simulate", "y = D[x,1]", "--out", temp_path("improper.csv").string()}).code == 1);
}
