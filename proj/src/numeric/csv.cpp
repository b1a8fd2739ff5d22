#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <string>

#include "ltic/errors.hpp"
#include "ltic/numeric/csv.hpp"

namespace ltic {

void write_csv(std::ostream& out, const Trajectory& traj) {
  out << "t,y\n";
  char buf[96];
  for (std::size_t k = 0; k < traj.samples.size(); ++k) {
    std::snprintf(buf, sizeof buf, "%.12Lg,%.12Lg\n", traj.time(k), traj.samples[k]);
    out << buf;
  }
}

namespace {

[[noreturn]] void bad(std::size_t line, const std::string& why) {
  throw NumericError(NumericErrc::InvalidGrid, "csv line " + std::to_string(line) + ": " + why);
}

Real field(const std::string& text, std::size_t line) {
  char* end = nullptr;
  const Real v = std::strtold(text.c_str(), &end);
  if (text.empty() || *end != '\0' || !std::isfinite(v)) bad(line, "bad number '" + text + "'");
  return v;
}

}  // namespace

Trajectory read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "t,y") bad(1, "expected header 't,y'");
  std::vector<Real> times;
  Trajectory out;
  for (std::size_t n = 2; std::getline(in, line); ++n) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos) {
      bad(n, "expected two columns");
    }
    times.push_back(field(line.substr(0, comma), n));
    out.samples.push_back(field(line.substr(comma + 1), n));
  }
  if (times.empty()) return out;
  out.t0 = times.front();
  if (times.size() > 1) out.dt = (times.back() - times.front()) / static_cast<Real>(times.size() - 1);
  for (std::size_t k = 0; k < times.size(); ++k) {
    if (std::fabs(times[k] - out.time(k)) > 1e-9L * (1 + std::fabs(times[k]))) {
      bad(k + 2, "time column is not evenly spaced");
    }
  }
  return out;
}

}  // namespace ltic
