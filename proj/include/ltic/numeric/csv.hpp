#pragma once

#include <iosfwd>
#include <string>

#include "ltic/numeric/simulate.hpp"

namespace ltic {

/// Header `t,y`, one row per sample, 12 significant digits.
void write_csv(std::ostream& out, const Trajectory& traj);

/// Reads the format written by write_csv. Throws NumericError(InvalidGrid) on
/// a malformed header, row or time column.
Trajectory read_csv(std::istream& in);

}  // namespace ltic
