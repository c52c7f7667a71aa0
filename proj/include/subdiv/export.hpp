#pragma once

#include "subdiv/dynamics.hpp"
#include "subdiv/refinement.hpp"

#include <ostream>
#include <string>

namespace subdiv {

/// Number format shared by the CSV and SVG writers: 12 significant digits.
std::string format_number(double x);

/// "t,value" header, one row per point, LF line endings.
void write_curve_csv(std::ostream& out, const SampledCurve& curve);

/// Single-polyline SVG whose viewBox is the data bounding box (y axis flipped).
void write_curve_svg(std::ostream& out, const SampledCurve& curve);

/// Columns k, d_k, then |coefficient| of each decomposed mode, headed by its
/// eigenvalue ("mu=0.4+0.282842712475i" for a conjugate pair).
void write_trajectory_csv(std::ostream& out, const TrajectoryReport& traj);

}  // namespace subdiv
