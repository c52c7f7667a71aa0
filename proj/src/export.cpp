#include "subdiv/export.hpp"

#include <algorithm>
#include <cstdio>

namespace subdiv {

std::string format_number(double x) {
    if (x == 0.0) x = 0.0;  // no "-0"
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

void write_curve_csv(std::ostream& out, const SampledCurve& curve) {
    out << "t,value\n";
    for (const auto& p : curve.points) out << format_number(p.t) << ',' << format_number(p.y) << '\n';
}

void write_curve_svg(std::ostream& out, const SampledCurve& curve) {
    double t_min = 0.0, t_max = 1.0, y_min = 0.0, y_max = 1.0;
    if (!curve.points.empty()) {
        t_min = t_max = curve.points.front().t;
        y_min = y_max = curve.points.front().y;
        for (const auto& p : curve.points) {
            t_min = std::min(t_min, p.t);
            t_max = std::max(t_max, p.t);
            y_min = std::min(y_min, p.y);
            y_max = std::max(y_max, p.y);
        }
    }
    // Degenerate extents still need a positive viewBox.
    const double width = t_max > t_min ? t_max - t_min : 1.0;
    const double height = y_max > y_min ? y_max - y_min : 1.0;

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << format_number(t_min) << ' '
        << format_number(-y_max) << ' ' << format_number(width) << ' ' << format_number(height) << "\">\n";
    out << "<polyline fill=\"none\" stroke=\"black\" vector-effect=\"non-scaling-stroke\" points=\"";
    bool first = true;
    for (const auto& p : curve.points) {
        if (!first) out << ' ';
        first = false;
        out << format_number(p.t) << ',' << format_number(-p.y);
    }
    out << "\"/>\n</svg>\n";
}

void write_trajectory_csv(std::ostream& out, const TrajectoryReport& traj) {
    out << "k,d_k";
    for (const auto& m : traj.modes) {
        out << ",mu=" << format_number(m.eigenvalue.real());
        if (m.complex_pair) out << '+' << format_number(m.eigenvalue.imag()) << 'i';
    }
    out << '\n';
    for (std::size_t k = 0; k < traj.distances.size(); ++k) {
        out << k << ',' << format_number(traj.distances[k]);
        for (const auto& m : traj.modes) out << ',' << format_number(m.magnitudes[k]);
        out << '\n';
    }
}

}  // namespace subdiv
