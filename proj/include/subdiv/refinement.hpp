#pragma once

// Binary refinement of finitely supported control sequences
//
//   P^{k+1}_{2i}   = sum_j a_{2j}   P^k_{i-j}
//   P^{k+1}_{2i+1} = sum_j a_{2j+1} P^k_{i-j}
//
// i.e. P^{k+1}_m = sum_l a_{m-2l} P^k_l over the zero-extended sequence.
// Templated on the scalar: Rational gives exact results, double is available
// for large experiments.

#include "subdiv/errors.hpp"
#include "subdiv/mask.hpp"

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

namespace subdiv {

enum class MeshKind { Primal, Dual };

std::string to_string(MeshKind mesh);

inline constexpr std::size_t kDefaultPointCap = 10'000'000;

/// Level-k control points P^k_i for i in [first_index, first_index + size),
/// zero elsewhere. Canonical polygons have nonzero end values; the zero
/// sequence is stored as a single 0 at index 0.
template <typename Scalar>
struct ControlPolygon {
    int level = 0;
    int first_index = 0;
    Vector<Scalar> values;
    MeshKind mesh = MeshKind::Primal;

    int last_index() const { return first_index + static_cast<int>(values.size()) - 1; }

    Scalar at(int i) const {
        const int k = i - first_index;
        if (k < 0 || k >= values.size()) return Scalar(0);
        return values[k];
    }
};

template <typename Scalar>
ControlPolygon<Scalar> canonicalize(ControlPolygon<Scalar> p) {
    Eigen::Index lo = 0;
    Eigen::Index hi = p.values.size();
    while (lo < hi && p.values[lo] == Scalar(0)) ++lo;
    while (hi > lo && p.values[hi - 1] == Scalar(0)) --hi;
    if (lo == hi) {
        p.first_index = 0;
        p.values = Vector<Scalar>::Zero(1);
        return p;
    }
    p.first_index += static_cast<int>(lo);
    p.values = p.values.segment(lo, hi - lo).eval();
    return p;
}

template <typename Scalar>
ControlPolygon<Scalar> make_polygon(int first_index, Vector<Scalar> values, int level = 0,
                                    MeshKind mesh = MeshKind::Primal) {
    if (values.size() == 0) values = Vector<Scalar>::Zero(1);
    return canonicalize(ControlPolygon<Scalar>{level, first_index, std::move(values), mesh});
}

/// Single 1 at `index`.
template <typename Scalar>
ControlPolygon<Scalar> delta_polygon(int index = 0, MeshKind mesh = MeshKind::Primal) {
    return make_polygon<Scalar>(index, Vector<Scalar>::Ones(1), 0, mesh);
}

template <typename Scalar>
ControlPolygon<Scalar> refine_once(const ControlPolygon<Scalar>& p, const Mask& mask) {
    ControlPolygon<Scalar> out;
    out.level = p.level + 1;
    out.mesh = p.mesh;
    if (mask.is_zero()) {
        out.values = Vector<Scalar>::Zero(1);
        return out;
    }
    const Vector<Scalar> a = mask.coeffs_as<Scalar>();
    const Eigen::Index n = p.values.size();
    const Eigen::Index w = a.size();
    out.first_index = 2 * p.first_index + mask.support_min();
    out.values = Vector<Scalar>::Zero(2 * (n - 1) + w);
    for (Eigen::Index l = 0; l < n; ++l) {
        if (p.values[l] == Scalar(0)) continue;
        out.values.segment(2 * l, w) += a * p.values[l];
    }
    return canonicalize(std::move(out));
}

/// k-fold refine_once. Throws ResourceLimitError when a level would hold more
/// than `point_cap` points.
template <typename Scalar>
ControlPolygon<Scalar> refine_k(ControlPolygon<Scalar> p, const Mask& mask, int k,
                                std::size_t point_cap = kDefaultPointCap) {
    if (k < 0) throw DomainError("refine_k: k must be >= 0");
    for (int step = 0; step < k; ++step) {
        const auto next = 2 * (static_cast<std::size_t>(p.values.size()) - 1) + static_cast<std::size_t>(mask.width());
        if (next > point_cap) {
            throw ResourceLimitError("refine_k: level " + std::to_string(p.level + 1) + " would hold " +
                                     std::to_string(next) + " points (cap " + std::to_string(point_cap) + ")");
        }
        p = refine_once(p, mask);
    }
    return p;
}

struct CurvePoint {
    double t = 0.0;
    double y = 0.0;
};

/// Samples with strictly increasing t.
struct SampledCurve {
    std::vector<CurvePoint> points;
};

/// Parameter of index i at level k: i 2^-k on the primal mesh, (i + 1/2) 2^-k on the dual mesh.
double mesh_parameter(int index, int level, MeshKind mesh);

/// Stored points of the polygon.
template <typename Scalar>
SampledCurve parameterize(const ControlPolygon<Scalar>& p) {
    SampledCurve c;
    c.points.reserve(static_cast<std::size_t>(p.values.size()));
    for (Eigen::Index k = 0; k < p.values.size(); ++k) {
        const int i = p.first_index + static_cast<int>(k);
        c.points.push_back({mesh_parameter(i, p.level, p.mesh), scalar_to_double(p.values[k])});
    }
    return c;
}

/// Every mesh point with t in [t_lo, t_hi], zeros included.
template <typename Scalar>
SampledCurve parameterize(const ControlPolygon<Scalar>& p, double t_lo, double t_hi) {
    const double scale = std::ldexp(1.0, p.level);
    const double offset = p.mesh == MeshKind::Dual ? 0.5 : 0.0;
    const int i_lo = static_cast<int>(std::ceil(t_lo * scale - offset));
    const int i_hi = static_cast<int>(std::floor(t_hi * scale - offset));
    SampledCurve c;
    for (int i = i_lo; i <= i_hi; ++i) c.points.push_back({mesh_parameter(i, p.level, p.mesh), scalar_to_double(p.at(i))});
    return c;
}

/// The delta test sequence {0,0,0,0,1,0,0,0,0} on the integers -4..4 (primal mesh).
template <typename Scalar>
ControlPolygon<Scalar> basis_polygon(const Mask& mask, int iters, std::size_t point_cap = kDefaultPointCap) {
    if (iters < 0) throw DomainError("basis_experiment: iters must be >= 0");
    Vector<Scalar> initial = Vector<Scalar>::Zero(9);
    initial[4] = Scalar(1);
    return refine_k(make_polygon<Scalar>(-4, std::move(initial)), mask, iters, point_cap);
}

inline constexpr double kBasisInterval = 4.0;

/// Refines the delta test sequence `iters` times and samples the level mesh on [-4, 4].
SampledCurve basis_experiment(const Mask& mask, int iters);

}  // namespace subdiv
