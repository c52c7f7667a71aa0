#pragma once

// Local dynamics v_{k+1} = A v_k of the control points nearest a mesh point.
//
// States are iterated exactly; the fixed point comes from the left and right
// eigenvectors of the eigenvalue 1, so it does not depend on K. Eigenmodes are
// followed through their left eigenvectors u (u^T A = mu u^T), which gives
// u^T(v_k - v_bar) = mu^k u^T(v_0 - v_bar) without a full diagonalisation.

#include "subdiv/local_matrix.hpp"
#include "subdiv/refinement.hpp"
#include "subdiv/spectrum.hpp"

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace subdiv {

enum class DistanceNorm { Infinity, Two };

enum class DynamicsStatus { Convergent, NonConvergent };

std::string to_string(DynamicsStatus s);

/// Coefficient sequence of one eigenvalue (real) or one conjugate pair.
struct ModeTrace {
    std::complex<double> eigenvalue;
    bool complex_pair = false;
    /// Left eigenvector found exactly (rational eigenvalue).
    bool exact = false;
    /// Real modes: signed coefficients. Complex pairs: empty.
    std::vector<double> coefficients;
    /// |coefficient| per state.
    std::vector<double> magnitudes;
    /// Real modes: sign changes between consecutive states, counted over
    /// `sign_steps` pairs whose coefficients are both resolvably nonzero.
    int sign_flips = 0;
    int sign_steps = 0;
};

/// Rotation-scaling of the dominant complex pair: contraction rho = |mu| and angle theta = |arg mu|.
struct Rotation {
    double rho = 0.0;
    double theta = 0.0;
};

struct TrajectoryReport {
    std::vector<Vector<double>> states;
    Vector<double> fixed_point;
    /// v_k - v_bar, formed exactly before conversion.
    std::vector<Vector<double>> deviations;
    /// |v_k - v_bar| in the selected norm.
    std::vector<double> distances;
    /// Number of k with distances[k+1] > distances[k] (compared exactly).
    int monotonicity_violations = 0;
    DynamicsStatus status = DynamicsStatus::Convergent;
    std::string diagnostic;

    // Filled by decompose_modes.
    std::vector<ModeTrace> modes;
    std::optional<Rotation> rotation;
    bool modes_available = false;

    // Exact data kept for the decomposition.
    RationalMatrix matrix;
    std::vector<RationalVector> exact_deviations;
};

struct DynamicsOptions {
    DistanceNorm norm = DistanceNorm::Infinity;
    double tol = kClassifyTolerance;
};

/// The n stored-or-zero values nearest center_index; for even n the tie goes
/// to the lower index, i.e. [center - n/2, center + n/2 - 1].
template <typename Scalar>
Vector<Scalar> window_vector(const ControlPolygon<Scalar>& p, int center_index, int n) {
    if (n < 1) throw DomainError("window_vector: n must be >= 1");
    const int first = center_index - n / 2;
    Vector<Scalar> v(n);
    for (int k = 0; k < n; ++k) v[k] = p.at(first + k);
    return v;
}

/// Iterates K steps from v0. A non-convergent spectrum is reported in
/// `status`; the trajectory is returned regardless.
TrajectoryReport iterate_local(const RationalVector& v0, const LocalMatrix& a, int steps,
                               const DynamicsOptions& options = {});
TrajectoryReport iterate_local(const Vector<double>& v0, const LocalMatrix& a, int steps,
                               const DynamicsOptions& options = {});

/// Unit vector e_index (0-based).
RationalVector unit_vector(int n, int index);

/// Projects the deviations onto left eigenvectors of every eigenvalue other
/// than 1. Skipped, with a diagnostic, when the matrix is defective.
TrajectoryReport decompose_modes(TrajectoryReport traj, const Spectrum& spec,
                                 double tol = kClassifyTolerance);

}  // namespace subdiv
