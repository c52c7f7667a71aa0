#include "subdiv/dynamics.hpp"

#include "subdiv/errors.hpp"
#include "subdiv/exact_linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <limits>

namespace subdiv {

namespace {

using LComplex = std::complex<long double>;

Vector<double> to_double_vector(const RationalVector& v) {
    Vector<double> out(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) out[i] = to_double(v[i]);
    return out;
}

Rational inf_norm(const RationalVector& v) {
    Rational m = 0;
    for (const auto& x : v) {
        const Rational ax = abs(x);
        if (ax > m) m = ax;
    }
    return m;
}

Rational squared_norm(const RationalVector& v) {
    Rational s = 0;
    for (const auto& x : v) s += x * x;
    return s;
}

RationalMatrix shifted(const RationalMatrix& m, const Rational& mu) {
    RationalMatrix out = m;
    for (Eigen::Index i = 0; i < m.rows(); ++i) out(i, i) -= mu;
    return out;
}

int sign_of(const Rational& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

// Distinct eigenvalues (clustered within tol) with their algebraic multiplicity.
struct Cluster {
    std::complex<double> value;
    int multiplicity = 0;
};

std::vector<Cluster> cluster(const Spectrum& spec, double tol) {
    std::vector<Cluster> out;
    for (const auto& mu : spec.eigenvalues) {
        auto it = std::find_if(out.begin(), out.end(),
                               [&](const Cluster& c) { return std::abs(c.value - mu) <= std::sqrt(tol); });
        if (it == out.end()) {
            out.push_back({mu, 1});
        } else {
            ++it->multiplicity;
        }
    }
    return out;
}

int numerical_nullity(const Matrix<long double>& m, std::complex<double> mu, double tol) {
    Matrix<LComplex> s = m.cast<LComplex>();
    s.diagonal().array() -= LComplex(mu.real(), mu.imag());
    Eigen::JacobiSVD<Matrix<LComplex>> svd(s);
    const long double scale = std::max<long double>(1.0L, m.norm());
    int nullity = 0;
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
        if (svd.singularValues()(i) <= tol * scale) ++nullity;
    }
    return nullity;
}

}  // namespace

std::string to_string(DynamicsStatus s) {
    return s == DynamicsStatus::Convergent ? "convergent" : "non-convergent";
}

RationalVector unit_vector(int n, int index) {
    if (index < 0 || index >= n) throw DomainError("unit_vector: index out of range");
    RationalVector e = RationalVector::Zero(n);
    e[index] = 1;
    return e;
}

TrajectoryReport iterate_local(const RationalVector& v0, const LocalMatrix& a, int steps,
                               const DynamicsOptions& options) {
    const int n = a.n();
    if (v0.size() != n) throw DomainError("iterate_local: initial vector has the wrong dimension");
    if (steps < 1) throw DomainError("iterate_local: K must be >= 1");

    TrajectoryReport r;
    r.matrix = a.entries;

    const SpectralClass sc = classify(eigenvalues(a.entries), options.tol);
    if (!sc.convergence_spectral_ok) {
        r.status = DynamicsStatus::NonConvergent;
        r.diagnostic = "spectrum is not convergent (need a simple eigenvalue 1 and all others inside the unit disk)";
    }

    // v_bar = r (w . v0) / (w . r) for right/left eigenvectors of eigenvalue 1.
    RationalVector fixed = RationalVector::Zero(n);
    const auto right = nullspace(shifted(a.entries, Rational(1)));
    const auto left = nullspace(shifted(a.entries.transpose(), Rational(1)));
    if (right.size() == 1 && left.size() == 1 && left[0].dot(right[0]) != 0) {
        fixed = right[0] * Rational(left[0].dot(v0) / left[0].dot(right[0]));
    } else {
        r.status = DynamicsStatus::NonConvergent;
        if (!r.diagnostic.empty()) r.diagnostic += "; ";
        r.diagnostic += "eigenvalue 1 is not simple, fixed point set to 0";
    }
    r.fixed_point = to_double_vector(fixed);

    std::vector<Rational> exact_dist;
    RationalVector v = v0;
    for (int k = 0; k <= steps; ++k) {
        if (k > 0) v = (a.entries * v).eval();
        RationalVector dev = v - fixed;
        r.states.push_back(to_double_vector(v));
        r.deviations.push_back(to_double_vector(dev));
        if (options.norm == DistanceNorm::Infinity) {
            exact_dist.push_back(inf_norm(dev));
            r.distances.push_back(to_double(exact_dist.back()));
        } else {
            exact_dist.push_back(squared_norm(dev));
            r.distances.push_back(std::sqrt(to_double(exact_dist.back())));
        }
        r.exact_deviations.push_back(std::move(dev));
    }
    for (std::size_t k = 0; k + 1 < exact_dist.size(); ++k) {
        if (exact_dist[k + 1] > exact_dist[k]) ++r.monotonicity_violations;
    }
    return r;
}

TrajectoryReport iterate_local(const Vector<double>& v0, const LocalMatrix& a, int steps,
                               const DynamicsOptions& options) {
    RationalVector exact(v0.size());
    for (Eigen::Index i = 0; i < v0.size(); ++i) exact[i] = from_double(v0[i]);
    return iterate_local(exact, a, steps, options);
}

TrajectoryReport decompose_modes(TrajectoryReport traj, const Spectrum& spec, double tol) {
    const Eigen::Index n = traj.matrix.rows();
    traj.modes.clear();
    traj.rotation.reset();
    traj.modes_available = false;
    if (static_cast<Eigen::Index>(spec.eigenvalues.size()) != n || n == 0) {
        throw DomainError("decompose_modes: spectrum does not belong to the trajectory's matrix");
    }

    const Matrix<long double> a = traj.matrix.unaryExpr([](const Rational& x) {
        return x.convert_to<long double>();
    });
    const std::vector<Cluster> clusters = cluster(spec, tol);

    for (const auto& c : clusters) {
        const int geometric = numerical_nullity(a, c.value, 1e-9);
        if (geometric < c.multiplicity) {
            const auto exact = std::abs(c.value.imag()) <= tol
                                   ? exact_eigenvalue_near(traj.matrix, c.value.real())
                                   : std::nullopt;
            // Exact check overrides the numerical rank when the eigenvalue is rational.
            if (!exact || static_cast<int>(nullspace(shifted(traj.matrix, *exact)).size()) < c.multiplicity) {
                if (!traj.diagnostic.empty()) traj.diagnostic += "; ";
                traj.diagnostic += "matrix is defective, mode decomposition skipped";
                return traj;
            }
        }
    }

    // Left eigenvectors in extended precision for non-rational eigenvalues.
    Eigen::EigenSolver<Matrix<long double>> left_solver(a.transpose(), /*computeEigenvectors=*/true);
    if (left_solver.info() != Eigen::Success) {
        throw NumericalFailure("decompose_modes: eigenvector computation did not converge");
    }
    auto left_vector = [&](std::complex<double> mu) {
        Eigen::Index best = 0;
        long double best_d = std::numeric_limits<long double>::infinity();
        for (Eigen::Index i = 0; i < left_solver.eigenvalues().size(); ++i) {
            const long double d = std::abs(left_solver.eigenvalues()[i] - LComplex(mu.real(), mu.imag()));
            if (d < best_d) {
                best_d = d;
                best = i;
            }
        }
        Vector<LComplex> u = left_solver.eigenvectors().col(best);
        return Vector<LComplex>(u / u.norm());
    };

    const std::size_t count = traj.exact_deviations.size();
    for (const auto& c : clusters) {
        if (std::abs(c.value - 1.0) <= tol) continue;
        if (c.value.imag() < -tol) continue;  // represented by its conjugate

        ModeTrace mode;
        mode.eigenvalue = c.value;
        mode.complex_pair = c.value.imag() > tol;

        std::optional<Rational> exact;
        if (!mode.complex_pair) exact = exact_eigenvalue_near(traj.matrix, c.value.real());

        if (exact) {
            mode.exact = true;
            mode.eigenvalue = to_double(*exact);
            const auto basis = nullspace(shifted(traj.matrix.transpose(), *exact));
            RationalVector u = basis.front();
            for (const auto& cand : basis) {
                if (cand.dot(traj.exact_deviations.front()) != 0) {
                    u = cand;
                    break;
                }
            }
            std::vector<Rational> coeff;
            for (const auto& d : traj.exact_deviations) coeff.push_back(u.dot(d));
            for (const auto& x : coeff) {
                mode.coefficients.push_back(to_double(x));
                mode.magnitudes.push_back(std::abs(to_double(x)));
            }
            for (std::size_t k = 0; k + 1 < count; ++k) {
                const int s0 = sign_of(coeff[k]);
                const int s1 = sign_of(coeff[k + 1]);
                if (s0 == 0 || s1 == 0) continue;
                ++mode.sign_steps;
                if (s0 != s1) ++mode.sign_flips;
            }
        } else {
            const Vector<LComplex> u = left_vector(c.value);
            for (std::size_t k = 0; k < count; ++k) {
                const auto& d = traj.exact_deviations[k];
                LComplex s = 0;
                for (Eigen::Index i = 0; i < n; ++i) s += u[i] * d[i].convert_to<long double>();
                if (mode.complex_pair) {
                    mode.magnitudes.push_back(static_cast<double>(std::abs(s)));
                } else {
                    // The real part carries the mode; the imaginary part is rounding.
                    mode.coefficients.push_back(static_cast<double>(s.real()));
                    mode.magnitudes.push_back(static_cast<double>(std::abs(s.real())));
                }
            }
            if (!mode.complex_pair) {
                for (std::size_t k = 0; k + 1 < count; ++k) {
                    const double d0 = traj.deviations[k].norm();
                    const double d1 = traj.deviations[k + 1].norm();
                    const double c0 = mode.coefficients[k];
                    const double c1 = mode.coefficients[k + 1];
                    if (std::abs(c0) <= 1e-10 * d0 || std::abs(c1) <= 1e-10 * d1) continue;
                    ++mode.sign_steps;
                    if ((c0 > 0) != (c1 > 0)) ++mode.sign_flips;
                }
            }
        }

        if (mode.complex_pair) {
            const Rotation rot{std::abs(mode.eigenvalue), std::abs(std::arg(mode.eigenvalue))};
            if (!traj.rotation || rot.rho > traj.rotation->rho) traj.rotation = rot;
        }
        traj.modes.push_back(std::move(mode));
    }
    traj.modes_available = true;
    return traj;
}

}  // namespace subdiv
