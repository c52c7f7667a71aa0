#include "subdiv/spectrum.hpp"

#include "subdiv/errors.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <limits>

namespace subdiv {

namespace {

using LComplex = std::complex<long double>;

// Sort key with the modulus quantised so that conjugates and rounding-level
// differences fall back to the real/imaginary tie-breaks.
bool spectrum_order(const std::complex<double>& x, const std::complex<double>& y) {
    const auto qx = std::llround(std::abs(x) * 1e9);
    const auto qy = std::llround(std::abs(y) * 1e9);
    if (qx != qy) return qx > qy;
    if (x.real() != y.real()) return x.real() > y.real();
    return x.imag() > y.imag();
}

// Indices of rows/columns that can be split off by symmetric permutation,
// together with their (exact) diagonal eigenvalues.
std::vector<Eigen::Index> isolate(const Matrix<long double>& m, std::vector<LComplex>& out) {
    std::vector<Eigen::Index> active(static_cast<std::size_t>(m.rows()));
    for (Eigen::Index i = 0; i < m.rows(); ++i) active[static_cast<std::size_t>(i)] = i;

    bool changed = true;
    while (changed && active.size() > 1) {
        changed = false;
        for (std::size_t k = 0; k < active.size(); ++k) {
            const Eigen::Index p = active[k];
            bool row_clear = true;
            bool col_clear = true;
            for (Eigen::Index q : active) {
                if (q == p) continue;
                if (m(p, q) != 0) row_clear = false;
                if (m(q, p) != 0) col_clear = false;
            }
            if (row_clear || col_clear) {
                out.emplace_back(m(p, p), 0.0L);
                active.erase(active.begin() + static_cast<long>(k));
                changed = true;
                break;
            }
        }
    }
    return active;
}

}  // namespace

Spectrum make_spectrum(std::vector<std::complex<double>> values, double tol) {
    Spectrum s;
    std::sort(values.begin(), values.end(), spectrum_order);
    s.eigenvalues = std::move(values);
    const SpectralClass c = classify(s, tol);
    s.has_complex = c.has_complex;
    s.negative_real_count = c.negative_real_count;
    s.subdominant_modulus = s.eigenvalues.size() > 1 ? std::abs(s.eigenvalues[1]) : 0.0;
    return s;
}

Spectrum eigenvalues(const Matrix<long double>& m, const EigenOptions& options) {
    if (m.rows() != m.cols()) throw DomainError("eigenvalues: matrix must be square");
    if (!m.allFinite()) throw DomainError("eigenvalues: matrix has non-finite entries");
    const Eigen::Index n = m.rows();
    if (n == 0) return {};

    std::vector<LComplex> values;
    const std::vector<Eigen::Index> active = isolate(m, values);
    if (active.size() == 1) {
        values.emplace_back(m(active[0], active[0]), 0.0L);
    } else if (!active.empty()) {
        const auto k = static_cast<Eigen::Index>(active.size());
        Matrix<long double> block(k, k);
        for (Eigen::Index i = 0; i < k; ++i) {
            for (Eigen::Index j = 0; j < k; ++j) block(i, j) = m(active[i], active[j]);
        }
        Eigen::EigenSolver<Matrix<long double>> solver(block, /*computeEigenvectors=*/false);
        if (solver.info() != Eigen::Success) {
            throw NumericalFailure("eigenvalues: real Schur iteration did not converge");
        }
        for (Eigen::Index i = 0; i < k; ++i) values.push_back(solver.eigenvalues()[i]);
    }

    // Residual check: sigma_min(A - mu I) relative to max(1, |A|_F).
    const long double scale = std::max<long double>(1.0L, m.norm());
    const Matrix<LComplex> mc = m.cast<LComplex>();
    double worst = 0.0;
    for (const auto& mu : values) {
        Matrix<LComplex> shifted = mc;
        shifted.diagonal().array() -= mu;
        Eigen::JacobiSVD<Matrix<LComplex>> svd(shifted);
        const long double sigma = svd.singularValues()(n - 1);
        worst = std::max(worst, static_cast<double>(sigma / scale));
    }
    if (!(worst <= options.residual_bound)) {
        throw NumericalFailure("eigenvalues: residual " + std::to_string(worst) + " exceeds bound " +
                               std::to_string(options.residual_bound));
    }

    std::vector<std::complex<double>> out;
    out.reserve(values.size());
    for (const auto& v : values) {
        out.emplace_back(static_cast<double>(v.real()), static_cast<double>(v.imag()));
    }
    Spectrum s = make_spectrum(std::move(out));
    s.max_residual = worst;
    return s;
}

SpectralClass classify(const Spectrum& spec, double tol) {
    if (!(tol > 0)) throw DomainError("classify: tolerance must be positive");
    SpectralClass c;
    int near_one = 0;
    bool others_inside = true;
    for (const auto& mu : spec.eigenvalues) {
        if (std::abs(mu.imag()) > tol) c.has_complex = true;
        if (mu.real() < -tol) ++c.negative_real_count;
        if (std::abs(mu - 1.0) <= tol) {
            ++near_one;
        } else if (!(std::abs(mu) < 1.0 - tol)) {
            others_inside = false;
        }
    }
    c.convergence_spectral_ok = near_one == 1 && others_inside;
    return c;
}

double spectral_distance(const std::vector<std::complex<double>>& a,
                         const std::vector<std::complex<double>>& b) {
    if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
    std::vector<bool> used(b.size(), false);
    double worst = 0.0;
    for (const auto& x : a) {
        std::size_t best = b.size();
        double best_d = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (used[j]) continue;
            const double d = std::abs(x - b[j]);
            if (d < best_d) {
                best_d = d;
                best = j;
            }
        }
        used[best] = true;
        worst = std::max(worst, best_d);
    }
    return worst;
}

double max_imag(const Spectrum& spec) {
    double m = 0.0;
    for (const auto& mu : spec.eigenvalues) m = std::max(m, std::abs(mu.imag()));
    return m;
}

}  // namespace subdiv
