#pragma once

#include "subdiv/rational.hpp"

#include <complex>
#include <vector>

namespace subdiv {

inline constexpr double kEigenTolerance = 1e-9;
inline constexpr double kClassifyTolerance = 1e-7;

/// Eigenvalue multiset, sorted by modulus (descending), then real part
/// (descending), then imaginary part (descending).
struct Spectrum {
    std::vector<std::complex<double>> eigenvalues;
    bool has_complex = false;
    int negative_real_count = 0;
    /// Largest modulus after the leading eigenvalue (0 for 1x1).
    double subdominant_modulus = 0.0;
    /// Largest relative residual sigma_min(A - mu I) / max(1, |A|_F) over all
    /// reported eigenvalues; 0 for closed-form spectra.
    double max_residual = 0.0;
};

/// Sorts the values and fills the classification flags with tolerance `tol`.
Spectrum make_spectrum(std::vector<std::complex<double>> values, double tol = kClassifyTolerance);

struct EigenOptions {
    /// Bound on the relative residual of every eigenvalue; larger residuals
    /// raise NumericalFailure.
    double residual_bound = 1e-8;
};

/// Dense nonsymmetric eigenvalues in extended precision.
///
/// Rows or columns whose off-diagonal entries vanish are deflated first
/// (their diagonal entry is an exact eigenvalue), the remaining block goes to
/// a Hessenberg/real Schur solve. Throws DomainError for non-square or
/// non-finite input and NumericalFailure when the QR iteration does not
/// converge or an eigenvalue exceeds the residual bound.
Spectrum eigenvalues(const Matrix<long double>& m, const EigenOptions& options = {});

template <typename Derived>
Spectrum eigenvalues(const Eigen::MatrixBase<Derived>& m, const EigenOptions& options = {}) {
    using Scalar = typename Derived::Scalar;
    Matrix<long double> ld(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if constexpr (std::is_same_v<Scalar, Rational>) {
                ld(i, j) = m(i, j).template convert_to<long double>();
            } else {
                ld(i, j) = static_cast<long double>(m(i, j));
            }
        }
    }
    return eigenvalues(ld, options);
}

struct SpectralClass {
    bool has_complex = false;
    int negative_real_count = 0;
    /// Exactly one eigenvalue within tol of 1, every other of modulus < 1 - tol.
    bool convergence_spectral_ok = false;
};

SpectralClass classify(const Spectrum& spec, double tol = kClassifyTolerance);

/// Largest distance in a greedy nearest matching of two eigenvalue multisets;
/// +infinity when the sizes differ.
double spectral_distance(const std::vector<std::complex<double>>& a,
                         const std::vector<std::complex<double>>& b);

/// Largest |Im mu|.
double max_imag(const Spectrum& spec);

}  // namespace subdiv
