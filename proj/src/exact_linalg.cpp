#include "subdiv/exact_linalg.hpp"

#include <cmath>

namespace subdiv {

namespace {

// In-place RREF; returns pivot column of each pivot row.
std::vector<Eigen::Index> rref(RationalMatrix& m) {
    std::vector<Eigen::Index> pivots;
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
        Eigen::Index p = row;
        while (p < m.rows() && m(p, col) == 0) ++p;
        if (p == m.rows()) continue;
        m.row(p).swap(m.row(row));
        const Rational inv = 1 / m(row, col);
        m.row(row) *= inv;
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col) == 0) continue;
            const Rational f = m(r, col);
            m.row(r) -= f * m.row(row);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::vector<RationalVector> nullspace(const RationalMatrix& m) {
    RationalMatrix r = m;
    const std::vector<Eigen::Index> pivots = rref(r);
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
    for (auto c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;

    std::vector<RationalVector> basis;
    for (Eigen::Index free = 0; free < m.cols(); ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        RationalVector v = RationalVector::Zero(m.cols());
        v[free] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r(static_cast<Eigen::Index>(k), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

int rank(const RationalMatrix& m) {
    RationalMatrix r = m;
    return static_cast<int>(rref(r).size());
}

std::optional<Rational> rationalize(double x, long max_denominator, double tol) {
    if (!std::isfinite(x)) return std::nullopt;
    // Convergents h/k of the continued fraction of x.
    long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
    double rest = x;
    for (int iter = 0; iter < 64; ++iter) {
        const double a = std::floor(rest);
        if (std::abs(a) > 1e15) break;
        const long ai = static_cast<long>(a);
        const long h2 = ai * h1 + h0;
        const long k2 = ai * k1 + k0;
        if (k2 > max_denominator) break;
        h0 = h1;
        h1 = h2;
        k0 = k1;
        k1 = k2;
        if (std::abs(x - static_cast<double>(h1) / static_cast<double>(k1)) <= tol) {
            return Rational(h1, k1);
        }
        const double frac = rest - a;
        if (frac == 0.0) break;
        rest = 1.0 / frac;
    }
    return std::nullopt;
}

std::optional<Rational> exact_eigenvalue_near(const RationalMatrix& m, double approx) {
    const auto r = rationalize(approx);
    if (!r) return std::nullopt;
    RationalMatrix shifted = m;
    for (Eigen::Index i = 0; i < m.rows(); ++i) shifted(i, i) -= *r;
    if (rank(shifted) < m.rows()) return r;
    return std::nullopt;
}

}  // namespace subdiv
