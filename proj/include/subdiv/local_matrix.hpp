#pragma once

#include "subdiv/mask.hpp"

namespace subdiv {

/// n x n local subdivision matrix of a width-n mask:
///
///   A(i, j) = a_{2j - i - c}   (1-based i, j; a = 0 outside the support)
///
/// with c = p + 1 and p = -support_min of the centred mask. Odd rows carry
/// one parity class of the mask and even rows the other, so each row is a
/// complete refinement rule.
struct LocalMatrix {
    RationalMatrix entries;
    int column_offset = 0;

    int n() const noexcept { return static_cast<int>(entries.rows()); }

    template <typename Scalar>
    Matrix<Scalar> as() const {
        Matrix<Scalar> out(entries.rows(), entries.cols());
        for (Eigen::Index i = 0; i < entries.rows(); ++i) {
            for (Eigen::Index j = 0; j < entries.cols(); ++j) out(i, j) = scalar_cast<Scalar>(entries(i, j));
        }
        return out;
    }
};

/// Throws DomainError for width < 2.
LocalMatrix build_local_matrix(const Mask& mask);

/// Dense matrix of a mask in any scalar type; equal to build_local_matrix(mask).as<Scalar>().
template <typename Scalar>
Matrix<Scalar> local_matrix(const Mask& mask) {
    return build_local_matrix(mask).as<Scalar>();
}

}  // namespace subdiv
