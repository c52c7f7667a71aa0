#include "subdiv/local_matrix.hpp"

#include "subdiv/errors.hpp"

namespace subdiv {

LocalMatrix build_local_matrix(const Mask& mask) {
    const int n = mask.width();
    if (n < 2) throw DomainError("build_local_matrix: mask width must be >= 2");

    const SymmetryInfo sym = classify_symmetry(mask);
    LocalMatrix lm;
    lm.column_offset = 1 - (mask.support_min() + sym.center_shift);

    // With 0-based i, j the entry a_{2j-i-c} sits at coefficient offset 2j - i
    // from the start of the support, independent of where the support begins.
    lm.entries = RationalMatrix::Zero(n, n);
    const auto& a = mask.coeffs();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const int k = 2 * j - i;
            if (k >= 0 && k < n) lm.entries(i, j) = a[k];
        }
    }
    return lm;
}

}  // namespace subdiv
