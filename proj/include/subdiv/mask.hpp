#pragma once

#include "subdiv/laurent.hpp"
#include "subdiv/rational.hpp"

#include <initializer_list>
#include <string>

namespace subdiv {

/// Subdivision mask a_i for i in [support_min, support_min + width).
///
/// The support is the declared index range. End coefficients may be zero so
/// that parametric families (e.g. the width-5 family at a = 0) keep their
/// nominal width. A mask without coefficients is the zero mask.
class Mask {
public:
    Mask() = default;
    Mask(int support_min, RationalVector coeffs);
    Mask(int support_min, std::initializer_list<Rational> coeffs);

    int support_min() const noexcept { return support_min_; }
    int support_max() const noexcept { return support_min_ + width() - 1; }
    int width() const noexcept { return static_cast<int>(coeffs_.size()); }
    bool is_zero() const;

    const RationalVector& coeffs() const noexcept { return coeffs_; }

    /// a_i, zero outside the declared support.
    Rational operator[](int i) const;

    /// Coefficients converted to another scalar type.
    template <typename Scalar>
    Vector<Scalar> coeffs_as() const {
        Vector<Scalar> out(coeffs_.size());
        for (Eigen::Index k = 0; k < coeffs_.size(); ++k) out[k] = scalar_cast<Scalar>(coeffs_[k]);
        return out;
    }

    Mask translated(int offset) const { return Mask(support_min_ + offset, coeffs_); }
    /// Drops zero end coefficients (the zero mask stays empty).
    Mask trimmed() const;

    friend bool operator==(const Mask& a, const Mask& b) {
        return a.support_min_ == b.support_min_ && a.coeffs_ == b.coeffs_;
    }

private:
    int support_min_ = 0;
    RationalVector coeffs_;
};

enum class SymmetryClass { Primal, Dual, Asymmetric };

struct SymmetryInfo {
    SymmetryClass cls = SymmetryClass::Asymmetric;
    /// Offset that moves the support to the centred convention:
    /// [-(w-1)/2, (w-1)/2] for odd widths and [-(w/2-1), w/2] for even widths.
    int center_shift = 0;
};

/// s_a(z) = sum_i a_i z^i.
LaurentPoly symbol_of(const Mask& mask);

/// Inverse of symbol_of. The mask starts at support_min, padding with declared
/// zeros when support_min lies below the symbol's lowest exponent.
Mask mask_of(const LaurentPoly& symbol, int support_min);
/// Same, starting at the symbol's lowest exponent.
Mask mask_of(const LaurentPoly& symbol);

SymmetryInfo classify_symmetry(const Mask& mask);

std::string to_string(SymmetryClass cls);

}  // namespace subdiv
