#include "subdiv/mask.hpp"

#include "subdiv/errors.hpp"

namespace subdiv {

Mask::Mask(int support_min, RationalVector coeffs)
    : support_min_(support_min), coeffs_(std::move(coeffs)) {}

Mask::Mask(int support_min, std::initializer_list<Rational> coeffs) : support_min_(support_min) {
    coeffs_.resize(static_cast<Eigen::Index>(coeffs.size()));
    Eigen::Index k = 0;
    for (const auto& c : coeffs) coeffs_[k++] = c;
}

bool Mask::is_zero() const {
    for (const auto& c : coeffs_) {
        if (c != 0) return false;
    }
    return true;
}

Rational Mask::operator[](int i) const {
    const int k = i - support_min_;
    if (k < 0 || k >= width()) return Rational(0);
    return coeffs_[k];
}

Mask Mask::trimmed() const {
    Eigen::Index lo = 0;
    Eigen::Index hi = coeffs_.size();
    while (lo < hi && coeffs_[lo] == 0) ++lo;
    while (hi > lo && coeffs_[hi - 1] == 0) --hi;
    if (lo == hi) return Mask{};
    return Mask(support_min_ + static_cast<int>(lo), coeffs_.segment(lo, hi - lo).eval());
}

LaurentPoly symbol_of(const Mask& mask) {
    return LaurentPoly::from_coeffs(mask.support_min(), mask.coeffs());
}

Mask mask_of(const LaurentPoly& symbol, int support_min) {
    if (symbol.is_zero()) throw DomainError("mask_of: zero symbol has no mask");
    const int lo = *symbol.min_exponent();
    if (support_min > lo) {
        throw DomainError("mask_of: support_min " + std::to_string(support_min) +
                          " exceeds the lowest symbol exponent " + std::to_string(lo));
    }
    RationalVector coeffs = RationalVector::Zero(*symbol.max_exponent() - support_min + 1);
    for (const auto& [e, c] : symbol.terms()) coeffs[e - support_min] = c;
    return Mask(support_min, std::move(coeffs));
}

Mask mask_of(const LaurentPoly& symbol) {
    if (symbol.is_zero()) throw DomainError("mask_of: zero symbol has no mask");
    return mask_of(symbol, *symbol.min_exponent());
}

SymmetryInfo classify_symmetry(const Mask& mask) {
    const int w = mask.width();
    SymmetryInfo info;
    if (w == 0) return info;
    const int centred_min = (w % 2 == 1) ? -(w - 1) / 2 : -(w / 2 - 1);
    info.center_shift = centred_min - mask.support_min();

    const auto& c = mask.coeffs();
    if (c == c.reverse().eval()) {
        info.cls = (w % 2 == 1) ? SymmetryClass::Primal : SymmetryClass::Dual;
    }
    return info;
}

std::string to_string(SymmetryClass cls) {
    switch (cls) {
        case SymmetryClass::Primal: return "primal";
        case SymmetryClass::Dual: return "dual";
        case SymmetryClass::Asymmetric: return "asymmetric";
    }
    return "asymmetric";
}

}  // namespace subdiv
