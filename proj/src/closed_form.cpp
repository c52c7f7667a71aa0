#include "subdiv/closed_form.hpp"

#include <cmath>

namespace subdiv {

Mask width5_mask(const Rational& a) {
    const Rational half(1, 2);
    return Mask(-2, {a, half, Rational(1) - 2 * a, half, a});
}

Mask width6_mask(const Rational& a, const Rational& b) {
    const Rational c = Rational(1) - a - b;
    return Mask(-2, {a, b, c, c, b, a});
}

Spectrum w5_closed_form(const Rational& a) {
    const double ad = to_double(a);
    return make_spectrum({1.0, 0.5, to_double(Rational(1, 2) - 2 * a), ad, ad});
}

Rational w6_discriminant(const Rational& a, const Rational& b) {
    return 1 + 2 * a - 7 * a * a - 6 * b + 2 * a * b + 9 * b * b;
}

Spectrum w6_closed_form(const Rational& a, const Rational& b, W6Formula formula) {
    const Rational d = w6_discriminant(a, b);
    const double trace = to_double(Rational(1) - a - b);
    const double root = std::sqrt(std::abs(to_double(d)));
    const double scale = formula == W6Formula::Corrected ? 0.5 : 1.0;
    const double center = formula == W6Formula::Corrected ? trace / 2 : trace;

    std::vector<std::complex<double>> values{1.0, to_double(a), to_double(a), to_double(b - a)};
    if (d < 0) {
        values.emplace_back(center, scale * root);
        values.emplace_back(center, -scale * root);
    } else {
        values.emplace_back(center + scale * root, 0.0);
        values.emplace_back(center - scale * root, 0.0);
    }
    return make_spectrum(std::move(values));
}

bool complex_region_predicate(const Rational& a, const Rational& b) { return w6_discriminant(a, b) < 0; }

std::pair<double, double> complex_region_bounds(double b) {
    // 1 - 5b + 8b^2 has negative discriminant, so the root is always real.
    const double r = 2.0 * std::sqrt(2.0 * (1.0 - 5.0 * b + 8.0 * b * b));
    return {(1.0 + b - r) / 7.0, (1.0 + b + r) / 7.0};
}

}  // namespace subdiv
