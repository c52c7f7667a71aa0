#pragma once

// Closed-form spectra of the palindromic width-5 and width-6 families whose
// masks already satisfy s(1) = 2, s(-1) = 0.
//
//   width 5:  a_{+-2} = a, a_{+-1} = 1/2, a_0 = 1 - 2a
//             spectrum {1, 1/2, 1/2 - 2a, a, a}
//   width 6:  (a_{-2}, a_{-1}, a_0, a_1, a_2, a_3) = (a, b, c, c, b, a), c = 1 - a - b
//             spectrum {1, a, a, b - a, ((1 - a - b) +- sqrt(D)) / 2}
//             D = 1 + 2a - 7a^2 - 6b + 2ab + 9b^2
//
// D is the discriminant of  mu^2 - (1-a-b) mu + (2a^2 - 2b^2 - a + b),  the
// quadratic factor of the width-6 characteristic polynomial.
// W6Formula::AsPrinted evaluates 1 - a - b +- sqrt(D) without the factor 1/2.

#include "subdiv/mask.hpp"
#include "subdiv/spectrum.hpp"

#include <utility>

namespace subdiv {

Mask width5_mask(const Rational& a);
Mask width6_mask(const Rational& a, const Rational& b);

Spectrum w5_closed_form(const Rational& a);

enum class W6Formula { Corrected, AsPrinted };

Rational w6_discriminant(const Rational& a, const Rational& b);

Spectrum w6_closed_form(const Rational& a, const Rational& b, W6Formula formula = W6Formula::Corrected);

/// D(a, b) < 0, i.e. the width-6 family member has a complex conjugate pair.
bool complex_region_predicate(const Rational& a, const Rational& b);

/// Roots in a of D(a, b) = 0 for fixed b:  (1 + b -+ 2 sqrt(2(1 - 5b + 8b^2))) / 7.
/// D < 0 exactly when a lies below the first or above the second.
std::pair<double, double> complex_region_bounds(double b);

}  // namespace subdiv
