#pragma once

// Small exact linear algebra over the rationals (n <= ~10 in practice).

#include "subdiv/rational.hpp"

#include <optional>
#include <vector>

namespace subdiv {

/// Basis of {x : M x = 0} from the reduced row echelon form.
std::vector<RationalVector> nullspace(const RationalMatrix& m);

int rank(const RationalMatrix& m);

/// Best rational approximation of x with denominator <= max_denominator
/// (continued fractions); nullopt when none lies within `tol` of x.
std::optional<Rational> rationalize(double x, long max_denominator = 1'000'000, double tol = 1e-9);

/// Recognises an exact rational eigenvalue of `m` near `approx`: the
/// rationalised value r is accepted only if m - r I is exactly singular.
std::optional<Rational> exact_eigenvalue_near(const RationalMatrix& m, double approx);

}  // namespace subdiv
