#pragma once

// Exact rational scalar used for masks, symbols, local matrices and refinement.
// Expression templates are disabled so the type composes cleanly with Eigen.

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <Eigen/Core>

#include <string>
#include <string_view>
#include <type_traits>

namespace subdiv {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using RationalVector = Vector<Rational>;
using RationalMatrix = Matrix<Rational>;

/// Parses "p/q" or "p" (optional sign, decimal digits). Throws ParseError on
/// malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& r);

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Exact conversion of a finite double into a rational.
Rational from_double(double x);

/// Lowest common denominator of a set of rationals.
Integer common_denominator(const RationalVector& values);

/// Cast helper that works for both Rational and builtin floating types.
template <typename To>
To scalar_cast(const Rational& r) {
    if constexpr (std::is_same_v<To, Rational>) {
        return r;
    } else {
        return r.convert_to<To>();
    }
}

inline double scalar_to_double(const Rational& r) { return to_double(r); }

template <typename T>
    requires std::is_arithmetic_v<T>
double scalar_to_double(T x) {
    return static_cast<double>(x);
}

}  // namespace subdiv
