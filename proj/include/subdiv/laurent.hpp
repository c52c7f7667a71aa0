#pragma once

#include "subdiv/errors.hpp"
#include "subdiv/rational.hpp"

#include <map>
#include <optional>
#include <utility>

namespace subdiv {

/// Finitely supported Laurent polynomial sum_i c_i z^i with exact rational
/// coefficients. Zero coefficients are never stored, so the key range is the
/// exact support.
class LaurentPoly {
public:
    using Terms = std::map<int, Rational>;

    LaurentPoly() = default;
    explicit LaurentPoly(const Rational& constant);
    explicit LaurentPoly(Terms terms);

    /// Dense construction: coeffs[k] is the coefficient of z^(lowest + k).
    static LaurentPoly from_coeffs(int lowest, const RationalVector& coeffs);
    static LaurentPoly monomial(int exponent, const Rational& c = Rational(1));

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::optional<int> min_exponent() const;
    std::optional<int> max_exponent() const;
    Rational coeff(int exponent) const;

    /// Dense coefficient vector from min_exponent to max_exponent (empty for zero).
    RationalVector dense() const;

    /// p(z^factor); used for the symbols of iterated schemes.
    LaurentPoly dilate(int factor) const;
    /// z^k p(z).
    LaurentPoly shift(int k) const;

    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const Rational& s);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(LaurentPoly a, const Rational& s) { return a *= s; }
    friend LaurentPoly operator*(const Rational& s, LaurentPoly a) { return a *= s; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

private:
    void add_term(int exponent, const Rational& c);

    Terms terms_;
};

/// Thrown by lp_div_exact when the divisor leaves a remainder.
class InexactDivisionError : public DomainError {
public:
    InexactDivisionError(const std::string& what, LaurentPoly remainder)
        : DomainError(what), remainder_(std::move(remainder)) {}

    const LaurentPoly& remainder() const noexcept { return remainder_; }

private:
    LaurentPoly remainder_;
};

struct ParitySums {
    Rational even;
    Rational odd;
};

/// Exact value at z. Throws DomainError for z = 0.
Rational lp_eval(const LaurentPoly& p, const Rational& z);

LaurentPoly lp_mul(const LaurentPoly& p, const LaurentPoly& q);

/// Quotient q with p = d * q. Throws DomainError when d is zero and
/// InexactDivisionError (carrying the remainder) when d does not divide p.
LaurentPoly lp_div_exact(const LaurentPoly& p, const LaurentPoly& d);

/// Sums of absolute coefficients at even and at odd exponents.
ParitySums lp_parity_sums(const LaurentPoly& p);

/// Human-readable form such as "1/2*z^-1 + 1 + 1/2*z".
std::string to_string(const LaurentPoly& p);

}  // namespace subdiv
