#include "subdiv/laurent.hpp"

#include <sstream>

namespace subdiv {

namespace {

bool is_even(int e) { return e % 2 == 0; }

}  // namespace

LaurentPoly::LaurentPoly(const Rational& constant) { add_term(0, constant); }

LaurentPoly::LaurentPoly(Terms terms) {
    for (auto& [e, c] : terms) add_term(e, c);
}

LaurentPoly LaurentPoly::from_coeffs(int lowest, const RationalVector& coeffs) {
    LaurentPoly p;
    for (Eigen::Index k = 0; k < coeffs.size(); ++k) {
        p.add_term(lowest + static_cast<int>(k), coeffs[k]);
    }
    return p;
}

LaurentPoly LaurentPoly::monomial(int exponent, const Rational& c) {
    LaurentPoly p;
    p.add_term(exponent, c);
    return p;
}

std::optional<int> LaurentPoly::min_exponent() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first;
}

std::optional<int> LaurentPoly::max_exponent() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first;
}

Rational LaurentPoly::coeff(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational(0) : it->second;
}

RationalVector LaurentPoly::dense() const {
    if (terms_.empty()) return {};
    const int lo = *min_exponent();
    RationalVector out = RationalVector::Zero(*max_exponent() - lo + 1);
    for (const auto& [e, c] : terms_) out[e - lo] = c;
    return out;
}

LaurentPoly LaurentPoly::dilate(int factor) const {
    if (factor <= 0) throw DomainError("dilation factor must be positive");
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e * factor, c);
    return out;
}

LaurentPoly LaurentPoly::shift(int k) const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e + k, c);
    return out;
}

void LaurentPoly::add_term(int exponent, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(exponent, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& s) {
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    }
    return out;
}

Rational lp_eval(const LaurentPoly& p, const Rational& z) {
    if (z == 0) throw DomainError("Laurent polynomial evaluated at z = 0");
    // Horner over the dense coefficients, then scale by z^lowest.
    if (p.is_zero()) return Rational(0);
    const RationalVector c = p.dense();
    Rational sum = 0;
    for (Eigen::Index k = c.size(); k-- > 0;) sum = sum * z + c[k];
    const int lo = *p.min_exponent();
    const Rational base = lo >= 0 ? z : Rational(1 / z);
    for (int k = 0; k < (lo >= 0 ? lo : -lo); ++k) sum *= base;
    return sum;
}

LaurentPoly lp_mul(const LaurentPoly& p, const LaurentPoly& q) { return p * q; }

LaurentPoly lp_div_exact(const LaurentPoly& p, const LaurentPoly& d) {
    if (d.is_zero()) throw DomainError("division by the zero Laurent polynomial");
    if (p.is_zero()) return {};

    // z is a unit, so divide the ordinary polynomials z^-lo(p) p and z^-lo(d) d
    // from the top degree down and reattach the exponent offset.
    const int p_lo = *p.min_exponent();
    const int d_lo = *d.min_exponent();
    const int d_deg = *d.max_exponent() - d_lo;
    const Rational& d_lead = d.terms().rbegin()->second;

    LaurentPoly rem = p.shift(-p_lo);
    LaurentPoly quot;
    const LaurentPoly d0 = d.shift(-d_lo);
    while (!rem.is_zero() && *rem.max_exponent() >= d_deg) {
        const int k = *rem.max_exponent() - d_deg;
        const Rational c = rem.terms().rbegin()->second / d_lead;
        const LaurentPoly term = LaurentPoly::monomial(k, c);
        quot += term;
        rem -= term * d0;
    }
    if (!rem.is_zero()) {
        LaurentPoly remainder = rem.shift(p_lo);
        throw InexactDivisionError("inexact division: remainder " + to_string(remainder),
                                   std::move(remainder));
    }
    return quot.shift(p_lo - d_lo);
}

ParitySums lp_parity_sums(const LaurentPoly& p) {
    ParitySums s{Rational(0), Rational(0)};
    for (const auto& [e, c] : p.terms()) {
        (is_even(e) ? s.even : s.odd) += abs(c);
    }
    return s;
}

std::string to_string(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        if (!first) os << " + ";
        first = false;
        os << to_string(c);
        if (e == 1) {
            os << "*z";
        } else if (e != 0) {
            os << "*z^" << e;
        }
    }
    return os.str();
}

}  // namespace subdiv
