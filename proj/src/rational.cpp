#include "subdiv/rational.hpp"

#include "subdiv/errors.hpp"

#include <cctype>
#include <cmath>

namespace subdiv {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"}
                                                                 : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
        throw ParseError("malformed rational literal '" + std::string(text) + "'");
    }
    Integer p(std::string{num});
    Integer q(std::string{den});
    if (q == 0) {
        throw ParseError("zero denominator in rational literal '" + std::string(text) + "'");
    }
    if (negative) p = -p;
    return Rational(p, q);
}

std::string to_string(const Rational& r) {
    // boost prints "p/q" in lowest terms and "p" for integers.
    return r.str();
}

Rational from_double(double x) {
    if (!std::isfinite(x)) throw DomainError("cannot convert a non-finite double to a rational");
    int exponent = 0;
    double mantissa = std::frexp(x, &exponent);
    // 53 bits of mantissa make the scaled value an exact integer.
    const auto scaled = static_cast<long long>(std::ldexp(mantissa, 53));
    exponent -= 53;
    Rational r{Integer(scaled)};
    if (exponent >= 0) {
        r *= Rational(Integer(1) << exponent);
    } else {
        r /= Rational(Integer(1) << -exponent);
    }
    return r;
}

Integer common_denominator(const RationalVector& values) {
    Integer l = 1;
    for (const auto& v : values) {
        l = boost::multiprecision::lcm(l, Integer(boost::multiprecision::denominator(v)));
    }
    return l;
}

}  // namespace subdiv
