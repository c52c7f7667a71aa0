#pragma once

// Helpers shared by the unit tests: seeded random rationals and small
// reference implementations written without any of the library's algebra.

#include "subdiv/laurent.hpp"
#include "subdiv/mask.hpp"
#include "subdiv/rational.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

namespace testing {

using subdiv::Rational;

inline Rational q(long n, long d = 1) { return Rational(n, d); }

class RandomRationals {
public:
    explicit RandomRationals(std::uint64_t seed) : rng_(seed) {}

    /// Numerator in [-max_num, max_num], denominator in [1, max_den].
    Rational next(long max_num = 20, long max_den = 12) {
        std::uniform_int_distribution<long> num(-max_num, max_num);
        std::uniform_int_distribution<long> den(1, max_den);
        return Rational(num(rng_), den(rng_));
    }

    Rational nonzero(long max_num = 20, long max_den = 12) {
        Rational r;
        do r = next(max_num, max_den);
        while (r == 0);
        return r;
    }

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    std::vector<Rational> sequence(int length) {
        std::vector<Rational> out;
        for (int i = 0; i < length; ++i) out.push_back(next());
        return out;
    }

    /// Dense sequence with nonzero first and last entries.
    std::vector<Rational> trimmed_sequence(int length) {
        auto out = sequence(length);
        out.front() = nonzero();
        out.back() = nonzero();
        return out;
    }

private:
    std::mt19937_64 rng_;
};

inline subdiv::RationalVector to_vector(const std::vector<Rational>& v) {
    subdiv::RationalVector out(static_cast<Eigen::Index>(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i) out[static_cast<Eigen::Index>(i)] = v[i];
    return out;
}

inline std::vector<Rational> to_std(const subdiv::RationalVector& v) { return {v.begin(), v.end()}; }

/// Dense convolution c_k = sum_{i+j=k} a_i b_j.
inline std::vector<Rational> convolve(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Rational> c(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    }
    return c;
}

/// p(z^factor) for a dense coefficient list starting at exponent 0.
inline std::vector<Rational> dilate(const std::vector<Rational>& a, int factor) {
    if (a.empty()) return {};
    std::vector<Rational> out((a.size() - 1) * static_cast<std::size_t>(factor) + 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) out[i * static_cast<std::size_t>(factor)] = a[i];
    return out;
}

struct Division {
    std::vector<Rational> quotient;   // ascending powers
    std::vector<Rational> remainder;  // ascending powers, degree < deg(divisor)
};

/// Schoolbook division of ordinary polynomials, leading term first.
inline Division long_divide(std::vector<Rational> num, const std::vector<Rational>& den) {
    while (!num.empty() && num.back() == 0) num.pop_back();
    const std::size_t dn = den.size();
    Division d;
    if (num.size() < dn) {
        d.remainder = num;
        return d;
    }
    d.quotient.assign(num.size() - dn + 1, Rational(0));
    for (std::size_t k = num.size() - 1;; --k) {
        const Rational f = num[k] / den.back();
        d.quotient[k - (dn - 1)] = f;
        for (std::size_t j = 0; j < dn; ++j) num[k - (dn - 1) + j] -= f * den[j];
        if (k == dn - 1) break;
    }
    num.resize(dn - 1);
    d.remainder = num;
    return d;
}

inline bool all_zero(const std::vector<Rational>& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

/// Multiset comparison of complex values: sort both lexicographically after rounding
/// is unreliable, so each value of `a` claims its nearest unused partner in `b`.
inline double multiset_distance(std::vector<std::complex<double>> a, std::vector<std::complex<double>> b) {
    if (a.size() != b.size()) return INFINITY;
    double worst = 0.0;
    std::vector<bool> used(b.size(), false);
    for (const auto& x : a) {
        double best = INFINITY;
        std::size_t arg = 0;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (used[j]) continue;
            if (std::abs(x - b[j]) < best) {
                best = std::abs(x - b[j]);
                arg = j;
            }
        }
        used[arg] = true;
        worst = std::max(worst, best);
    }
    return worst;
}

/// Cubic B-spline cardinal function: (t+2)^3/6 pieces, value 2/3 at t = 0.
inline double cubic_bspline(double t) {
    t = std::abs(t);
    if (t >= 2.0) return 0.0;
    if (t >= 1.0) return (2.0 - t) * (2.0 - t) * (2.0 - t) / 6.0;
    return 2.0 / 3.0 - t * t + t * t * t / 2.0;
}

}  // namespace testing
