#include "subdiv/convergence.hpp"

#include "subdiv/errors.hpp"

namespace subdiv {

namespace {

const LaurentPoly& one_plus_z() {
    static const LaurentPoly p = LaurentPoly::from_coeffs(0, RationalVector::Constant(2, Rational(1)));
    return p;
}

const LaurentPoly& half_one_plus_z() {
    static const LaurentPoly p = LaurentPoly::from_coeffs(0, RationalVector::Constant(2, Rational(1, 2)));
    return p;
}

// Non-negative residue of a mod m.
int floor_mod(int a, int m) {
    const int r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Divergent: return "Divergent";
        case Verdict::C0Certified: return "C0Certified";
        case Verdict::Inconclusive: return "Inconclusive";
    }
    return "Inconclusive";
}

NecessaryConditions necessary_conditions(const Mask& mask) {
    const LaurentPoly s = symbol_of(mask);
    NecessaryConditions nc;
    nc.s_at_1 = lp_eval(s, Rational(1));
    nc.s_at_minus1 = lp_eval(s, Rational(-1));
    nc.pass = nc.s_at_1 == 2 && nc.s_at_minus1 == 0;
    return nc;
}

Mask difference_scheme(const Mask& mask) {
    const LaurentPoly s = symbol_of(mask);
    if (s.is_zero()) throw DomainError("difference_scheme: zero mask");
    if (lp_eval(s, Rational(-1)) != 0) {
        throw DomainError("difference_scheme: s(-1) != 0, (1+z) is not a factor of the symbol");
    }
    return mask_of(lp_div_exact(s, one_plus_z()));
}

Rational contractivity_norm(const Mask& difference) {
    const ParitySums sums = lp_parity_sums(symbol_of(difference));
    return sums.even > sums.odd ? sums.even : sums.odd;
}

Rational iterated_contractivity_norm(const Mask& difference, int levels) {
    if (levels < 1) throw DomainError("iterated_contractivity_norm: levels must be >= 1");
    const LaurentPoly s = symbol_of(difference);
    LaurentPoly product(Rational(1));
    for (int l = 0; l < levels; ++l) product = product * s.dilate(1 << l);

    const int modulus = 1 << levels;
    std::vector<Rational> sums(static_cast<std::size_t>(modulus), Rational(0));
    for (const auto& [e, c] : product.terms()) sums[static_cast<std::size_t>(floor_mod(e, modulus))] += abs(c);
    Rational best = 0;
    for (const auto& v : sums) {
        if (v > best) best = v;
    }
    return best;
}

Mask smooth_lift(const Mask& mask) {
    if (mask.is_zero()) return Mask{};
    return mask_of(lp_mul(half_one_plus_z(), symbol_of(mask)));
}

ConvergenceReport certify(const Mask& mask, int target_m, const CertifyOptions& options) {
    if (target_m < 0) throw DomainError("certify: target smoothness must be >= 0");

    ConvergenceReport report;
    const NecessaryConditions nc = necessary_conditions(mask);
    report.s_at_1 = nc.s_at_1;
    report.s_at_minus1 = nc.s_at_minus1;
    report.necessary_ok = nc.pass;
    if (!nc.pass) {
        report.verdict = Verdict::Divergent;
        return report;
    }
    report.difference_mask = difference_scheme(mask);
    report.norm = contractivity_norm(*report.difference_mask);

    LaurentPoly quotient = symbol_of(mask);
    for (int m = 0; m <= target_m; ++m) {
        if (m > 0) {
            try {
                quotient = lp_div_exact(quotient, half_one_plus_z());
            } catch (const InexactDivisionError&) {
                break;
            }
        }
        CertificationRung rung;
        rung.m = m;
        rung.quotient = mask_of(quotient);
        const NecessaryConditions qnc = necessary_conditions(rung.quotient);
        rung.necessary_ok = qnc.pass;
        if (qnc.pass) {
            const Mask diff = difference_scheme(rung.quotient);
            rung.norm = contractivity_norm(diff);
            rung.contractive = *rung.norm < 1;
            for (int level = 2; !rung.contractive && level <= options.iterated_levels; ++level) {
                rung.contractive = iterated_contractivity_norm(diff, level) < 1;
            }
        }
        if (rung.contractive) report.certified_smoothness = m;
        const bool stop = !rung.necessary_ok;
        report.rungs.push_back(std::move(rung));
        if (stop) break;
    }

    report.verdict = report.certified_smoothness ? Verdict::C0Certified : Verdict::Inconclusive;
    return report;
}

}  // namespace subdiv
