#pragma once

#include "subdiv/mask.hpp"

#include <optional>
#include <string>
#include <vector>

namespace subdiv {

enum class Verdict { Divergent, C0Certified, Inconclusive };

std::string to_string(Verdict v);

struct NecessaryConditions {
    Rational s_at_1;
    Rational s_at_minus1;
    /// s(1) = 2 and s(-1) = 0.
    bool pass = false;
};

/// One step of the smoothness ladder: s_a = ((1+z)/2)^m s_q.
struct CertificationRung {
    int m = 0;
    Mask quotient;
    bool necessary_ok = false;
    std::optional<Rational> norm;
    bool contractive = false;
};

struct ConvergenceReport {
    Rational s_at_1;
    Rational s_at_minus1;
    bool necessary_ok = false;
    /// Difference mask b with s_a(z) = (1+z) s_b(z).
    std::optional<Mask> difference_mask;
    /// max of the even and odd absolute coefficient sums of b.
    std::optional<Rational> norm;
    Verdict verdict = Verdict::Inconclusive;
    /// Largest m for which the ladder certified C^m.
    std::optional<int> certified_smoothness;
    std::vector<CertificationRung> rungs;
};

struct CertifyOptions {
    /// When > 0, a rung whose one-step norm is >= 1 is retried with the norms of
    /// the L-fold iterated difference scheme for L = 2..iterated_levels.
    int iterated_levels = 0;
};

NecessaryConditions necessary_conditions(const Mask& mask);

/// b with s_a = (1+z) s_b. Throws DomainError when s_a(-1) != 0.
Mask difference_scheme(const Mask& mask);

/// max(sum_j |b_2j|, sum_j |b_2j+1|).
Rational contractivity_norm(const Mask& difference);

/// Norm of the L-fold iterate of the difference scheme: the symbol
/// prod_{l<L} s_b(z^(2^l)) split by residue classes mod 2^L. L = 1 is
/// contractivity_norm.
Rational iterated_contractivity_norm(const Mask& difference, int levels);

/// Mask of ((1+z)/2) s_a(z).
Mask smooth_lift(const Mask& mask);

/// Divides out (1+z)/2 factors for m = 0..target_m while the division is exact,
/// rechecking the necessary conditions and the contractivity of each quotient.
ConvergenceReport certify(const Mask& mask, int target_m, const CertifyOptions& options = {});

}  // namespace subdiv
