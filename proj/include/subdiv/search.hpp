#pragma once

// Grid exploration of palindromic masks that satisfy s(1) = 2 and s(-1) = 0.
//
// Free parameters after imposing symmetry and both conditions:
//   width 2   (none)          1, 1
//   width 3   (none)          1/2, 1, 1/2
//   width 4   (alpha)         alpha, 1-alpha, 1-alpha, alpha
//   width 5   (a)             a, 1/2, 1-2a, 1/2, a
//   width 6   (a, b)          a, b, c, c, b, a                 c = 1-a-b
//   width 7   (alpha, beta)   alpha, beta, 1/2-alpha, 1-2beta, 1/2-alpha, beta, alpha
//   width 8   (alpha, beta, gamma)
//                             alpha, beta, gamma, delta, delta, gamma, beta, alpha
//                             delta = 1-alpha-beta-gamma
// Odd widths: s(1) - s(-1) = 2 * (sum of odd-index coefficients) = 2 makes the
// odd coefficients sum to 1; even widths satisfy s(-1) = 0 by symmetry alone.

#include "subdiv/mask.hpp"
#include "subdiv/spectrum.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace subdiv {

inline constexpr int kMinSearchWidth = 2;
inline constexpr int kMaxSearchWidth = 8;
inline constexpr std::size_t kDefaultCellCap = 1'000'000;
inline constexpr double kDegenerateDiscriminant = 1e-10;

struct ParamRange {
    Rational lo;
    Rational hi;
    Rational step;
};

/// Parses "lo:hi:step[,lo:hi:step...]" with rational fields.
std::vector<ParamRange> parse_grid(const std::string& text);

int free_parameter_count(int width);
std::vector<std::string> parameter_names(int width);

/// Palindromic mask of the given width from its free parameters.
Mask palindromic_mask(int width, const std::vector<Rational>& params);

struct SearchSpec {
    int width = 6;
    std::vector<ParamRange> ranges;
    /// Convergent cells must also pass the contractivity norm test.
    bool convergence_filter = true;
    double tol = kClassifyTolerance;
    std::size_t cell_cap = kDefaultCellCap;
};

/// Default grids: w4 alpha in [-1,1]/100; w5 a in [-1,1]/200; w6, w7 in [-1/2,1/2]^2/50;
/// w8 in [-1/2,1/2]^3/10.
SearchSpec default_search(int width);

enum class SpectrumClass { RealConvergent, ComplexConvergent, RealOther, ComplexOther };

std::string to_string(SpectrumClass c);

struct SearchCell {
    std::vector<Rational> params;
    SpectrumClass cls = SpectrumClass::RealOther;
    double max_imag = 0.0;
    int negative_real_count = 0;
    bool spectral_ok = false;
    std::optional<Rational> norm;
    /// Width 6 only: |D| below kDegenerateDiscriminant.
    bool degenerate = false;
};

struct Witness {
    std::string kind;  // "first", "max_imag" or "simplest"
    std::size_t cell = 0;
};

struct SearchResult {
    int width = 0;
    std::vector<SearchCell> cells;
    std::array<std::size_t, 4> counts{};
    std::size_t degenerate_count = 0;
    std::map<SpectrumClass, std::vector<Witness>> witnesses;

    std::size_t count(SpectrumClass c) const { return counts[static_cast<std::size_t>(c)]; }
};

/// Throws DomainError on an invalid spec and ResourceLimitError above the cell cap.
SearchResult scan(const SearchSpec& spec);

/// Index of the simplest cell of a class: smallest common denominator of the
/// mask coefficients, ties broken by larger max_imag, then grid order.
std::optional<std::size_t> simplest_cell(const SearchResult& result, SpectrumClass cls);

struct LemmaMaximum {
    double max_value = 0.0;
    Rational argmax;
};

/// g(b) = 1 + b - 2 sqrt(2(1 - 5b + 8b^2)) on a rational grid.
double negativity_function(double b);
LemmaMaximum negativity_lemma_check(const ParamRange& b_range);

/// 8(1 - 5b + 8b^2) - (1 + b)^2, which equals 7(3b - 1)^2.
Rational negativity_gap(const Rational& b);

/// For every grid value a, checks exactly that D(a, a + 1/4) = (2a + 1/4)^2 >= 0.
bool c1_w6_obstruction(const ParamRange& a_range);

struct MinWidthReport {
    std::optional<int> width;
    /// Complex convergent cells with the smallest common denominator at that
    /// width, most pronounced complex pair first.
    std::vector<SearchCell> witnesses;
    std::map<int, SearchResult> scans;
};

/// Scans widths 2..max_width (default grids unless overridden) and reports the
/// smallest width holding a ComplexConvergent cell.
MinWidthReport min_width_report(int max_width, const std::map<int, SearchSpec>& overrides = {});

void write_search_csv(std::ostream& out, const SearchResult& result);

}  // namespace subdiv
