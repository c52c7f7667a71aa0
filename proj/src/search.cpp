#include "subdiv/search.hpp"

#include "subdiv/closed_form.hpp"
#include "subdiv/convergence.hpp"
#include "subdiv/errors.hpp"
#include "subdiv/export.hpp"
#include "subdiv/local_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace subdiv {

namespace {

void check_range(const ParamRange& r, const std::string& what) {
    if (!(r.lo < r.hi)) throw DomainError(what + ": grid requires lo < hi");
    if (!(r.step > 0)) throw DomainError(what + ": grid requires step > 0");
}

std::vector<Rational> grid_values(const ParamRange& r) {
    std::vector<Rational> out;
    for (Rational x = r.lo; x <= r.hi; x += r.step) out.push_back(x);
    return out;
}

std::size_t grid_size(const ParamRange& r) {
    const Rational n = (r.hi - r.lo) / r.step;
    // floor(n) + 1 without converting huge values to double
    Integer fl = boost::multiprecision::numerator(n) / boost::multiprecision::denominator(n);
    return static_cast<std::size_t>(fl.convert_to<unsigned long long>()) + 1;
}

Rational q(long n, long d = 1) { return Rational(n, d); }

}  // namespace

std::vector<ParamRange> parse_grid(const std::string& text) {
    std::vector<ParamRange> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        std::vector<std::string> fields;
        std::stringstream ps(part);
        std::string f;
        while (std::getline(ps, f, ':')) fields.push_back(f);
        if (fields.size() != 3) throw ParseError("grid '" + part + "' must have the form lo:hi:step", "grid");
        out.push_back({parse_rational(fields[0]), parse_rational(fields[1]), parse_rational(fields[2])});
    }
    if (out.empty()) throw ParseError("empty grid specification", "grid");
    return out;
}

int free_parameter_count(int width) {
    switch (width) {
        case 2:
        case 3: return 0;
        case 4:
        case 5: return 1;
        case 6:
        case 7: return 2;
        case 8: return 3;
        default: throw DomainError("search widths are limited to 2..8");
    }
}

std::vector<std::string> parameter_names(int width) {
    switch (free_parameter_count(width)) {
        case 0: return {};
        case 1: return {width == 5 ? "a" : "alpha"};
        case 2: return width == 6 ? std::vector<std::string>{"a", "b"} : std::vector<std::string>{"alpha", "beta"};
        default: return {"alpha", "beta", "gamma"};
    }
}

Mask palindromic_mask(int width, const std::vector<Rational>& p) {
    if (static_cast<int>(p.size()) != free_parameter_count(width)) {
        throw DomainError("palindromic_mask: width " + std::to_string(width) + " takes " +
                          std::to_string(free_parameter_count(width)) + " parameters");
    }
    const Rational one(1);
    const Rational half(1, 2);
    switch (width) {
        case 2: return Mask(0, {one, one});
        case 3: return Mask(-1, {half, one, half});
        case 4: return Mask(-1, {p[0], one - p[0], one - p[0], p[0]});
        case 5: return width5_mask(p[0]);
        case 6: return width6_mask(p[0], p[1]);
        case 7: return Mask(-3, {p[0], p[1], half - p[0], one - 2 * p[1], half - p[0], p[1], p[0]});
        default: {
            const Rational d = one - p[0] - p[1] - p[2];
            return Mask(-3, {p[0], p[1], p[2], d, d, p[2], p[1], p[0]});
        }
    }
}

SearchSpec default_search(int width) {
    SearchSpec s;
    s.width = width;
    const ParamRange wide{q(-1), q(1), q(1, 100)};
    const ParamRange w5{q(-1), q(1), q(1, 200)};
    const ParamRange half{q(-1, 2), q(1, 2), q(1, 50)};
    const ParamRange coarse{q(-1, 2), q(1, 2), q(1, 10)};
    switch (free_parameter_count(width)) {
        case 0: break;
        case 1: s.ranges = {width == 5 ? w5 : wide}; break;
        case 2: s.ranges = {half, half}; break;
        default: s.ranges = {coarse, coarse, coarse}; break;
    }
    return s;
}

std::string to_string(SpectrumClass c) {
    switch (c) {
        case SpectrumClass::RealConvergent: return "RealConvergent";
        case SpectrumClass::ComplexConvergent: return "ComplexConvergent";
        case SpectrumClass::RealOther: return "RealOther";
        case SpectrumClass::ComplexOther: return "ComplexOther";
    }
    return "RealOther";
}

SearchResult scan(const SearchSpec& spec) {
    const int nparams = free_parameter_count(spec.width);
    if (static_cast<int>(spec.ranges.size()) != nparams) {
        throw DomainError("scan: width " + std::to_string(spec.width) + " needs " + std::to_string(nparams) +
                          " parameter ranges, got " + std::to_string(spec.ranges.size()));
    }
    if (!(spec.tol > 0)) throw DomainError("scan: tolerance must be positive");
    std::size_t total = 1;
    for (const auto& r : spec.ranges) {
        check_range(r, "scan");
        total *= grid_size(r);
        if (total > spec.cell_cap) {
            throw ResourceLimitError("scan: grid exceeds the cell cap of " + std::to_string(spec.cell_cap));
        }
    }

    std::vector<std::vector<Rational>> axes;
    for (const auto& r : spec.ranges) axes.push_back(grid_values(r));

    SearchResult result;
    result.width = spec.width;
    result.cells.reserve(total);

    // Odometer over the axes, last parameter fastest.
    std::vector<std::size_t> idx(axes.size(), 0);
    for (std::size_t cell = 0; cell < total; ++cell) {
        std::vector<Rational> params;
        for (std::size_t d = 0; d < axes.size(); ++d) params.push_back(axes[d][idx[d]]);

        const Mask mask = palindromic_mask(spec.width, params);
        const Spectrum s = eigenvalues(build_local_matrix(mask).entries);
        const SpectralClass sc = classify(s, spec.tol);

        SearchCell c;
        c.params = std::move(params);
        c.max_imag = max_imag(s);
        c.negative_real_count = sc.negative_real_count;
        c.spectral_ok = sc.convergence_spectral_ok;
        c.norm = contractivity_norm(difference_scheme(mask));
        const bool convergent = c.spectral_ok && (!spec.convergence_filter || *c.norm < 1);
        c.cls = sc.has_complex ? (convergent ? SpectrumClass::ComplexConvergent : SpectrumClass::ComplexOther)
                               : (convergent ? SpectrumClass::RealConvergent : SpectrumClass::RealOther);
        if (spec.width == 6) {
            c.degenerate = std::abs(to_double(w6_discriminant(c.params[0], c.params[1]))) < kDegenerateDiscriminant;
        }
        ++result.counts[static_cast<std::size_t>(c.cls)];
        if (c.degenerate) ++result.degenerate_count;
        result.cells.push_back(std::move(c));

        for (std::size_t d = axes.size(); d-- > 0;) {
            if (++idx[d] < axes[d].size()) break;
            idx[d] = 0;
        }
    }

    for (std::size_t k = 0; k < 4; ++k) {
        const auto cls = static_cast<SpectrumClass>(k);
        std::optional<std::size_t> first;
        std::optional<std::size_t> widest;
        for (std::size_t i = 0; i < result.cells.size(); ++i) {
            if (result.cells[i].cls != cls) continue;
            if (!first) first = i;
            if (!widest || result.cells[i].max_imag > result.cells[*widest].max_imag) widest = i;
        }
        if (!first) continue;
        auto& w = result.witnesses[cls];
        w.push_back({"first", *first});
        w.push_back({"max_imag", *widest});
        w.push_back({"simplest", *simplest_cell(result, cls)});
    }
    return result;
}

std::optional<std::size_t> simplest_cell(const SearchResult& result, SpectrumClass cls) {
    std::optional<std::size_t> best;
    Integer best_den;
    for (std::size_t i = 0; i < result.cells.size(); ++i) {
        const auto& c = result.cells[i];
        if (c.cls != cls) continue;
        const Integer den = common_denominator(palindromic_mask(result.width, c.params).coeffs());
        if (!best || den < best_den || (den == best_den && c.max_imag > result.cells[*best].max_imag)) {
            best = i;
            best_den = den;
        }
    }
    return best;
}

double negativity_function(double b) { return 1.0 + b - 2.0 * std::sqrt(2.0 * (1.0 - 5.0 * b + 8.0 * b * b)); }

LemmaMaximum negativity_lemma_check(const ParamRange& b_range) {
    check_range(b_range, "negativity_lemma_check");
    LemmaMaximum best;
    bool first = true;
    for (const auto& b : grid_values(b_range)) {
        const double g = negativity_function(to_double(b));
        if (first || g > best.max_value) {
            best.max_value = g;
            best.argmax = b;
            first = false;
        }
    }
    return best;
}

Rational negativity_gap(const Rational& b) { return 8 * (1 - 5 * b + 8 * b * b) - (1 + b) * (1 + b); }

bool c1_w6_obstruction(const ParamRange& a_range) {
    check_range(a_range, "c1_w6_obstruction");
    const Rational quarter(1, 4);
    for (const auto& a : grid_values(a_range)) {
        const Rational d = w6_discriminant(a, a + quarter);
        const Rational square = (2 * a + quarter) * (2 * a + quarter);
        if (d != square || d < 0) return false;
    }
    return true;
}

MinWidthReport min_width_report(int max_width, const std::map<int, SearchSpec>& overrides) {
    if (max_width < kMinSearchWidth) throw DomainError("min_width_report: max_width must be >= 2");
    if (max_width > kMaxSearchWidth) throw DomainError("min_width_report: widths are limited to 2..8");

    MinWidthReport report;
    for (int w = kMinSearchWidth; w <= max_width; ++w) {
        const auto it = overrides.find(w);
        SearchResult r = scan(it != overrides.end() ? it->second : default_search(w));
        const bool found = r.count(SpectrumClass::ComplexConvergent) > 0;
        if (found && !report.width) {
            report.width = w;
            // All complex convergent cells sharing the minimal denominator.
            const auto simplest = *simplest_cell(r, SpectrumClass::ComplexConvergent);
            const Integer den = common_denominator(palindromic_mask(w, r.cells[simplest].params).coeffs());
            for (const auto& c : r.cells) {
                if (c.cls == SpectrumClass::ComplexConvergent &&
                    common_denominator(palindromic_mask(w, c.params).coeffs()) == den) {
                    report.witnesses.push_back(c);
                }
            }
            std::stable_sort(report.witnesses.begin(), report.witnesses.end(),
                             [](const SearchCell& x, const SearchCell& y) { return x.max_imag > y.max_imag; });
        }
        report.scans.emplace(w, std::move(r));
        if (report.width) break;
    }
    return report;
}

void write_search_csv(std::ostream& out, const SearchResult& result) {
    for (const auto& name : parameter_names(result.width)) out << name << ',';
    out << "class,max_imag\n";
    for (const auto& c : result.cells) {
        for (const auto& p : c.params) out << to_string(p) << ',';
        out << to_string(c.cls) << ',' << format_number(c.max_imag) << '\n';
    }
}

}  // namespace subdiv
