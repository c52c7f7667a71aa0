#include "support.hpp"

#include "subdiv/closed_form.hpp"
#include "subdiv/convergence.hpp"
#include "subdiv/errors.hpp"
#include "subdiv/local_matrix.hpp"
#include "subdiv/report_json.hpp"
#include "subdiv/search.hpp"

#include <doctest.h>

#include <cmath>
#include <sstream>

using namespace subdiv;
using testing::q;

namespace {

std::vector<Rational> params_of(const SearchCell& c) { return c.params; }

const SearchCell* cell_at(const SearchResult& r, const std::vector<Rational>& params) {
    for (const auto& c : r.cells) {
        if (c.params == params) return &c;
    }
    return nullptr;
}

std::size_t complex_cells(const SearchResult& r) {
    return r.count(SpectrumClass::ComplexConvergent) + r.count(SpectrumClass::ComplexOther);
}

}  // namespace

TEST_CASE("grid parsing") {
    const auto g = parse_grid("-1/2:1/2:1/50,0:1:1/4");
    REQUIRE(g.size() == 2);
    CHECK(g[0].lo == q(-1, 2));
    CHECK(g[0].hi == q(1, 2));
    CHECK(g[0].step == q(1, 50));
    CHECK(g[1].step == q(1, 4));

    CHECK_THROWS_AS(parse_grid(""), ParseError);
    CHECK_THROWS_AS(parse_grid("0:1"), ParseError);
    CHECK_THROWS_AS(parse_grid("0:1:x"), ParseError);
    CHECK_THROWS_AS(parse_grid("0:1:1/0"), ParseError);
}

TEST_CASE("palindromic families satisfy the necessary conditions") {
    testing::RandomRationals rng(71);
    CHECK(free_parameter_count(2) == 0);
    CHECK(free_parameter_count(5) == 1);
    CHECK(free_parameter_count(6) == 2);
    CHECK(free_parameter_count(8) == 3);
    CHECK_THROWS_AS(free_parameter_count(9), DomainError);
    CHECK_THROWS_AS(free_parameter_count(1), DomainError);
    CHECK(parameter_names(6) == std::vector<std::string>{"a", "b"});
    CHECK(parameter_names(5) == std::vector<std::string>{"a"});

    for (int w = kMinSearchWidth; w <= kMaxSearchWidth; ++w) {
        for (int trial = 0; trial < 30; ++trial) {
            const Mask m = palindromic_mask(w, rng.sequence(free_parameter_count(w)));
            CHECK(m.width() == w);
            CHECK(necessary_conditions(m).pass);
            for (int i = 0; i < w; ++i) CHECK(m.coeffs()[i] == m.coeffs()[w - 1 - i]);
            CHECK(classify_symmetry(m).center_shift == 0);
        }
    }
    CHECK(palindromic_mask(6, {q(-1, 10), q(3, 10)}) == width6_mask(q(-1, 10), q(3, 10)));
    CHECK_THROWS_AS(palindromic_mask(6, {q(1)}), DomainError);
}

TEST_CASE("small widths have real spectra") {
    const SearchResult w5 = scan({5, {{q(-1), q(1), q(1, 200)}}});
    CHECK(w5.cells.size() == 401);
    CHECK(w5.count(SpectrumClass::ComplexConvergent) == 0);
    CHECK(w5.count(SpectrumClass::ComplexOther) == 0);
    CHECK(w5.count(SpectrumClass::RealConvergent) > 0);

    for (int w = 2; w <= 4; ++w) {
        const SearchResult r = scan(default_search(w));
        CHECK(complex_cells(r) == 0);
    }
}

TEST_CASE("width-6 scan") {
    const SearchResult r = scan(default_search(6));
    CHECK(r.cells.size() == 51 * 51);

    const SearchCell* a = cell_at(r, {q(-1, 10), q(3, 10)});
    REQUIRE(a != nullptr);
    CHECK(a->cls == SpectrumClass::ComplexConvergent);
    CHECK(a->negative_real_count == 2);
    CHECK(*a->norm == q(4, 5));

    std::size_t compared = 0;
    for (const auto& c : r.cells) {
        const Spectrum s = eigenvalues(build_local_matrix(palindromic_mask(6, c.params)).entries);
        double nearest = INFINITY;
        for (const auto& mu : s.eigenvalues) nearest = std::min(nearest, std::abs(mu - 1.0));
        CHECK(nearest <= 1e-9);
        if (c.cls == SpectrumClass::ComplexConvergent) CHECK(c.negative_real_count >= 2);
        if (c.degenerate) continue;
        ++compared;
        const bool complex_cls = c.cls == SpectrumClass::ComplexConvergent || c.cls == SpectrumClass::ComplexOther;
        CHECK(complex_cls == complex_region_predicate(c.params[0], c.params[1]));
    }
    CHECK(compared + r.degenerate_count == r.cells.size());

    std::size_t sum = 0;
    for (auto n : r.counts) sum += n;
    CHECK(sum == r.cells.size());

    // Witnesses: first in grid order, largest |Im|, smallest denominator.
    const auto& wit = r.witnesses.at(SpectrumClass::ComplexConvergent);
    REQUIRE(wit.size() == 3);
    CHECK(wit[0].kind == "first");
    CHECK(wit[1].kind == "max_imag");
    CHECK(wit[2].kind == "simplest");
    CHECK(params_of(r.cells[wit[2].cell]) == std::vector<Rational>{q(-1, 10), q(3, 10)});
    for (const auto& c : r.cells) {
        if (c.cls == SpectrumClass::ComplexConvergent) CHECK(c.max_imag <= r.cells[wit[1].cell].max_imag);
    }
}

TEST_CASE("filtering and tolerance") {
    const SearchSpec filtered = default_search(6);
    SearchSpec unfiltered = filtered;
    unfiltered.convergence_filter = false;
    const SearchResult f = scan(filtered);
    const SearchResult u = scan(unfiltered);
    CHECK(u.count(SpectrumClass::ComplexConvergent) >= f.count(SpectrumClass::ComplexConvergent));
    CHECK(complex_cells(u) == complex_cells(f));

    SearchSpec bad = filtered;
    bad.tol = 0;
    CHECK_THROWS_AS(scan(bad), DomainError);
}

TEST_CASE("scan guards") {
    SearchSpec s = default_search(6);
    s.cell_cap = 100;
    CHECK_THROWS_AS(scan(s), ResourceLimitError);

    CHECK_THROWS_AS(scan({6, {{q(0), q(1), q(1, 10)}}}), DomainError);
    CHECK_THROWS_AS(scan({5, {{q(1), q(0), q(1, 10)}}}), DomainError);
    CHECK_THROWS_AS(scan({5, {{q(0), q(1), q(0)}}}), DomainError);
    CHECK_THROWS_AS(scan({9, {}}), DomainError);
}

TEST_CASE("scan output is deterministic") {
    const SearchSpec spec{6, {{q(-1, 5), q(1, 5), q(1, 10)}, {q(0), q(2, 5), q(1, 10)}}};
    std::ostringstream one, two;
    write_search_csv(one, scan(spec));
    write_search_csv(two, scan(spec));
    CHECK(one.str() == two.str());

    std::istringstream lines(one.str());
    std::string header, first;
    std::getline(lines, header);
    std::getline(lines, first);
    CHECK(header == "a,b,class,max_imag");
    CHECK(first.rfind("-1/5,0,", 0) == 0);  // last parameter runs fastest
    CHECK(to_json(scan(spec)).dump() == to_json(scan(spec)).dump());
}

TEST_CASE("negativity lemma") {
    const LemmaMaximum m = negativity_lemma_check({q(-5), q(5), q(1, 1000)});
    CHECK(m.max_value <= 1e-9);
    CHECK(std::abs(to_double(m.argmax) - 1.0 / 3.0) <= 1e-3);

    CHECK(negativity_gap(q(1, 3)) == 0);
    CHECK(negativity_function(0.0) == doctest::Approx(1.0 - 2.0 * std::sqrt(2.0)));
    CHECK(negativity_function(0.0) < 0);

    testing::RandomRationals rng(72);
    for (int trial = 0; trial < 100; ++trial) {
        const Rational b = rng.next(100, 97);
        CHECK(negativity_gap(b) == 7 * (3 * b - 1) * (3 * b - 1));
    }
    CHECK_THROWS_AS(negativity_lemma_check({q(1), q(0), q(1, 10)}), DomainError);
}

TEST_CASE("width-6 C1 candidates have real spectra") {
    CHECK(c1_w6_obstruction({q(-1), q(1), q(1, 100)}));
    CHECK(w6_discriminant(q(-1, 8), q(-1, 8) + q(1, 4)) == 0);
    CHECK(w6_discriminant(q(0), q(1, 4)) == q(1, 16));

    testing::RandomRationals rng(73);
    for (int trial = 0; trial < 100; ++trial) {
        const Rational a = rng.next(100, 97);
        const Rational d = w6_discriminant(a, a + q(1, 4));
        CHECK(d == (2 * a + q(1, 4)) * (2 * a + q(1, 4)));
        CHECK_FALSE(complex_region_predicate(a, a + q(1, 4)));
    }
}

TEST_CASE("minimum width") {
    const MinWidthReport six = min_width_report(6);
    REQUIRE(six.width.has_value());
    CHECK(*six.width == 6);
    REQUIRE_FALSE(six.witnesses.empty());
    CHECK(six.witnesses.front().params == std::vector<Rational>{q(-1, 10), q(3, 10)});
    for (const auto& w : six.witnesses) CHECK(w.cls == SpectrumClass::ComplexConvergent);
    CHECK(six.scans.size() == 5);

    const MinWidthReport five = min_width_report(5);
    CHECK_FALSE(five.width.has_value());
    CHECK(five.witnesses.empty());
    CHECK(five.scans.size() == 4);

    CHECK_FALSE(min_width_report(2).width.has_value());
    CHECK_THROWS_AS(min_width_report(1), DomainError);
    CHECK_THROWS_AS(min_width_report(9), DomainError);

    const Json j = to_json(six);
    CHECK(j["min_width"] == 6);
    CHECK(j["witnesses"][0]["params"][0] == "-1/10");
}
