#include "support.hpp"

#include "subdiv/catalog.hpp"
#include "subdiv/errors.hpp"
#include "subdiv/export.hpp"
#include "subdiv/refinement.hpp"

#include <doctest.h>

#include <sstream>

using namespace subdiv;
using testing::q;

namespace {

using Polygon = ControlPolygon<Rational>;

Polygon polygon(int first, const std::vector<Rational>& v) { return make_polygon<Rational>(first, testing::to_vector(v)); }

Rational total(const Polygon& p) { return p.values.sum(); }

Polygon combine(const Rational& alpha, const Polygon& p, const Rational& beta, const Polygon& r) {
    const int lo = std::min(p.first_index, r.first_index);
    const int hi = std::max(p.last_index(), r.last_index());
    RationalVector v(hi - lo + 1);
    for (int i = lo; i <= hi; ++i) v[i - lo] = alpha * p.at(i) + beta * r.at(i);
    return make_polygon<Rational>(lo, v, p.level);
}

bool same_sequence(const Polygon& p, const Polygon& r) {
    return p.first_index == r.first_index && p.values == r.values;
}

/// max(0, 1 - |t|) at t = i / 2^level, exactly.
Rational tent(int i, int level) {
    const Rational t = abs(Rational(i) / Rational(Integer(1) << level));
    return t >= 1 ? Rational(0) : 1 - t;
}

}  // namespace

TEST_CASE("delta refines to the mask") {
    for (const auto& r : Catalog::standard().records()) {
        const Polygon p = refine_once(delta_polygon<Rational>(), r.mask);
        CHECK(p.level == 1);
        CHECK(p.first_index == r.mask.support_min());
        CHECK(p.values == r.mask.coeffs());
    }
    const Polygon c = refine_once(delta_polygon<Rational>(), catalog_get("c").mask);
    CHECK(testing::to_std(c.values) == std::vector<Rational>{q(1, 2), q(1), q(1, 2)});
}

TEST_CASE("constants are reproduced in the interior") {
    const Mask& a = catalog_get("a").mask;
    const int n = 12;
    const Polygon ones = polygon(0, std::vector<Rational>(n, q(1)));
    const Polygon p = refine_once(ones, a);
    // Indices m whose rule sees only stored points.
    for (int m = a.support_max(); m <= 2 * (n - 1) + a.support_min(); ++m) CHECK(p.at(m) == 1);
}

TEST_CASE("two levels match the dilated symbol product") {
    const Mask& a = catalog_get("a").mask;
    const auto coeffs = testing::to_std(a.coeffs());
    const auto expected = testing::convolve(coeffs, testing::dilate(coeffs, 2));
    const Polygon p = refine_k(delta_polygon<Rational>(), a, 2);
    CHECK(p.first_index == 3 * a.support_min());
    CHECK(testing::to_std(p.values) == expected);

    // Three levels for the cubic B-spline.
    const auto d = testing::to_std(catalog_get("d").mask.coeffs());
    const auto d3 = testing::convolve(testing::convolve(d, testing::dilate(d, 2)), testing::dilate(d, 4));
    CHECK(testing::to_std(refine_k(delta_polygon<Rational>(), catalog_get("d").mask, 3).values) == d3);
}

TEST_CASE("support growth") {
    const Mask& a = catalog_get("a").mask;
    CHECK(refine_k(delta_polygon<Rational>(), a, 1).values.size() == 6);
    for (const auto& r : Catalog::standard().records()) {
        const int w = r.mask.width();
        for (int k = 0; k <= 6; ++k) {
            const Polygon p = refine_k(delta_polygon<Rational>(), r.mask, k);
            CHECK(p.values.size() == (w - 1) * ((1 << k) - 1) + 1);
            // Locality: nonzeros inside [min(sigma)(2^k - 1), max(sigma)(2^k - 1)].
            CHECK(p.first_index >= r.mask.support_min() * ((1 << k) - 1));
            CHECK(p.last_index() <= r.mask.support_max() * ((1 << k) - 1));
        }
    }
}

TEST_CASE("sum doubles per level") {
    for (const auto& r : Catalog::standard().records()) {
        Polygon p = delta_polygon<Rational>();
        for (int k = 1; k <= 8; ++k) {
            const Polygon next = refine_once(p, r.mask);
            CHECK(total(next) == 2 * total(p));
            CHECK(total(next) == Rational(1 << k));
            p = next;
        }
    }
}

TEST_CASE("refinement is linear and translation covariant") {
    testing::RandomRationals rng(51);
    for (int trial = 0; trial < 100; ++trial) {
        const Mask m(rng.integer(-3, 1), testing::to_vector(rng.trimmed_sequence(rng.integer(1, 6))));
        const Polygon p = polygon(rng.integer(-4, 4), rng.trimmed_sequence(rng.integer(1, 6)));
        const Polygon r = polygon(rng.integer(-4, 4), rng.trimmed_sequence(rng.integer(1, 6)));
        const Rational alpha = rng.next(), beta = rng.next();

        const Polygon lhs = refine_once(combine(alpha, p, beta, r), m);
        const Polygon rhs = combine(alpha, refine_once(p, m), beta, refine_once(r, m));
        CHECK(same_sequence(lhs, rhs));

        const int s = rng.integer(-5, 5);
        Polygon shifted = p;
        shifted.first_index += s;
        const Polygon a = refine_once(p, m);
        const Polygon b = refine_once(shifted, m);
        CHECK(b.first_index == a.first_index + 2 * s);
        CHECK(b.values == a.values);
    }
}

TEST_CASE("double refinement follows the exact one") {
    const Mask& a = catalog_get("a").mask;
    const auto exact = refine_k(delta_polygon<Rational>(), a, 8);
    const auto approx = refine_k(delta_polygon<double>(), a, 8);
    REQUIRE(exact.values.size() == approx.values.size());
    CHECK(exact.first_index == approx.first_index);
    for (Eigen::Index i = 0; i < exact.values.size(); ++i) {
        CHECK(std::abs(to_double(exact.values[i]) - approx.values[i]) <= 1e-14);
    }
}

TEST_CASE("polygon canonical form and guards") {
    const Polygon p = polygon(-2, {q(0), q(0), q(3), q(0)});
    CHECK(p.first_index == 0);
    CHECK(p.values.size() == 1);
    CHECK(p.at(0) == 3);
    CHECK(p.at(5) == 0);

    const Polygon zero = polygon(7, {q(0), q(0)});
    CHECK(zero.first_index == 0);
    CHECK(zero.values.size() == 1);
    CHECK(refine_once(zero, catalog_get("a").mask).values == RationalVector::Zero(1));
    CHECK(refine_once(p, Mask()).values == RationalVector::Zero(1));

    CHECK_THROWS_AS(refine_k(p, catalog_get("a").mask, -1), DomainError);
    CHECK_THROWS_AS(refine_k(p, catalog_get("a").mask, 12, 1000), ResourceLimitError);
    CHECK_NOTHROW(refine_k(p, catalog_get("a").mask, 6, 1000));
    CHECK_THROWS_AS(basis_polygon<Rational>(catalog_get("a").mask, -1), DomainError);
}

TEST_CASE("parameterisation") {
    const SampledCurve one = parameterize(delta_polygon<Rational>());
    REQUIRE(one.points.size() == 1);
    CHECK(one.points[0].t == 0.0);
    CHECK(one.points[0].y == 1.0);

    const auto primal = make_polygon<Rational>(-1, testing::to_vector({q(1), q(2), q(3)}), 1);
    const SampledCurve c = parameterize(primal);
    REQUIRE(c.points.size() == 3);
    CHECK(c.points[0].t == -0.5);
    CHECK(c.points[1].t == 0.0);
    CHECK(c.points[2].t == 0.5);

    const auto dual = make_polygon<Rational>(0, testing::to_vector({q(1), q(2)}), 1, MeshKind::Dual);
    CHECK(parameterize(dual).points[0].t == 0.25);
    CHECK(mesh_parameter(3, 2, MeshKind::Dual) == 0.875);

    // Window sampling zero-fills and keeps the mesh.
    const SampledCurve w = parameterize(primal, -1.0, 1.0);
    REQUIRE(w.points.size() == 5);
    CHECK(w.points.front().t == -1.0);
    CHECK(w.points.front().y == 0.0);
    CHECK(w.points[3].y == 3.0);
}

TEST_CASE("basis experiment") {
    SUBCASE("no refinement keeps the test sequence") {
        const SampledCurve c = basis_experiment(catalog_get("a").mask, 0);
        REQUIRE(c.points.size() == 9);
        for (int i = 0; i < 9; ++i) {
            CHECK(c.points[static_cast<std::size_t>(i)].t == i - 4);
            CHECK(c.points[static_cast<std::size_t>(i)].y == (i == 4 ? 1.0 : 0.0));
        }
    }
    SUBCASE("mesh count") {
        CHECK(basis_experiment(catalog_get("a").mask, 10).points.size() == 8 * 1024 + 1);
        CHECK(basis_experiment(catalog_get("c").mask, 3).points.size() == 65);
    }
    SUBCASE("linear scheme gives the tent exactly") {
        const int k = 10;
        const Polygon p = basis_polygon<Rational>(catalog_get("c").mask, k);
        for (int i = -4 * (1 << k); i <= 4 * (1 << k); ++i) {
            if (p.at(i) != tent(i, k)) {
                FAIL("tent mismatch at index " << i);
            }
        }
    }
    SUBCASE("cubic B-spline") {
        const int k = 10;
        const SampledCurve c = basis_experiment(catalog_get("d").mask, k);
        const auto& centre = c.points[4 * 1024];
        CHECK(centre.t == 0.0);
        CHECK(std::abs(centre.y - 2.0 / 3.0) <= 1e-3);
        double worst = 0.0;
        for (const auto& pt : c.points) worst = std::max(worst, std::abs(pt.y - testing::cubic_bspline(pt.t)));
        CHECK(worst <= 1e-5);
    }
}

TEST_CASE("curve export") {
    CHECK(format_number(-0.0) == "0");
    CHECK(format_number(2.0 / 3.0) == "0.666666666667");
    CHECK(format_number(1e-20) == "1e-20");
    CHECK(format_number(-0.125) == "-0.125");

    SampledCurve c;
    c.points = {{-1.0, 0.0}, {0.0, 1.0}, {1.0, -0.5}};
    std::ostringstream csv;
    write_curve_csv(csv, c);
    CHECK(csv.str() == "t,value\n-1,0\n0,1\n1,-0.5\n");

    std::ostringstream svg;
    write_curve_svg(svg, c);
    const std::string s = svg.str();
    CHECK(s.find("viewBox=\"-1 -1 2 1.5\"") != std::string::npos);
    CHECK(s.find("points=\"-1,0 0,-1 1,0.5\"") != std::string::npos);
    CHECK(s.find("<polyline") == s.rfind("<polyline"));
    CHECK(s.find('\r') == std::string::npos);

    std::ostringstream empty;
    write_curve_svg(empty, SampledCurve{});
    CHECK(empty.str().find("viewBox=\"0 -1 1 1\"") != std::string::npos);
}
