#include "doctest.h"

#include <cmath>

#include "hypls/moebius.hpp"

using namespace hypls;

TEST_CASE("translation matrices have the right trace, axis and direction") {
    const Geodesic up{ExtendedReal::finite(0.0), ExtendedReal::infinity()};
    const Mat2 t = translation_along(up, 1.4);
    CHECK(t.trace() == doctest::Approx(2.0 * std::cosh(0.7)).epsilon(1e-14));
    const auto ax = axis_of(t);
    CHECK(ax.from == ExtendedReal::finite(0.0));
    CHECK(ax.to.inf);

    const Geodesic g{ExtendedReal::finite(-2.0), ExtendedReal::finite(3.0)};
    const Mat2 m = translation_along(g, 0.9);
    CHECK(std::abs(m.determinant() - 1.0) < 1e-12);
    CHECK(m.trace() == doctest::Approx(2.0 * std::cosh(0.45)).epsilon(1e-12));
    const auto ax2 = axis_of(m);
    CHECK(ax2.from.value == doctest::Approx(-2.0).epsilon(1e-10));
    CHECK(ax2.to.value == doctest::Approx(3.0).epsilon(1e-10));
}

TEST_CASE("common perpendicular distance and feet") {
    // (0, inf) versus the semicircle (1, 4): distance acosh((1+4)/(4-1)).
    const Geodesic g1{ExtendedReal::finite(0.0), ExtendedReal::infinity()};
    const Geodesic g2{ExtendedReal::finite(1.0), ExtendedReal::finite(4.0)};
    const auto perp = common_perpendicular(g1, g2);
    CHECK(perp.distance == doctest::Approx(std::acosh(5.0 / 3.0)).epsilon(1e-12));
    // foot on g1 is i*sqrt(1*4) = 2i
    CHECK(perp.foot1.real() == doctest::Approx(0.0));
    CHECK(perp.foot1.imag() == doctest::Approx(2.0).epsilon(1e-12));
    // the feet realize the distance
    CHECK(point_distance(perp.foot1, perp.foot2) == doctest::Approx(perp.distance).epsilon(1e-10));
    // brute-force minimum over both geodesics agrees
    double best = 1e9;
    for (int i = -300; i <= 300; ++i) {
        const Cx a(0.0, std::exp(i * 0.01));
        for (int j = 0; j <= 300; ++j) {
            const double th = (j + 0.5) * M_PI / 301.0;
            const Cx b(2.5 + 1.5 * std::cos(th), 1.5 * std::sin(th));
            best = std::min(best, point_distance(a, b));
        }
    }
    CHECK(best == doctest::Approx(perp.distance).epsilon(1e-3));
}

TEST_CASE("align_gluing conjugates the child generator to the inverse parent") {
    const Geodesic pax{ExtendedReal::finite(-1.0), ExtendedReal::finite(2.0)};
    const Geodesic cax{ExtendedReal::finite(5.0), ExtendedReal::finite(9.0)};
    const double len = 1.1;
    const Mat2 gp = translation_along(pax, len);
    const Mat2 gc = translation_along(cax, len);
    for (double twist : {0.0, 0.8, -2.3}) {
        const Mat2 g = align_gluing(pax, Cx(0.3, 1.2), cax, Cx(7.0, 1.9), twist);
        const Mat2 conj = g * gc * inv_unimodular(g);
        const Mat2 want = inv_unimodular(gp);
        const double err = std::min((conj - want).norm(), (conj + want).norm());
        CHECK(err < 1e-10);
    }
}

TEST_CASE("twist enters the alignment as pure displacement along the parent axis") {
    const Geodesic pax{ExtendedReal::finite(0.0), ExtendedReal::infinity()};
    const Geodesic cax{ExtendedReal::finite(1.0), ExtendedReal::finite(2.0)};
    const Cx pf(0.0, 1.0), cf(1.5, 0.5);
    const Mat2 g0 = align_gluing(pax, pf, cax, cf, 0.0);
    const Mat2 g1 = align_gluing(pax, pf, cax, cf, 0.75);
    const Mat2 shift = g1 * inv_unimodular(g0);
    const Mat2 expect = translation_along(pax, 0.75);
    const double err = std::min((shift - expect).norm(), (shift + expect).norm());
    CHECK(err < 1e-10);
}
