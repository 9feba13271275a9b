#include "doctest.h"

#include <cmath>
#include <random>

#include "hypls/hyp.hpp"
#include "oracles.hpp"

using namespace hypls;

TEST_CASE("trace_to_length basics") {
    CHECK(trace_to_length(2.0) == 0.0);
    CHECK(trace_to_length(-2.0) == 0.0);
    CHECK(trace_to_length(2.0 * std::cosh(0.5)) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(trace_to_length(1.9), Error);
    // Just inside the tolerance band clamps to zero.
    CHECK(trace_to_length(2.0 - 5e-13) == 0.0);
}

TEST_CASE("trace_to_length round trip") {
    std::mt19937_64 rng(12345);
    std::uniform_real_distribution<double> uexp(std::log(1e-4), std::log(50.0));
    for (int i = 0; i < 100; ++i) {
        const double l = std::exp(uexp(rng));
        const double back = trace_to_length(2.0 * std::cosh(l / 2.0));
        // The trace quantizes near 2, so the roundtrip error for small l is
        // limited by ulp(2)/ (l^2/4); below ~2e-3 only that model bound holds.
        const double tol = std::max(1e-10, 8.0 * 2.3e-16 / (l * l));
        CHECK(std::abs(back - l) / l <= tol);
    }
}

TEST_CASE("collar_half_width values and monotonicity") {
    CHECK(collar_half_width(2.0 * std::asinh(1.0)) ==
          doctest::Approx(std::asinh(1.0)).epsilon(1e-12));
    CHECK(collar_half_width(1.0) ==
          doctest::Approx(std::asinh(1.0 / std::sinh(0.5))).epsilon(1e-12));
    // width ~ |log(length/2)| as length -> 0
    CHECK(collar_half_width(1e-6) > std::abs(std::log(1e-6)) - 1.0);
    CHECK_THROWS_AS(collar_half_width(0.0), Error);
    CHECK_THROWS_AS(collar_half_width(-1.0), Error);

    double prev = kInf;
    for (int i = 0; i < 1000; ++i) {
        const double l = std::exp(std::log(1e-6) + (std::log(20.0) - std::log(1e-6)) * i / 999.0);
        const double w = collar_half_width(l);
        CHECK(w < prev);
        prev = w;
    }
}

TEST_CASE("pants_boundary_distance against the hexagon oracle") {
    const double s = 2.0 * std::acosh(2.0);
    CHECK(pants_boundary_distance(s, s, s) ==
          doctest::Approx(oracles::pants_boundary_distance(s, s, s)).epsilon(1e-10));
    CHECK(pants_boundary_distance(1.0, 1.0, 1.0) ==
          doctest::Approx(oracles::pants_boundary_distance(1.0, 1.0, 1.0)).epsilon(1e-10));
    const double expect111 =
        std::acosh((std::cosh(0.5) + std::cosh(0.5) * std::cosh(0.5)) /
                   (std::sinh(0.5) * std::sinh(0.5)));
    CHECK(pants_boundary_distance(1.0, 1.0, 1.0) == doctest::Approx(expect111).epsilon(1e-12));
    // symmetric in the first two arguments
    CHECK(pants_boundary_distance(0.8, 1.7, 1.1) ==
          doctest::Approx(pants_boundary_distance(1.7, 0.8, 1.1)).epsilon(1e-12));
    CHECK(pants_boundary_distance(0.8, 1.7, 1.1) ==
          doctest::Approx(oracles::pants_boundary_distance(0.8, 1.7, 1.1)).epsilon(1e-9));
    CHECK_THROWS_AS(pants_boundary_distance(0.0, 1.0, 1.0), Error);
}

TEST_CASE("cross_ratio") {
    auto fin = ExtendedReal::finite;
    const auto inf = ExtendedReal::infinity();
    CHECK(cross_ratio(fin(-1), fin(0), fin(1), inf) == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(cross_ratio(fin(-0.5), fin(0), fin(2), inf) == doctest::Approx(-0.25).epsilon(1e-15));
    CHECK_THROWS_AS(cross_ratio(fin(1), fin(1), fin(2), fin(3)), Error);
    CHECK_THROWS_AS(cross_ratio(inf, fin(1), fin(2), inf), Error);

    // Moebius invariance under z -> 2z + 3 and under random maps.
    const double base = cross_ratio(fin(-1.3), fin(0.2), fin(1.7), fin(4.0));
    CHECK(cross_ratio(fin(2 * -1.3 + 3), fin(2 * 0.2 + 3), fin(2 * 1.7 + 3), fin(2 * 4.0 + 3)) ==
          doctest::Approx(base).epsilon(1e-12));
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int t = 0; t < 100; ++t) {
        double a = u(rng), b = u(rng), c = u(rng), d = u(rng);
        if (std::abs(a * d - b * c) < 1e-3) continue;
        auto mob = [&](double z) { return (a * z + b) / (c * z + d); };
        double pts[4] = {-1.3, 0.2, 1.7, 4.0};
        bool pole = false;
        for (double z : pts)
            if (std::abs(c * z + d) < 1e-3) pole = true;
        if (pole) continue;
        const double got =
            cross_ratio(fin(mob(pts[0])), fin(mob(pts[1])), fin(mob(pts[2])), fin(mob(pts[3])));
        CHECK(std::abs(got - base) <= 1e-9 * std::abs(base));
    }
}

TEST_CASE("quad_modulus normalization and decay") {
    CHECK(quad_modulus(-1.0) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(quad_modulus(-1e-6) < 0.2);
    CHECK_THROWS_AS(quad_modulus(0.0), Error);
    CHECK_THROWS_AS(quad_modulus(0.5), Error);

    // strictly increasing in |cr| on a log grid
    double prev = 0.0;
    for (int i = 0; i <= 200; ++i) {
        const double cr = -std::exp(std::log(1e-6) + (std::log(1e3) - std::log(1e-6)) * i / 200.0);
        const double m = quad_modulus(cr);
        CHECK(m > prev);
        prev = m;
    }
}

TEST_CASE("quad_modulus elliptic reciprocity against quadrature") {
    // cr(k) = -(1-k)^2/(4k); modulus(cr(k)) * modulus(cr(k')) = 1/4.
    for (double k : {0.2, 0.5, 0.75}) {
        const double kp = std::sqrt(1.0 - k * k);
        auto cr = [](double kk) { return -(1.0 - kk) * (1.0 - kk) / (4.0 * kk); };
        CHECK(quad_modulus(cr(k)) * quad_modulus(cr(kp)) == doctest::Approx(0.25).epsilon(1e-10));
        // AGM agrees with plain quadrature
        CHECK(elliptic_k(k) == doctest::Approx(oracles::elliptic_k_quadrature(k)).epsilon(1e-10));
    }
}

TEST_CASE("jacobian_dilatation") {
    CHECK(jacobian_dilatation(Mat2::Identity()) == doctest::Approx(1.0));
    Mat2 d;
    d << 2, 0, 0, 1;
    CHECK(jacobian_dilatation(d) == doctest::Approx(2.0).epsilon(1e-12));
    Mat2 shear;
    shear << 1, 1, 0, 1;
    CHECK(jacobian_dilatation(shear) == doctest::Approx(2.618033988749895).epsilon(1e-12));
    Mat2 sing;
    sing << 1, 1, 1, 1;
    CHECK_THROWS_AS(jacobian_dilatation(sing), Error);

    // invariant under rotations on both sides
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int t = 0; t < 100; ++t) {
        Mat2 j;
        j << u(rng), u(rng), u(rng), u(rng);
        if (std::abs(j.determinant()) < 1e-3) continue;
        const double want = jacobian_dilatation(j);
        Eigen::Rotation2D<double> r1(u(rng)), r2(u(rng));
        const Mat2 rot = r1.toRotationMatrix() * j * r2.toRotationMatrix();
        CHECK(std::abs(jacobian_dilatation(rot) - want) <= 1e-9 * want);
    }
}
