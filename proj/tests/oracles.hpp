#pragma once

// Independent numerical oracles used to freeze expected values before the
// library paths they check were written. Everything here works in the
// hyperboloid model with Minkowski linear algebra, or by plain quadrature,
// so no code is shared with the upper-half-plane implementation.

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

namespace oracles {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

inline double mdot(const Vec3& a, const Vec3& b) {
    return a(0) * b(0) + a(1) * b(1) - a(2) * b(2);
}

inline Vec3 mcross(const Vec3& a, const Vec3& b) {
    return Vec3(a(1) * b(2) - a(2) * b(1), a(2) * b(0) - a(0) * b(2),
                -(a(0) * b(1) - a(1) * b(0)));
}

struct Frame {
    Vec3 p; // point on the hyperboloid, <p,p> = -1
    Vec3 v; // unit spacelike direction, <v,v> = 1, <p,v> = 0
};

inline Frame step(const Frame& f, double len) {
    return {std::cosh(len) * f.p + std::sinh(len) * f.v,
            std::sinh(len) * f.p + std::cosh(len) * f.v};
}

inline Frame turn_left(const Frame& f) {
    Vec3 w = mcross(f.p, f.v);
    w /= std::sqrt(mdot(w, w));
    return {f.p, w};
}

// Unit spacelike normal of the geodesic through the frame.
inline Vec3 line_normal(const Frame& f) {
    Vec3 n = mcross(f.p, f.v);
    return n / std::sqrt(mdot(n, n));
}

// Distance between disjoint geodesics given by unit normals.
inline double line_distance(const Vec3& n1, const Vec3& n2) {
    const double c = std::abs(mdot(n1, n2));
    if (c <= 1.0) return 0.0; // crossing or touching
    return std::acosh(c);
}

// Lorentz translation by len along the geodesic through the frame.
inline Mat3 translation(const Frame& f, double len) {
    const Vec3 n = line_normal(f);
    Mat3 frame;
    frame.col(0) = f.v;
    frame.col(1) = n;
    frame.col(2) = f.p;
    Mat3 eta = Mat3::Identity();
    eta(2, 2) = -1.0;
    const Mat3 finv = eta * frame.transpose() * eta;
    Mat3 boost = Mat3::Identity();
    boost(0, 0) = std::cosh(len);
    boost(0, 2) = std::sinh(len);
    boost(2, 0) = std::sinh(len);
    boost(2, 2) = std::cosh(len);
    return frame * boost * finv;
}

struct HexagonWalk {
    Frame start;    // on the boundary-1 side
    Frame side_b2;  // frame at the start of the boundary-2 side
    Vec3 n_sideA;   // line containing the fourth side
    Vec3 n_sideB;   // line containing the sixth side
};

// Walks three known sides (u1, x, u2) of a right-angled hexagon with
// alternating sides (u1, x, u2, ?, u3, ?).
inline HexagonWalk walk_hexagon(double u1, double x, double u2) {
    HexagonWalk w;
    Frame f{Vec3(0, 0, 1), Vec3(1, 0, 0)};
    w.start = f;
    w.n_sideB = Vec3(-1, 0, 0); // line through start, perpendicular to v
    f = turn_left(step(f, u1));
    f = turn_left(step(f, x));
    w.side_b2 = f;
    f = turn_left(step(f, u2));
    w.n_sideA = line_normal(f);
    return w;
}

// Distance between boundary geodesics 1 and 2 of a hyperbolic pair of
// pants with boundary lengths (l1, l2, l3), found by solving the
// right-angled hexagon numerically: bisect the width until the remaining
// two sides admit a common perpendicular of length l3/2.
inline double pants_boundary_distance(double l1, double l2, double l3) {
    const double u1 = l1 / 2, u2 = l2 / 2, u3 = l3 / 2;
    auto defect = [&](double x) {
        const auto w = walk_hexagon(u1, x, u2);
        return line_distance(w.n_sideA, w.n_sideB) - u3;
    };
    double lo = 1e-8, hi = 1e-8;
    while (defect(hi) < 0.0) {
        hi *= 2.0;
        if (hi > 1e4) throw std::runtime_error("hexagon oracle: no bracket");
    }
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (defect(mid) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

// Length of the shortest geodesic arc from boundary 1 back to boundary 1
// wrapping boundary 2, in the pants (l1, l2, l3): the perpendicular
// between the boundary-1 line and its translate along boundary 2.
inline double pants_self_seam(double l1, double l2, double l3) {
    const double x = pants_boundary_distance(l1, l2, l3);
    const auto w = walk_hexagon(l1 / 2, x, l2 / 2);
    const Vec3 n1 = line_normal(w.start);
    const Mat3 t = translation(w.side_b2, l2);
    const Vec3 n1t = t * n1;
    return line_distance(n1, n1t);
}

// Complete elliptic integral of the first kind by Simpson quadrature.
inline double elliptic_k_quadrature(double k, int n = 20000) {
    const double h = (M_PI / 2.0) / n;
    double sum = 0.0;
    auto f = [&](double th) {
        const double s = std::sin(th);
        return 1.0 / std::sqrt(1.0 - k * k * s * s);
    };
    for (int i = 0; i < n; ++i) {
        const double a = i * h;
        sum += f(a) + 4.0 * f(a + h / 2) + f(a + h);
    }
    return sum * h / 6.0;
}

} // namespace oracles
