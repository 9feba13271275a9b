#pragma once

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <cmath>
#include <limits>

#include "hypls/errors.hpp"

// Scalar hyperbolic trigonometry, cross ratios and quadrilateral moduli.
// All functions are pure, operate in binary64, and throw typed errors
// instead of returning NaN.

namespace hypls {

using Mat2 = Eigen::Matrix2d;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Length of the closed geodesic with holonomy trace `trace` (det = +1).
// Tolerates |trace| down to 2 - 1e-12, which clamps to length 0.
inline double trace_to_length(double trace) {
    double t = std::abs(trace);
    if (t < 2.0 - 1e-12)
        throw Error(Err::EllipticElement, "trace " + std::to_string(trace) + " has no geodesic length");
    if (t < 2.0) t = 2.0;
    return 2.0 * std::acosh(t / 2.0);
}

// Half-width of the maximal embedded collar around a closed geodesic
// of the given length; diverges like |log(length/2)| as length -> 0.
inline double collar_half_width(double length) {
    if (!(length > 0.0))
        throw Error(Err::NonPositiveLength, "collar width needs length > 0");
    return std::asinh(1.0 / std::sinh(length / 2.0));
}

// Distance between the boundary geodesics of lengths a and b in a
// hyperbolic pair of pants with boundary lengths (a, b, c).
inline double pants_boundary_distance(double a, double b, double c) {
    if (!(a > 0.0) || !(b > 0.0) || !(c > 0.0))
        throw Error(Err::NonPositiveLength, "pants boundary lengths must be positive");
    const double num = std::cosh(c / 2.0) + std::cosh(a / 2.0) * std::cosh(b / 2.0);
    const double den = std::sinh(a / 2.0) * std::sinh(b / 2.0);
    return std::acosh(num / den);
}

// A real number or the point at infinity on the circle boundary of H^2.
struct ExtendedReal {
    double value = 0.0;
    bool inf = false;

    static ExtendedReal finite(double v) { return {v, false}; }
    static ExtendedReal infinity() { return {0.0, true}; }

    bool operator==(const ExtendedReal& o) const {
        return inf == o.inf && (inf || value == o.value);
    }
};

// [a,b,c,d] = (a-b)(c-d) / ((a-d)(c-b)), with the limit convention when
// one of the four points is infinity.
inline double cross_ratio(ExtendedReal a, ExtendedReal b, ExtendedReal c, ExtendedReal d) {
    const ExtendedReal pts[4] = {a, b, c, d};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (pts[i] == pts[j])
                throw Error(Err::DegenerateQuadruple, "cross ratio needs pairwise distinct points");
    if (a.inf) return (c.value - d.value) / (c.value - b.value);
    if (b.inf) return (c.value - d.value) / (a.value - d.value);
    if (c.inf) return (a.value - b.value) / (a.value - d.value);
    if (d.inf) return (a.value - b.value) / (c.value - b.value);
    return (a.value - b.value) * (c.value - d.value) /
           ((a.value - d.value) * (c.value - b.value));
}

// Arithmetic-geometric mean; quadratic convergence.
inline double agm(double x, double y) {
    double a = x, b = y;
    for (int i = 0; i < 64 && std::abs(a - b) > 1e-17 * (std::abs(a) + std::abs(b)); ++i) {
        const double an = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = an;
    }
    return 0.5 * (a + b);
}

// Complete elliptic integral of the first kind, modulus k in [0, 1).
inline double elliptic_k(double k) {
    if (!(k >= 0.0 && k < 1.0))
        throw Error(Err::BadParams, "elliptic modulus must lie in [0,1)");
    return M_PI / (2.0 * agm(1.0, std::sqrt((1.0 - k) * (1.0 + k))));
}

// Conformal modulus of the half-plane quadrilateral with boundary vertices
// of cross ratio cr < 0; normalized so that cr = -1 gives modulus 1.
// Solves (1-k)^2/(4k) = -cr and returns K(k') / (2 K(k)).
inline double quad_modulus(double cr) {
    if (!(cr < 0.0))
        throw Error(Err::OrderViolation, "quadrilateral modulus needs a negative cross ratio");
    const double r = -cr;
    const double s = 1.0 + 2.0 * r;
    // k = s - sqrt(s^2-1), written to stay accurate for large r
    const double k = 1.0 / (s + std::sqrt((s - 1.0) * (s + 1.0)));
    const double kp = std::sqrt((1.0 - k) * (1.0 + k));
    return elliptic_k(kp) / (2.0 * elliptic_k(k));
}

// Ratio of the singular values of a 2x2 Jacobian: the eccentricity of the
// image of a circle under the linear map.
inline double jacobian_dilatation(const Mat2& J) {
    Eigen::JacobiSVD<Mat2> svd(J);
    const double s1 = svd.singularValues()(0);
    const double s2 = svd.singularValues()(1);
    if (!(s2 > 0.0))
        throw Error(Err::SingularJacobian, "dilatation of a singular Jacobian");
    return s1 / s2;
}

// Rescales a positive-determinant matrix to det = 1. Only for matrices
// whose determinant is well conditioned; inverses and powers of group
// elements go through inv_unimodular / mat_pow instead, since the
// computed determinant of a large-entry product is pure cancellation.
inline Mat2 normalize_det(const Mat2& m) {
    const double det = m.determinant();
    if (!(det > 0.0))
        throw Error(Err::NonHyperbolicInput, "matrix determinant must be positive");
    return m / std::sqrt(det);
}

// Inverse of a det-1 matrix: the adjugate, which needs no division.
inline Mat2 inv_unimodular(const Mat2& m) {
    Mat2 out;
    out << m(1, 1), -m(0, 1), -m(1, 0), m(0, 0);
    return out;
}

// M^k for integer k, det(M) = 1.
inline Mat2 mat_pow(const Mat2& m, long long k) {
    Mat2 base = k < 0 ? inv_unimodular(m) : m;
    unsigned long long n = k < 0 ? static_cast<unsigned long long>(-k)
                                 : static_cast<unsigned long long>(k);
    Mat2 acc = Mat2::Identity();
    while (n) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

} // namespace hypls
