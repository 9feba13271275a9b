#pragma once

#include <complex>
#include <optional>
#include <utility>

#include "hypls/hyp.hpp"

// Upper-half-plane geometry for det-1 real Moebius matrices: fixed points,
// directed axes, common perpendiculars, and the alignment isometries used
// to glue pants along geodesics with a prescribed twist displacement.

namespace hypls {

using Cx = std::complex<double>;

struct Geodesic {
    ExtendedReal from; // repelling endpoint of the translation along it
    ExtendedReal to;   // attracting endpoint
};

inline Cx moebius_apply(const Mat2& m, Cx z) {
    return (m(0, 0) * z + m(0, 1)) / (m(1, 0) * z + m(1, 1));
}

inline ExtendedReal moebius_apply(const Mat2& m, ExtendedReal x) {
    if (x.inf) {
        if (m(1, 0) == 0.0) return ExtendedReal::infinity();
        return ExtendedReal::finite(m(0, 0) / m(1, 0));
    }
    const double den = m(1, 0) * x.value + m(1, 1);
    if (den == 0.0) return ExtendedReal::infinity();
    return ExtendedReal::finite((m(0, 0) * x.value + m(0, 1)) / den);
}

inline bool is_hyperbolic(const Mat2& m) { return std::abs(m.trace()) > 2.0 + 1e-13; }
inline bool is_parabolic(const Mat2& m) { return std::abs(std::abs(m.trace()) - 2.0) <= 1e-9; }

// Fixed point of a parabolic element on the boundary circle.
inline ExtendedReal parabolic_fixed_point(const Mat2& m) {
    if (std::abs(m(1, 0)) < 1e-14) return ExtendedReal::infinity();
    return ExtendedReal::finite((m(0, 0) - m(1, 1)) / (2.0 * m(1, 0)));
}

// Directed axis (repelling -> attracting) of a hyperbolic element.
inline Geodesic axis_of(const Mat2& m) {
    const double tr = m.trace();
    if (!(std::abs(tr) > 2.0))
        throw Error(Err::EllipticElement, "axis of a non-hyperbolic element");
    // sqrt(tr^2 - 4) without overflowing tr^2
    const double disc =
        std::abs(tr) > 1e150 ? std::abs(tr) : std::sqrt((tr - 2.0) * (tr + 2.0));
    const double c = m(1, 0);
    if (std::abs(c) < 1e-300) {
        // Fixed points: infinity and b/(d-a).
        ExtendedReal finite_fp =
            std::abs(m(1, 1) - m(0, 0)) < 1e-300
                ? ExtendedReal::finite(0.0)
                : ExtendedReal::finite(m(0, 1) / (m(1, 1) - m(0, 0)));
        // |a| > |d| means z -> (a/d) z near infinity expands: infinity attracts.
        if (std::abs(m(0, 0)) > std::abs(m(1, 1)))
            return {finite_fp, ExtendedReal::infinity()};
        return {ExtendedReal::infinity(), finite_fp};
    }
    // Roots of c z^2 + (d-a) z - b = 0 via the cancellation-free form.
    const double B = m(1, 1) - m(0, 0);
    const double q = -0.5 * (B + std::copysign(disc, B));
    const double z1 = q / c;
    const double z2 = -m(0, 1) / q; // product of roots is -b/c
    // Attracting where |derivative| = 1/(cz+d)^2 < 1.
    const double d1 = std::abs(c * z1 + m(1, 1));
    if (d1 > 1.0) return {ExtendedReal::finite(z2), ExtendedReal::finite(z1)};
    return {ExtendedReal::finite(z1), ExtendedReal::finite(z2)};
}

// Hyperbolic translation of length len along the directed geodesic.
inline Mat2 translation_along(const Geodesic& g, double len) {
    const double u = len / 2.0, eu = std::exp(u), em = std::exp(-u);
    Mat2 m;
    if (g.from.inf) { // infinity repels, q attracts
        const double q = g.to.value;
        m << em, q * (eu - em), 0.0, eu;
        return m;
    }
    if (g.to.inf) { // p repels, infinity attracts
        const double p = g.from.value;
        m << eu, p * (em - eu), 0.0, em;
        return m;
    }
    const double p = g.from.value, q = g.to.value;
    m << q * eu - p * em, p * q * (em - eu), eu - em, q * em - p * eu;
    return m / (q - p); // det (q-p)^2 / (q-p)^2 = 1, no cancellation
}

// Det-1 matrix sending from -> 0, to -> infinity, preserving H^2.
inline Mat2 to_standard_two_point(const Geodesic& g) {
    Mat2 m;
    if (g.from.inf) {
        m << 0.0, 1.0, -1.0, g.to.value;
        return m;
    }
    if (g.to.inf) {
        m << 1.0, -g.from.value, 0.0, 1.0;
        return m;
    }
    const double p = g.from.value, q = g.to.value;
    const double c = p > q ? 1.0 : -1.0; // keeps the determinant positive
    m << c, -c * p, 1.0, -q;
    return normalize_det(m);
}

// Det-1 matrix sending from -> 0, to -> infinity and the interior point
// foot -> i.
inline Mat2 to_standard(const Geodesic& g, Cx foot) {
    const Mat2 s2 = to_standard_two_point(g);
    const Cx w = moebius_apply(s2, foot);
    const double t = w.imag();
    if (!(t > 0.0))
        throw Error(Err::NonHyperbolicInput, "foot must lie in the upper half plane");
    Mat2 d;
    d << 1.0 / std::sqrt(t), 0.0, 0.0, std::sqrt(t);
    return d * s2;
}

struct Perpendicular {
    Cx foot1;        // on g1
    Cx foot2;        // on g2
    double distance; // between the geodesics
};

// Common perpendicular of two disjoint geodesics.
inline Perpendicular common_perpendicular(const Geodesic& g1, const Geodesic& g2) {
    const Mat2 s = to_standard_two_point(g1);
    const ExtendedReal pe = moebius_apply(s, g2.from);
    const ExtendedReal qe = moebius_apply(s, g2.to);
    if (pe.inf || qe.inf)
        throw Error(Err::NonHyperbolicInput, "geodesics share an endpoint at infinity");
    const double p = pe.value, q = qe.value;
    if (!(p * q > 0.0))
        throw Error(Err::NonHyperbolicInput, "geodesics cross or touch; no common perpendicular");
    const double r = std::sqrt(p * q);
    const double mctr = 0.5 * (p + q), rho = 0.5 * std::abs(q - p);
    // Intersection of |z| = r with the semicircle of g2's image.
    const double x = (mctr * mctr + r * r - rho * rho) / (2.0 * mctr);
    const double y = std::sqrt(std::max(0.0, r * r - x * x));
    const Mat2 sinv = inv_unimodular(s);
    Perpendicular out;
    out.foot1 = moebius_apply(sinv, Cx(0.0, r));
    out.foot2 = moebius_apply(sinv, Cx(x, y));
    out.distance = std::acosh(std::abs(mctr) / rho);
    return out;
}

inline double axis_distance(const Geodesic& g1, const Geodesic& g2) {
    return common_perpendicular(g1, g2).distance;
}

// Foot on `axis` of the perpendicular dropped from a boundary point.
inline Cx foot_from_boundary_point(const Geodesic& axis, ExtendedReal bp) {
    const Mat2 s = to_standard_two_point(axis);
    const ExtendedReal w = moebius_apply(s, bp);
    if (w.inf)
        throw Error(Err::NonHyperbolicInput, "boundary point at an axis endpoint");
    const double r = std::abs(w.value);
    if (!(r > 0.0))
        throw Error(Err::NonHyperbolicInput, "boundary point at an axis endpoint");
    const Mat2 sinv = inv_unimodular(s);
    return moebius_apply(sinv, Cx(0.0, r));
}

// Hyperbolic distance between interior points.
inline double point_distance(Cx z, Cx w) {
    const double num = std::norm(z - w);
    return std::acosh(1.0 + num / (2.0 * z.imag() * w.imag()));
}

// Orientation-preserving isometry G with G(child axis) = parent axis
// direction-reversed, child foot landing at the parent foot shifted by
// `twist` along the parent axis. Satisfies G g_c G^{-1} = g_p^{-1} when
// both elements translate by the same length along their axes.
inline Mat2 align_gluing(const Geodesic& parent_axis, Cx parent_foot,
                         const Geodesic& child_axis, Cx child_foot, double twist) {
    const Mat2 sp = to_standard(parent_axis, parent_foot);
    const Mat2 sc = to_standard(child_axis, child_foot);
    Mat2 flip;
    flip << 0.0, -1.0, 1.0, 0.0; // z -> -1/z : reverses (0, infinity), fixes i
    Mat2 tw;
    const double u = twist / 2.0;
    tw << std::exp(u), 0.0, 0.0, std::exp(-u);
    return inv_unimodular(sp) * tw * flip * sc;
}

} // namespace hypls
