#pragma once

#include <map>
#include <optional>
#include <vector>

#include "hypls/curve.hpp"
#include "hypls/moebius.hpp"
#include "hypls/surface.hpp"

// Discrete faithful PSL(2,R) representations of finite subsurfaces,
// assembled pants-by-pants from Fenchel-Nielsen data, and exact geodesic
// lengths of supported curves via traces.

namespace hypls {

enum class LengthMethod { ExactHolonomy, CollarBounds };

struct LengthResult {
    double value = 0.0;
    LengthMethod method = LengthMethod::ExactHolonomy;
    double lo = 0.0;
    double hi = 0.0;
    bool conditioning_warning = false; // |trace| above 1e12
};

struct Representation {
    FiniteSurface fs;
    // Placed generators per cell (same order as fs.cells); the slot-order
    // product gen[0]*gen[1]*gen[2] is the identity in each cell.
    std::vector<std::array<Mat2, 3>> gens;
    // Internal gluing curves: the designated primary side first.
    std::map<CurveId, std::array<std::pair<int, int>, 2>> internal;
    // Conjugators for self-gluings and non-tree gluings.
    std::map<CurveId, Mat2> handles;

    const Mat2& curve_generator(CurveId c) const;
    bool has_internal(CurveId c) const { return internal.count(c) != 0; }
};

// Builds the representation: spanning-tree gluing with twist displacements
// along the glued axes; extra gluings become conjugator generators.
// Boundary and gluing generators carry |trace| = 2 cosh(length/2); cusps
// are parabolic with |trace| = 2.
Representation build_representation(const FiniteSurface& fs);
// Same, leading each cell with the given curve's slot when possible so
// that its generator is diagonal and its trace exact.
Representation build_representation(const FiniteSurface& fs, std::optional<CurveId> prefer);

// Holonomy matrix of a supported curve in the representation.
Mat2 word_matrix(const Representation& rep, const Curve& c);

// Exact geodesic length via the holonomy trace. Extracts the radius-1
// finite subsurface around the curve's core; one automatic radius retry.
LengthResult geodesic_length(const Surface& s, const Curve& c);

// Two-sided bounds: collar crossings below, the twist inequality above.
LengthResult length_bounds(const Surface& s, const Curve& c);

struct CollarDecomposition {
    double crossing_term = 0.0; // sum of i(c,C) |log l(C)| over the short set
    double remainder = 0.0;     // exact length minus crossing term
};

CollarDecomposition collar_decomposition(const Surface& s, const Curve& c,
                                         const std::vector<CurveId>& short_set);

// Global sign s such that twisting the structure by s*k*l(beta) matches
// twisting the curve by k. Calibrated once on a reference four-holed
// sphere and cached.
int calibrated_twist_sign();

} // namespace hypls
