#pragma once

#include "gridchroma/basis.hpp"
#include "gridchroma/hops.hpp"

namespace gridchroma {

/// Analytic bounds on the optimal color count. Diagnostics only: these are
/// evaluated in double precision and never accept or reject a coloring.
struct ColorBounds {
    double lower = 0.0;  // defined for R > sqrt2
    double upper = 0.0;
    double s_h = 0.0;    // upper-bound quantity limiting det(u1,u2)
    double s_s = 0.0;    // (hR+1)^2, small-R replacement
};

/// (sqrt3/2) * h^2 * (R - sqrt2)^2. Requires R > sqrt2.
double lower_bound(const RadioParams& params);

/// (sqrt3/2) * h^2 R^2 + 2hR + (hR+2)*sqrt2.
double upper_bound(const RadioParams& params);

ColorBounds color_bounds(const RadioParams& params);

/// Near-hexagonal construction: B = (hR cos(pi/3), hR sin(pi/3)),
/// V2 = componentwise ceil(B), V1 = (2*x2, 0).
GeneratorBasis near_hexagonal_basis(const RadioParams& params);

/// Near-square construction: lambda = floor(hR)+1, basis
/// ((lambda,0),(0,lambda)). Always valid.
GeneratorBasis near_square_basis(const RadioParams& params);

/// n_c / ((sqrt3/2) h^2 R^2): tends to 1 + O(1/R) for the optimum.
double asymptotic_ratio(const RadioParams& params, i64 n_c);

} // namespace gridchroma
