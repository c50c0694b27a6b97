#include "gridchroma/bounds.hpp"

#include <cmath>

namespace gridchroma {

namespace {
const double kSqrt2 = std::sqrt(2.0);
const double kSqrt3 = std::sqrt(3.0);
} // namespace

double lower_bound(const RadioParams& params) {
    if (!params.range.greater_than_sqrt2())
        throw std::domain_error("lower bound requires R > sqrt(2)");
    double r = params.range.to_double();
    double h = params.hops;
    double t = r - kSqrt2;
    return kSqrt3 / 2.0 * h * h * t * t;
}

double upper_bound(const RadioParams& params) {
    double hr = params.range.to_double() * params.hops;
    return kSqrt3 / 2.0 * hr * hr + 2.0 * hr + (hr + 2.0) * kSqrt2;
}

ColorBounds color_bounds(const RadioParams& params) {
    ColorBounds b;
    b.upper = upper_bound(params);
    b.s_h = b.upper;
    double hr = params.range.to_double() * params.hops;
    b.s_s = (hr + 1.0) * (hr + 1.0);
    b.lower = params.range.greater_than_sqrt2() ? lower_bound(params) : 0.0;
    return b;
}

GeneratorBasis near_hexagonal_basis(const RadioParams& params) {
    // B = (hR/2, hR*sqrt3/2). V2 takes strictly higher coordinates than B
    // (floor+1): with a coordinate exactly on the grid, rounding to it would
    // put a lattice point exactly hR from the origin, i.e. within h hops.
    // The x coordinate is rational and handled exactly.
    i64 hnum = checked_mul(params.hops, params.range.num());
    i64 den2 = checked_mul(2, params.range.den());
    i64 x2 = floor_div(hnum, den2) + 1;
    double by = params.range.to_double() * params.hops * kSqrt3 / 2.0;
    i64 y2 = static_cast<i64>(std::floor(by)) + 1;
    IntVec2 v2{x2, y2};
    IntVec2 v1{checked_mul(2, v2.x), 0};
    return GeneratorBasis(v1, v2);
}

GeneratorBasis near_square_basis(const RadioParams& params) {
    i64 lambda = params.range.floor_mul(params.hops) + 1;
    return GeneratorBasis({lambda, 0}, {0, lambda});
}

double asymptotic_ratio(const RadioParams& params, i64 n_c) {
    if (n_c <= 0) throw std::domain_error("color count must be positive");
    double hr = params.range.to_double() * params.hops;
    return static_cast<double>(n_c) / (kSqrt3 / 2.0 * hr * hr);
}

} // namespace gridchroma
