#pragma once

#include "gridchroma/vec.hpp"

namespace gridchroma {

/// Ordered generator pair (u1,u2) with cached determinant d.
/// Construction sign-normalizes: if the raw determinant is negative, u1 is
/// negated, so d > 0 always holds downstream.
struct GeneratorBasis {
    IntVec2 u1;
    IntVec2 u2;
    i64 d = 0;

    GeneratorBasis() = default;
    GeneratorBasis(IntVec2 a, IntVec2 b) : u1(a), u2(b), d(det(a, b)) {
        if (d == 0) throw std::domain_error("generator vectors must be linearly independent");
        if (d < 0) {
            u1 = -u1;
            d = -d;
        }
    }

    friend bool operator==(const GeneratorBasis&, const GeneratorBasis&) = default;
};

/// Gauss reduction conditions: |u1| <= |u2| and 2|u1.u2| <= |u1|^2,
/// decided on squared norms in exact integers.
inline bool is_reduced(const GeneratorBasis& b) {
    i64 n1 = b.u1.norm_sq();
    i64 n2 = b.u2.norm_sq();
    if (n1 > n2) return false;
    i64 dp = dot(b.u1, b.u2);
    if (dp < 0) dp = -dp;
    return checked_mul(2, dp) <= n1;
}

/// Gauss (Lagrange) lattice reduction in rank 2. Returns a basis of the same
/// lattice whose vectors are the two shortest distinct lattice vectors.
inline GeneratorBasis gauss_reduce(const GeneratorBasis& b) {
    IntVec2 v1 = b.u1;
    IntVec2 v2 = b.u2;
    for (;;) {
        if (v1.norm_sq() > v2.norm_sq()) std::swap(v1, v2);
        i64 n1 = v1.norm_sq();
        // nearest integer to dot/n1 (ties toward -inf are fine: any m with
        // |dot - m*n1| <= n1/2 makes progress)
        i64 m = floor_div(checked_add(checked_mul(2, dot(v1, v2)), n1), checked_mul(2, n1));
        if (m == 0) break;
        v2 = v2 - v1 * m;
    }
    if (v1.norm_sq() > v2.norm_sq()) std::swap(v1, v2);
    return GeneratorBasis(v1, v2);
}

} // namespace gridchroma
