#include "gridchroma/validity.hpp"

#include <cmath>

namespace gridchroma {

namespace {

// w is on the lattice of the basis iff both barycentric coordinates
// det(w,u2)/d and det(u1,w)/d are integers.
bool on_lattice(const IntVec2& w, const GeneratorBasis& basis) {
    return det(w, basis.u2) % basis.d == 0 && det(basis.u1, w) % basis.d == 0;
}

} // namespace

ValidityVerdict check_vc1(const GeneratorBasis& basis, const RadioParams& params, const HopField& field) {
    (void)params;
    for (const IntVec2& w : field.reachable()) {
        if (w.is_zero()) continue;
        if (on_lattice(w, basis))
            return {false, ValidityMethod::VC1, w};
    }
    return {true, ValidityMethod::VC1, std::nullopt};
}

i64 mu_bound(const RadioParams& params) {
    if (!params.range.greater_than_sqrt2())
        throw std::domain_error("VC2 requires R > sqrt(2)");
    double r = params.range.to_double();
    double mu = 2.0 * std::sqrt(3.0) * r / (3.0 * (r - std::sqrt(2.0)));
    // outward: floor+1 always exceeds mu, also when mu is integral
    return static_cast<i64>(std::floor(mu)) + 1;
}

ValidityVerdict check_vc2(const GeneratorBasis& basis, const RadioParams& params, const HopField& field) {
    if (!params.range.greater_than_sqrt2())
        throw std::domain_error("VC2 requires R > sqrt(2)");
    if (!is_reduced(basis))
        throw std::domain_error("VC2 requires a reduced basis");

    i64 m = mu_bound(params);
    for (i64 alpha = -m; alpha <= m; ++alpha) {
        for (i64 beta = -m; beta <= m; ++beta) {
            if (alpha == 0 && beta == 0) continue;
            IntVec2 w = basis.u1 * alpha + basis.u2 * beta;
            if (field.hop_of(w) <= params.hops)
                return {false, ValidityMethod::VC2, w};
        }
    }
    return {true, ValidityMethod::VC2, std::nullopt};
}

ValidityVerdict check_validity(const GeneratorBasis& basis, const RadioParams& params, const HopField& field) {
    if (params.range.greater_than_sqrt2() && is_reduced(basis))
        return check_vc2(basis, params, field);
    return check_vc1(basis, params, field);
}

} // namespace gridchroma
