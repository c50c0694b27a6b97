#pragma once

#include "gridchroma/coloring.hpp"

#include <optional>

namespace gridchroma {

enum class ValidityMethod { VC1, VC2 };

/// Result of a validity check. An invalid verdict carries a witness: a
/// nonzero lattice point within h hops of the origin.
struct ValidityVerdict {
    bool valid = false;
    ValidityMethod method = ValidityMethod::VC1;
    std::optional<IntVec2> witness;
};

/// VC1: exhaustive check of the h-hop neighborhood of the origin. A basis is
/// valid iff no node W != O within h hops shares the origin's color, i.e. no
/// nonzero lattice point of the basis lies within h hops. Works for all R.
ValidityVerdict check_vc1(const GeneratorBasis& basis, const RadioParams& params, const HopField& field);

/// Conservative integer bound M >= mu(R) = 2*sqrt(3)*R / (3*(R - sqrt2)),
/// so that checking |alpha|,|beta| <= M covers |alpha|,|beta| < mu(R).
/// Requires R > sqrt2.
i64 mu_bound(const RadioParams& params);

/// VC2: bounded lattice-point check. Requires R > sqrt2 and a Gauss-reduced
/// basis. Valid iff every nonzero alpha*u1 + beta*u2 with |alpha|,|beta| <= M
/// is strictly more than h hops from the origin.
ValidityVerdict check_vc2(const GeneratorBasis& basis, const RadioParams& params, const HopField& field);

/// VC2 when R > sqrt2 and the basis is reduced, else VC1.
ValidityVerdict check_validity(const GeneratorBasis& basis, const RadioParams& params, const HopField& field);

} // namespace gridchroma
