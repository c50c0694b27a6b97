#pragma once

#include "gridchroma/validity.hpp"

#include <functional>

namespace gridchroma {

/// Candidate window for the optimal vector search. All bounds are rounded
/// outward so the window contains every basis satisfying the derivation;
/// candidates live in the half plane y >= 0 for both vectors.
struct SearchWindow {
    bool large_r = false;   // R > sqrt2 regime
    i64 l1_min_sq = 0;      // |u1|^2 strictly greater (0 in the small-R regime)
    i64 l1_max_sq = 0;      // |u1|^2 at most
    i64 l2_max_sq = 0;      // |u2|^2 at most (global cap)
    double s_bound = 0.0;   // S_h (large R) or S_s = (hR+1)^2 (small R)
    i64 coord1_max = 0;     // |x1|, y1 bound
    i64 coord2_max = 0;     // |x2|, y2 bound
};

SearchWindow build_window(const RadioParams& params);

/// Calls fn for every candidate pair in the window: integer vectors with
/// y1,y2 >= 0, squared lengths within bounds, |u2| >= |u1|, det != 0.
void enumerate_candidates(const SearchWindow& window,
                          const std::function<void(const IntVec2&, const IntVec2&)>& fn);

struct SearchResult {
    GeneratorBasis basis;
    i64 num_colors = 0;
    /// Size of the window's candidate set: the pair count a direct
    /// enumeration examines (grows ~R^4 in the large-R regime). The search
    /// itself prunes most of them.
    i64 candidates_examined = 0;
    ValidityMethod validity_method = ValidityMethod::VC1;
};

/// Method OVS: minimal-|det| reduced valid basis within the window.
/// Deterministic: ties are broken by (|u1|^2, |u2|^2, x1, y1, x2, y2).
/// threads = 0 reads GRID_CHROMA_THREADS (default 1); results are identical
/// for any thread count.
SearchResult find_optimal(const RadioParams& params, int threads = 0);
SearchResult find_optimal(const RadioParams& params, const HopField& field, int threads = 0);

/// Independent oracle: exhaustive minimum of |det| over all pairs in the box
/// |x|,|y| <= box_halfwidth (y >= 0 half plane), VC1 validity only, no
/// reduction filter.
SearchResult brute_force_optimal(const RadioParams& params, i64 box_halfwidth);

} // namespace gridchroma
