#pragma once

#include "gridchroma/coloring.hpp"
#include "gridchroma/hops.hpp"

#include <cstdint>
#include <vector>

namespace gridchroma {

enum class PriorityKind { LineColumn, Diagonal, CenterDistance, Random };

struct PriorityHeuristic {
    PriorityKind kind = PriorityKind::LineColumn;
    std::uint64_t seed = 0;  // Random only
};

/// Total order on the W x H node set. LineColumn: (y,x). Diagonal: (x+y,x).
/// CenterDistance: exact squared distance to ((W-1)/2,(H-1)/2), ties (y,x).
/// Random: Fisher-Yates shuffle driven by a seeded std::mt19937_64.
std::vector<IntVec2> priority_order(int width, int height, const PriorityHeuristic& heuristic);

/// Result of greedy FirstFit coloring on a finite grid.
struct GreedyColoring {
    int width = 0;
    int height = 0;
    PriorityHeuristic heuristic;
    i64 num_colors = 0;
    std::vector<i64> colors;  // row-major

    i64 at(int x, int y) const { return colors[static_cast<std::size_t>(y) * width + x]; }
};

/// FirstFit: nodes in priority order each take the smallest color unused
/// among already-colored nodes within <= h hops. Hop distance here is the
/// finite-grid one: paths may not leave the W x H window (unlike the
/// infinite-grid metric used by the validity module).
GreedyColoring greedy_color(int width, int height, const RadioParams& params,
                            const PriorityHeuristic& heuristic);

/// Finite-grid hop distances from one node to all nodes of the window
/// (clamped to h+1). Exposed for validity scans in tests.
std::vector<int> finite_grid_hops(int width, int height, const RadioParams& params, const IntVec2& from);

} // namespace gridchroma
