#pragma once

#include "gridchroma/basis.hpp"
#include "gridchroma/hops.hpp"

#include <vector>

namespace gridchroma {

/// Modular coordinate pair of a node relative to the generator basis.
/// Exactly d distinct pairs occur over all of Z^2.
struct ColorPair {
    i64 c1 = 0;
    i64 c2 = 0;

    friend bool operator==(const ColorPair&, const ColorPair&) = default;
    friend auto operator<=>(const ColorPair&, const ColorPair&) = default;
};

/// c1 = (x*y2 - y*x2) mod d, c2 = (-x*y1 + y*x1) mod d.
inline ColorPair color_pair_ncc1(const IntVec2& w, const GeneratorBasis& basis) {
    return {euclid_mod(det(w, basis.u2), basis.d), euclid_mod(det(basis.u1, w), basis.d)};
}

/// The lexicographically sorted table of the d attainable pairs. The color
/// of a node is the index of its pair in the table; entry 0 is (0,0).
struct Ncc1Palette {
    GeneratorBasis basis;
    std::vector<ColorPair> table;
};

Ncc1Palette build_palette(const GeneratorBasis& basis);

i64 color_ncc1(const IntVec2& w, const Ncc1Palette& palette);

/// u1 = g1*v1, u2 = g2*v2 with coprime-coordinate v1,v2; d = g1*g2*d'.
struct Ncc2Decomposition {
    i64 g1 = 1;
    i64 g2 = 1;
    IntVec2 v1;
    IntVec2 v2;
    i64 dprime = 1;
    GeneratorBasis basis;
};

Ncc2Decomposition decompose_ncc2(const GeneratorBasis& basis);

/// Direct color formula: c(w) = c'(w) + d'*x'(w) + d'*g1*y'(w).
i64 color_ncc2(const IntVec2& w, const Ncc2Decomposition& decomp);

inline i64 num_colors(const GeneratorBasis& basis) { return basis.d; }

enum class ColorMethod { NCC1, NCC2 };

/// A finite window of the infinite periodic coloring, with provenance.
struct GridColoring {
    int width = 0;
    int height = 0;
    IntVec2 origin;
    GeneratorBasis basis;
    ColorMethod method = ColorMethod::NCC2;
    std::vector<i64> colors;  // row-major, colors[y*width + x]

    i64 at(int x, int y) const { return colors[static_cast<std::size_t>(y) * width + x]; }
};

GridColoring color_window(const IntVec2& origin, int width, int height,
                          const GeneratorBasis& basis, ColorMethod method);

} // namespace gridchroma
