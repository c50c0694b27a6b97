#include "gridchroma/coloring.hpp"

#include <algorithm>

namespace gridchroma {

Ncc1Palette build_palette(const GeneratorBasis& basis) {
    // Enumerate the bounding box of {O, u1, u2, u1+u2}; this yields every
    // attainable (c1,c2) pair.
    IntVec2 corners[4] = {{0, 0}, basis.u1, basis.u2, basis.u1 + basis.u2};
    i64 xmin = corners[0].x, xmax = corners[0].x, ymin = corners[0].y, ymax = corners[0].y;
    for (const IntVec2& c : corners) {
        xmin = std::min(xmin, c.x);
        xmax = std::max(xmax, c.x);
        ymin = std::min(ymin, c.y);
        ymax = std::max(ymax, c.y);
    }

    std::vector<ColorPair> pairs;
    pairs.reserve(static_cast<std::size_t>((xmax - xmin + 1) * (ymax - ymin + 1)));
    for (i64 y = ymin; y <= ymax; ++y)
        for (i64 x = xmin; x <= xmax; ++x)
            pairs.push_back(color_pair_ncc1({x, y}, basis));

    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

    if (static_cast<i64>(pairs.size()) != basis.d)
        throw std::logic_error("palette size does not match lattice determinant");
    return {basis, std::move(pairs)};
}

i64 color_ncc1(const IntVec2& w, const Ncc1Palette& palette) {
    ColorPair p = color_pair_ncc1(w, palette.basis);
    auto it = std::lower_bound(palette.table.begin(), palette.table.end(), p);
    if (it == palette.table.end() || !(*it == p))
        throw std::logic_error("color pair missing from palette");
    return it - palette.table.begin();
}

Ncc2Decomposition decompose_ncc2(const GeneratorBasis& basis) {
    Ncc2Decomposition d;
    d.basis = basis;
    d.g1 = gcd_nonneg(basis.u1.x, basis.u1.y);
    d.g2 = gcd_nonneg(basis.u2.x, basis.u2.y);
    d.v1 = {basis.u1.x / d.g1, basis.u1.y / d.g1};
    d.v2 = {basis.u2.x / d.g2, basis.u2.y / d.g2};
    d.dprime = basis.d / (d.g1 * d.g2);
    return d;
}

i64 color_ncc2(const IntVec2& w, const Ncc2Decomposition& d) {
    i64 det_w_v2 = det(w, d.v2);
    i64 det_v1_w = det(d.v1, w);
    i64 cprime = euclid_mod(det_w_v2, d.dprime);
    // floor of the exact rationals alpha' = det(w,v2)/d', beta' = det(v1,w)/d'
    i64 xprime = euclid_mod(floor_div(det_w_v2, d.dprime), d.g1);
    i64 yprime = euclid_mod(floor_div(det_v1_w, d.dprime), d.g2);
    return cprime + checked_mul(d.dprime, xprime) + checked_mul(checked_mul(d.dprime, d.g1), yprime);
}

GridColoring color_window(const IntVec2& origin, int width, int height,
                          const GeneratorBasis& basis, ColorMethod method) {
    if (width < 1 || height < 1) throw std::domain_error("window must be at least 1x1");

    GridColoring out;
    out.width = width;
    out.height = height;
    out.origin = origin;
    out.basis = basis;
    out.method = method;
    out.colors.resize(static_cast<std::size_t>(width) * height);

    if (method == ColorMethod::NCC1) {
        Ncc1Palette palette = build_palette(basis);
        for (int y = 0; y < height; ++y)
            for (int x = 0; x < width; ++x)
                out.colors[static_cast<std::size_t>(y) * width + x] =
                    color_ncc1({origin.x + x, origin.y + y}, palette);
    } else {
        Ncc2Decomposition decomp = decompose_ncc2(basis);
        for (int y = 0; y < height; ++y)
            for (int x = 0; x < width; ++x)
                out.colors[static_cast<std::size_t>(y) * width + x] =
                    color_ncc2({origin.x + x, origin.y + y}, decomp);
    }
    return out;
}

} // namespace gridchroma
