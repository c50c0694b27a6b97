#include "gridchroma/coloring.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

using namespace gridchroma;

TEST_CASE("color_pair_ncc1 worked example") {
    GeneratorBasis basis({6, 2}, {-3, 6});
    CHECK(color_pair_ncc1({8, 9}, basis) == ColorPair{33, 38});
    CHECK(color_pair_ncc1({0, 0}, basis) == ColorPair{0, 0});
    CHECK(color_pair_ncc1({6, 2}, basis) == ColorPair{0, 0});  // w = u1
}

TEST_CASE("ncc1 palette and bijection") {
    GeneratorBasis basis({6, 2}, {-3, 6});
    Ncc1Palette palette = build_palette(basis);
    CHECK(palette.table.size() == 42);
    CHECK(palette.table[0] == ColorPair{0, 0});
    CHECK(color_ncc1({8, 9}, palette) == 35);
    CHECK(color_ncc1({0, 0}, palette) == 0);
    CHECK(color_ncc1({6, 2}, palette) == 0);

    Ncc1Palette id = build_palette(GeneratorBasis({1, 0}, {0, 1}));
    CHECK(id.table.size() == 1);

    Ncc1Palette five = build_palette(GeneratorBasis({2, 1}, {-1, 2}));
    CHECK(five.table.size() == 5);
}

TEST_CASE("ncc2 decomposition") {
    Ncc2Decomposition d = decompose_ncc2(GeneratorBasis({6, 2}, {-3, 6}));
    CHECK(d.g1 == 2);
    CHECK(d.v1 == IntVec2{3, 1});
    CHECK(d.g2 == 3);
    CHECK(d.v2 == IntVec2{-1, 2});
    CHECK(d.dprime == 7);

    Ncc2Decomposition id = decompose_ncc2(GeneratorBasis({1, 0}, {0, 1}));
    CHECK(id.g1 == 1);
    CHECK(id.g2 == 1);
    CHECK(id.dprime == 1);

    Ncc2Decomposition sq = decompose_ncc2(GeneratorBasis({2, 2}, {-2, 2}));
    CHECK(sq.g1 == 2);
    CHECK(sq.v1 == IntVec2{1, 1});
    CHECK(sq.g2 == 2);
    CHECK(sq.v2 == IntVec2{-1, 1});
    CHECK(sq.dprime == 2);
}

TEST_CASE("color_ncc2 worked example") {
    Ncc2Decomposition d = decompose_ncc2(GeneratorBasis({6, 2}, {-3, 6}));
    CHECK(color_ncc2({8, 9}, d) == 39);
    CHECK(color_ncc2({0, 0}, d) == 0);
    CHECK(color_ncc2({3, 8}, d) == 0);  // u1 + u2
}

TEST_CASE("num_colors is |det|") {
    CHECK(num_colors(GeneratorBasis({2, 1}, {-1, 2})) == 5);
    CHECK(num_colors(GeneratorBasis({4, 3}, {-3, 4})) == 25);
    CHECK(num_colors(GeneratorBasis({1, 0}, {0, 1})) == 1);
}

TEST_CASE("color_window distinct color counts") {
    GridColoring one = color_window({0, 0}, 1, 1, GeneratorBasis({2, 1}, {-1, 2}), ColorMethod::NCC2);
    CHECK(one.colors == std::vector<i64>{0});

    GridColoring eight = color_window({0, 0}, 10, 10, GeneratorBasis({2, 2}, {-2, 2}), ColorMethod::NCC2);
    CHECK(std::set<i64>(eight.colors.begin(), eight.colors.end()).size() == 8);

    GridColoring five = color_window({0, 0}, 10, 10, GeneratorBasis({2, 1}, {-1, 2}), ColorMethod::NCC1);
    CHECK(std::set<i64>(five.colors.begin(), five.colors.end()).size() == 5);
}

namespace {

GeneratorBasis random_basis(std::mt19937_64& rng) {
    std::uniform_int_distribution<i64> dist(-9, 9);
    for (;;) {
        IntVec2 a{dist(rng), dist(rng)};
        IntVec2 b{dist(rng), dist(rng)};
        if (det(a, b) != 0) return GeneratorBasis(a, b);
    }
}

} // namespace

TEST_CASE("lattice repetition and linearity of the pair") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<i64> coord(-30, 30);
    std::uniform_int_distribution<i64> coeff(-4, 4);
    for (int i = 0; i < 200; ++i) {
        GeneratorBasis basis = random_basis(rng);
        Ncc2Decomposition dec = decompose_ncc2(basis);
        IntVec2 w{coord(rng), coord(rng)};
        IntVec2 w2{coord(rng), coord(rng)};
        i64 alpha = coeff(rng), beta = coeff(rng);
        IntVec2 shifted = w + basis.u1 * alpha + basis.u2 * beta;

        CHECK(color_pair_ncc1(w, basis) == color_pair_ncc1(shifted, basis));
        CHECK(color_ncc2(w, dec) == color_ncc2(shifted, dec));

        ColorPair pa = color_pair_ncc1(w, basis);
        ColorPair pb = color_pair_ncc1(w2, basis);
        ColorPair ps = color_pair_ncc1(w + w2, basis);
        CHECK(euclid_mod(pa.c1 + pb.c1, basis.d) == ps.c1);
        CHECK(euclid_mod(pa.c2 + pb.c2, basis.d) == ps.c2);
    }
}

TEST_CASE("surjectivity and parallelotope unicity over one period") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 50; ++i) {
        GeneratorBasis basis = random_basis(rng);
        Ncc2Decomposition dec = decompose_ncc2(basis);
        // enumerate one period window: bounding box of the parallelogram
        IntVec2 corners[4] = {{0, 0}, basis.u1, basis.u2, basis.u1 + basis.u2};
        i64 xmin = 0, xmax = 0, ymin = 0, ymax = 0;
        for (auto& c : corners) {
            xmin = std::min(xmin, c.x);
            xmax = std::max(xmax, c.x);
            ymin = std::min(ymin, c.y);
            ymax = std::max(ymax, c.y);
        }
        std::set<i64> seen;
        for (i64 y = ymin; y <= ymax; ++y)
            for (i64 x = xmin; x <= xmax; ++x) {
                i64 c = color_ncc2({x, y}, dec);
                CHECK(c >= 0);
                CHECK(c < basis.d);
                seen.insert(c);
            }
        CHECK(static_cast<i64>(seen.size()) == basis.d);  // all colors occur, none repeats
    }
}

TEST_CASE("ncc1 and ncc2 induce the same partition") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 30; ++i) {
        GeneratorBasis basis = random_basis(rng);
        // window covering at least 2x2 periods
        i64 span = 2 * (std::max(std::abs(basis.u1.x), std::abs(basis.u2.x)) +
                        std::max(std::abs(basis.u1.y), std::abs(basis.u2.y))) + 2;
        int w = static_cast<int>(span), h = static_cast<int>(span);
        GridColoring a = color_window({0, 0}, w, h, basis, ColorMethod::NCC1);
        GridColoring b = color_window({0, 0}, w, h, basis, ColorMethod::NCC2);
        std::map<i64, i64> fwd, rev;
        for (std::size_t k = 0; k < a.colors.size(); ++k) {
            auto [itf, newf] = fwd.try_emplace(a.colors[k], b.colors[k]);
            CHECK(itf->second == b.colors[k]);
            auto [itr, newr] = rev.try_emplace(b.colors[k], a.colors[k]);
            CHECK(itr->second == a.colors[k]);
        }
    }
}

TEST_CASE("c-prime covers 0..d'-1 along the v-lattice") {
    Ncc2Decomposition d = decompose_ncc2(GeneratorBasis({6, 2}, {-3, 6}));
    std::set<i64> vals;
    for (i64 y = -10; y <= 10; ++y)
        for (i64 x = -10; x <= 10; ++x)
            vals.insert(euclid_mod(det(IntVec2{x, y}, d.v2), d.dprime));
    CHECK(static_cast<i64>(vals.size()) == d.dprime);
}
