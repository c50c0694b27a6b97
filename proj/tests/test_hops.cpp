#include "gridchroma/hops.hpp"

#include <doctest.h>

using namespace gridchroma;

namespace {
RadioParams params(const char* r, int h) { return RadioParams(Rational::parse(r), h); }
} // namespace

TEST_CASE("radio params invariants") {
    CHECK_THROWS_AS(params("0.5", 1), std::domain_error);
    CHECK_THROWS_AS(params("1", 0), std::domain_error);
}

TEST_CASE("are_neighbors exact disk test") {
    CHECK(are_neighbors({0, 0}, {1, 0}, params("1", 1)));
    CHECK_FALSE(are_neighbors({0, 0}, {1, 1}, params("1", 1)));
    CHECK(are_neighbors({0, 0}, {1, 1}, params("1.5", 1)));  // 2 <= 2.25
    CHECK_FALSE(are_neighbors({0, 0}, {0, 0}, params("1", 1)));
}

TEST_CASE("hop field basic values") {
    HopField f1(params("1", 3));
    CHECK(f1.hop_of({0, 0}) == 0);
    CHECK(f1.hop_of({1, 0}) == 1);
    CHECK(f1.hop_of({1, 1}) == 2);  // axis steps only at R=1

    HopField f2(params("2", 3));
    CHECK(f2.hop_of({2, 0}) == 1);
    CHECK(f2.hop_of({4, 3}) > 3);  // (4,3),(−3,4) is accepted at R=2,h=3

    HopField f15(params("1.5", 2));
    CHECK(f15.hop_of({1, 1}) == 1);
}

TEST_CASE("hops_between translation invariance") {
    HopField f(params("1", 3));
    CHECK(hops_between({5, 5}, {5, 5}, f) == 0);
    CHECK(hops_between({0, 0}, {1, 0}, f) == 1);
    CHECK(hops_between({3, -2}, {4, -1}, f) == 2);

    HopField f2(params("2", 3));
    CHECK(hops_between({0, 0}, {4, 3}, f2) > 3);
}

TEST_CASE("eightfold symmetry of hop counts") {
    for (const char* r : {"1", "1.5", "2", "2.5"}) {
        HopField f(params(r, 3));
        int rb = f.radius_box();
        for (i64 x = 0; x <= rb; ++x)
            for (i64 y = 0; y <= x; ++y) {
                int h = f.hop_of({x, y});
                CHECK(f.hop_of({y, x}) == h);
                CHECK(f.hop_of({-x, y}) == h);
                CHECK(f.hop_of({x, -y}) == h);
                CHECK(f.hop_of({-x, -y}) == h);
            }
    }
}

TEST_CASE("triangle inequality on hops") {
    RadioParams p = params("2", 3);
    HopField f(p);
    int rb = f.radius_box();
    for (i64 ax = -rb / 2; ax <= rb / 2; ax += 2)
        for (i64 ay = -rb / 2; ay <= rb / 2; ay += 2)
            for (i64 bx = -2; bx <= 2; ++bx)
                for (i64 by = -2; by <= 2; ++by) {
                    IntVec2 a{ax, ay}, b{ax + bx, ay + by};
                    int hab = hops_between({0, 0}, a, f);
                    int hbc = hops_between(a, b, f);
                    int hac = hops_between({0, 0}, b, f);
                    if (hab <= p.hops && hbc <= p.hops && hab + hbc <= p.hops)
                        CHECK(hac <= hab + hbc);
                }
}

TEST_CASE("monotonicity in R") {
    for (const auto& [lo, hi] : {std::pair{"1", "1.5"}, {"1.5", "2"}, {"2", "3"}}) {
        HopField flo(params(lo, 3));
        HopField fhi(params(hi, 3));
        int rb = flo.radius_box();
        for (i64 x = -rb; x <= rb; ++x)
            for (i64 y = -rb; y <= rb; ++y) {
                int dlo = flo.hop_of({x, y});
                if (dlo <= 3) CHECK(fhi.hop_of({x, y}) <= dlo);
            }
    }
}

TEST_CASE("annex lemma inequality suite") {
    for (const char* r : {"1.5", "2", "3"}) {
        for (int h : {1, 2, 3}) {
            RadioParams p = params(r, h);
            HopField f(p);
            int rb = f.radius_box();
            for (i64 x = -rb - 2; x <= rb + 2; ++x)
                for (i64 y = -rb - 2; y <= rb + 2; ++y)
                    CHECK(lemma_bounds_check({x, y}, p, f));
        }
    }
    // trivial case
    RadioParams p = params("2", 3);
    HopField f(p);
    CHECK(lemma_bounds_check({0, 0}, p, f));
}
