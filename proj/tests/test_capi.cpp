#include <gridchroma.h>

#include <doctest.h>

#include <string>
#include <vector>

namespace {

struct Problem {
    gc_problem* p = nullptr;
    Problem(const char* range, int hops) { REQUIRE(gc_problem_create(range, hops, &p) == GC_OK); }
    ~Problem() { gc_problem_destroy(p); }
};

} // namespace

TEST_CASE("create rejects bad input") {
    gc_problem* p = nullptr;
    CHECK(gc_problem_create("0.5", 3, &p) == GC_ERR_INVALID_ARG);
    CHECK(gc_problem_create("2", 0, &p) == GC_ERR_INVALID_ARG);
    CHECK(gc_problem_create("abc", 2, &p) == GC_ERR_INVALID_ARG);
    CHECK(gc_problem_create(nullptr, 2, &p) == GC_ERR_INVALID_ARG);
    CHECK(gc_problem_create("2", 2, nullptr) == GC_ERR_INVALID_ARG);
    CHECK(gc_last_error()[0] != '\0');
    CHECK(std::string(gc_strerror(GC_ERR_INVALID_ARG)).size() > 0);
}

TEST_CASE("solve returns the known optimum") {
    Problem pr("1", 2);
    gc_solution sol;
    REQUIRE(gc_solve(pr.p, &sol) == GC_OK);
    CHECK(sol.num_colors == 5);
    // det of the reported basis matches the color count
    int64_t d = sol.vectors[0] * sol.vectors[3] - sol.vectors[1] * sol.vectors[2];
    CHECK(d == 5);
    CHECK(sol.candidates_examined > 0);
    CHECK(gc_solve(nullptr, &sol) == GC_ERR_INVALID_ARG);
}

TEST_CASE("verify dispatch and error codes") {
    Problem pr("2", 3);
    int64_t good[4] = {4, 3, -3, 4};
    int64_t bad[4] = {1, 0, 0, 1};
    int64_t witness[2];
    int valid = -1;

    CHECK(gc_verify(pr.p, good, GC_VC_AUTO, &valid, witness) == GC_OK);
    CHECK(valid == 1);
    CHECK(gc_verify(pr.p, good, GC_VC1, &valid, witness) == GC_OK);
    CHECK(valid == 1);
    CHECK(gc_verify(pr.p, good, GC_VC2, &valid, witness) == GC_OK);
    CHECK(valid == 1);

    CHECK(gc_verify(pr.p, bad, GC_VC1, &valid, witness) == GC_OK);
    CHECK(valid == 0);
    // witness is a lattice point too close to the origin
    CHECK((witness[0] != 0 || witness[1] != 0));

    int64_t collinear[4] = {2, 1, 4, 2};
    CHECK(gc_verify(pr.p, collinear, GC_VC1, &valid, witness) == GC_ERR_INVALID_BASIS);

    Problem small("1.2", 3);
    CHECK(gc_verify(small.p, good, GC_VC2, &valid, witness) == GC_ERR_DOMAIN);
    CHECK(gc_verify(nullptr, good, GC_VC1, &valid, witness) == GC_ERR_INVALID_ARG);
}

TEST_CASE("window coloring and conflict check") {
    Problem pr("1", 2);
    int64_t vecs[4] = {1, 2, -2, 1};
    std::vector<int32_t> colors(100);
    REQUIRE(gc_color_window(pr.p, vecs, GC_NCC1, 0, 0, 10, 10, colors.data()) == GC_OK);

    int64_t n = 0;
    REQUIRE(gc_num_colors(vecs, &n) == GC_OK);
    CHECK(n == 5);
    for (int32_t c : colors) {
        CHECK(c >= 0);
        CHECK(c < 5);
    }

    int conflict = -1;
    int64_t pair[4];
    REQUIRE(gc_check_window(pr.p, colors.data(), 10, 10, &conflict, pair) == GC_OK);
    CHECK(conflict == 0);

    // corrupt one cell; the scan must find a violation
    colors[55] = (colors[55] + 1) % 5;
    REQUIRE(gc_check_window(pr.p, colors.data(), 10, 10, &conflict, pair) == GC_OK);
    CHECK(conflict == 1);

    std::vector<int32_t> colors2(100);
    REQUIRE(gc_color_window(pr.p, vecs, GC_NCC2, 0, 0, 10, 10, colors2.data()) == GC_OK);
    for (int32_t c : colors2) {
        CHECK(c >= 0);
        CHECK(c < 5);
    }

    int64_t collinear[4] = {2, 1, 4, 2};
    CHECK(gc_color_window(pr.p, collinear, GC_NCC1, 0, 0, 10, 10, colors.data()) ==
          GC_ERR_INVALID_BASIS);
}

TEST_CASE("greedy through the C boundary") {
    Problem pr("1", 3);
    std::vector<int32_t> colors(100);
    int64_t used = 0;
    REQUIRE(gc_greedy_color(pr.p, 10, 10, GC_PRIORITY_LINE, 0, colors.data(), &used) == GC_OK);
    CHECK(used >= 5);
    CHECK(used <= 11);

    std::vector<int32_t> a(100), b(100);
    int64_t ua = 0, ub = 0;
    REQUIRE(gc_greedy_color(pr.p, 10, 10, GC_PRIORITY_RANDOM, 7, a.data(), &ua) == GC_OK);
    REQUIRE(gc_greedy_color(pr.p, 10, 10, GC_PRIORITY_RANDOM, 7, b.data(), &ub) == GC_OK);
    CHECK(a == b);
    CHECK(ua == ub);
}

TEST_CASE("bounds report") {
    Problem pr("2", 3);
    gc_bounds_report b;
    REQUIRE(gc_bounds(pr.p, &b) == GC_OK);
    CHECK(b.lower == doctest::Approx(2.674).epsilon(0.01));
    CHECK(b.upper > b.lower);
    int64_t dhex = b.hexagonal[0] * b.hexagonal[3] - b.hexagonal[1] * b.hexagonal[2];
    CHECK(dhex == b.hexagonal_colors);
    CHECK(dhex > 0);
    CHECK(b.square[0] == 7);
    CHECK(b.square[3] == 7);
    CHECK(b.square_colors == 49);

    Problem small("1", 2);
    gc_bounds_report b2;
    REQUIRE(gc_bounds(small.p, &b2) == GC_OK);
    CHECK(b2.lower < 0); // undefined below sqrt2
    CHECK(b2.square_colors == 9);
}
