#include "gridchroma/search.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <thread>
#include <vector>

namespace gridchroma {

namespace {

const double kSqrt2 = std::sqrt(2.0);
const double kSqrt3 = std::sqrt(3.0);

i64 sq_of(double v) {
    if (v <= 0) return 0;
    return static_cast<i64>(std::ceil(v * v));
}

struct Candidate {
    IntVec2 v;
    i64 norm_sq;
};

std::vector<Candidate> half_plane_vectors(i64 coord_max, i64 min_sq_excl, i64 max_sq_incl) {
    std::vector<Candidate> out;
    for (i64 y = 0; y <= coord_max; ++y)
        for (i64 x = -coord_max; x <= coord_max; ++x) {
            i64 n = x * x + y * y;
            if (n > min_sq_excl && n <= max_sq_incl) out.push_back({{x, y}, n});
        }
    std::sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) {
        if (a.norm_sq != b.norm_sq) return a.norm_sq < b.norm_sq;
        if (a.v.x != b.v.x) return a.v.x < b.v.x;
        return a.v.y < b.v.y;
    });
    return out;
}

// per-u1 cap on |u2|^2 from (sqrt3/2)|u1||u2| <= S, rounded outward
i64 l2_cap_sq(double s_bound, i64 n1) {
    double cap = 2.0 * s_bound / (kSqrt3 * std::sqrt(static_cast<double>(n1))) + 1.0;
    return static_cast<i64>(std::ceil(cap * cap));
}

using TieKey = std::array<i64, 6>;

TieKey key_of(const GeneratorBasis& b) {
    return {b.u1.norm_sq(), b.u2.norm_sq(), b.u1.x, b.u1.y, b.u2.x, b.u2.y};
}

struct Best {
    bool found = false;
    i64 det_abs = 0;
    TieKey key{};
    GeneratorBasis basis;

    bool improves(i64 d, const TieKey& k) const {
        if (!found) return true;
        if (d != det_abs) return d < det_abs;
        return k < key;
    }
};

i64 box_size(i64 coord_max) { return (2 * coord_max + 1) * (coord_max + 1); }

// Size of the candidate set a direct enumeration of the window examines:
// every coordinate pair in the two boxes (large R), or per-u1 boxes capped
// by the |u1|-dependent |u2| bound (small R). The optimized search below
// visits far fewer pairs, but the examined-set size is the method's cost.
i64 window_candidate_count(const SearchWindow& window, const std::vector<Candidate>& u1s) {
    if (window.large_r) return checked_mul(box_size(window.coord1_max), box_size(window.coord2_max));
    i64 total = 0;
    for (const Candidate& a : u1s) {
        double l2 = 2.0 * window.s_bound / (kSqrt3 * std::sqrt(static_cast<double>(a.norm_sq)));
        i64 c2 = std::min<i64>(window.coord2_max, static_cast<i64>(std::ceil(l2 + 1.0)));
        total = checked_add(total, box_size(c2));
    }
    return total;
}

int resolve_threads(int threads) {
    if (threads > 0) return threads;
    if (const char* env = std::getenv("GRID_CHROMA_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    return 1;
}

} // namespace

SearchWindow build_window(const RadioParams& params) {
    SearchWindow w;
    double r = params.range.to_double();
    double h = params.hops;
    w.large_r = params.range.greater_than_sqrt2();

    if (w.large_r) {
        double s_h = kSqrt3 / 2.0 * h * h * r * r + 2.0 * h * r + (h * r + 2.0) * kSqrt2;
        double l1_min = h * (r - kSqrt2);
        double l1_max = std::sqrt(2.0 * s_h / kSqrt3);
        double l2_max = 2.0 / kSqrt3 * s_h / (h * (r - kSqrt2));
        w.s_bound = s_h;
        // outward by one unit each way
        w.l1_min_sq = sq_of(l1_min - 1.0);
        w.l1_max_sq = sq_of(l1_max + 1.0);
        w.l2_max_sq = sq_of(l2_max + 1.0);
        w.coord1_max = static_cast<i64>(std::ceil(l1_max + 1.0));
        w.coord2_max = static_cast<i64>(std::ceil(l2_max + 1.0));
    } else {
        double s_s = (h * r + 1.0) * (h * r + 1.0);
        double l1_max = h * r + 1.0;
        double l2_max = 2.0 * kSqrt3 * s_s / 3.0;  // cap at |u1| = 1
        w.s_bound = s_s;
        w.l1_min_sq = 0;
        w.l1_max_sq = sq_of(l1_max + 1.0);
        w.l2_max_sq = sq_of(l2_max + 1.0);
        w.coord1_max = static_cast<i64>(std::ceil(l1_max + 1.0));
        w.coord2_max = static_cast<i64>(std::ceil(l2_max + 1.0));
    }
    return w;
}

void enumerate_candidates(const SearchWindow& window,
                          const std::function<void(const IntVec2&, const IntVec2&)>& fn) {
    auto u1s = half_plane_vectors(window.coord1_max, window.l1_min_sq, window.l1_max_sq);
    auto u2s = half_plane_vectors(window.coord2_max, window.l1_min_sq, window.l2_max_sq);
    for (const Candidate& a : u1s) {
        i64 cap = window.large_r ? window.l2_max_sq
                                 : std::min(window.l2_max_sq, l2_cap_sq(window.s_bound, a.norm_sq));
        for (const Candidate& b : u2s) {
            if (b.norm_sq < a.norm_sq || b.norm_sq > cap) continue;
            if (det(a.v, b.v) == 0) continue;
            fn(a.v, b.v);
        }
    }
}

SearchResult find_optimal(const RadioParams& params, int threads) {
    HopField field(params);
    return find_optimal(params, field, threads);
}

SearchResult find_optimal(const RadioParams& params, const HopField& field, int threads) {
    SearchWindow window = build_window(params);
    ValidityMethod method = window.large_r ? ValidityMethod::VC2 : ValidityMethod::VC1;

    auto u1s = half_plane_vectors(window.coord1_max, window.l1_min_sq, window.l1_max_sq);
    auto u2s = half_plane_vectors(window.coord2_max, window.l1_min_sq, window.l2_max_sq);

    int nthreads = resolve_threads(threads);
    std::vector<Best> bests(nthreads);

    auto worker = [&](int tid) {
        Best& best = bests[tid];
        for (std::size_t i = tid; i < u1s.size(); i += nthreads) {
            const Candidate& a = u1s[i];
            i64 cap = window.large_r ? window.l2_max_sq
                                     : std::min(window.l2_max_sq, l2_cap_sq(window.s_bound, a.norm_sq));
            // u2s is sorted by norm; start at the first |u2| >= |u1|
            auto first = std::lower_bound(u2s.begin(), u2s.end(), a.norm_sq,
                                          [](const Candidate& c, i64 n) { return c.norm_sq < n; });
            for (auto it = first; it != u2s.end(); ++it) {
                const Candidate& b = *it;
                if (b.norm_sq > cap) continue;
                i64 d = det(a.v, b.v);
                if (d == 0) continue;
                if (d < 0) d = -d;
                // reduced bases only
                i64 dp = dot(a.v, b.v);
                if (dp < 0) dp = -dp;
                if (2 * dp > a.norm_sq) continue;
                // det >= (sqrt3/2)|u1||u2| for reduced pairs: skip when that
                // floor already exceeds the incumbent
                if (best.found && 3 * a.norm_sq * b.norm_sq > 4 * best.det_abs * best.det_abs) continue;
                GeneratorBasis basis(a.v, b.v);
                TieKey key = key_of(basis);
                if (!best.improves(d, key)) continue;
                ValidityVerdict verdict = window.large_r ? check_vc2(basis, params, field)
                                                         : check_vc1(basis, params, field);
                if (verdict.valid) {
                    best.found = true;
                    best.det_abs = d;
                    best.key = key;
                    best.basis = basis;
                }
            }
        }
    };

    if (nthreads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }

    SearchResult result;
    result.candidates_examined = window_candidate_count(window, u1s);
    Best overall;
    for (int t = 0; t < nthreads; ++t) {
        const Best& b = bests[t];
        if (b.found && overall.improves(b.det_abs, b.key)) overall = b;
    }
    if (!overall.found) throw std::logic_error("no valid basis in window");

    result.basis = overall.basis;
    result.num_colors = overall.det_abs;
    result.validity_method = method;
    return result;
}

SearchResult brute_force_optimal(const RadioParams& params, i64 box_halfwidth) {
    i64 min_hw = params.range.floor_mul(params.hops) + 2;
    if (box_halfwidth < min_hw) throw std::domain_error("brute-force box too small");

    HopField field(params);
    Best best;
    i64 count = 0;
    for (i64 y1 = 0; y1 <= box_halfwidth; ++y1)
        for (i64 x1 = -box_halfwidth; x1 <= box_halfwidth; ++x1) {
            IntVec2 a{x1, y1};
            if (a.is_zero()) continue;
            for (i64 y2 = 0; y2 <= box_halfwidth; ++y2)
                for (i64 x2 = -box_halfwidth; x2 <= box_halfwidth; ++x2) {
                    IntVec2 b{x2, y2};
                    i64 d = det(a, b);
                    if (d == 0) continue;
                    ++count;
                    if (d < 0) d = -d;
                    GeneratorBasis basis(a, b);
                    TieKey key = key_of(basis);
                    if (!best.improves(d, key)) continue;
                    if (check_vc1(basis, params, field).valid) {
                        best.found = true;
                        best.det_abs = d;
                        best.key = key;
                        best.basis = basis;
                    }
                }
        }
    if (!best.found) throw std::logic_error("no valid basis in brute-force box");
    return {best.basis, best.det_abs, count, ValidityMethod::VC1};
}

} // namespace gridchroma
