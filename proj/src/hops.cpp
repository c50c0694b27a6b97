#include "gridchroma/hops.hpp"

#include <cmath>
#include <deque>

namespace gridchroma {

HopField::HopField(const RadioParams& params) : hops_(params.hops) {
    // ceil(h*R) + 1, exact on the rational R
    i64 hr_floor = params.range.floor_mul(params.hops);
    radius_box_ = static_cast<int>(hr_floor) + 2;

    int side = 2 * radius_box_ + 1;
    table_.assign(static_cast<std::size_t>(side) * side, hops_ + 1);

    // 1-hop neighbor offsets: 0 < dx^2+dy^2 <= R^2
    std::vector<IntVec2> steps;
    i64 rmax = params.range.floor_mul(1) + 1;
    for (i64 dx = -rmax; dx <= rmax; ++dx)
        for (i64 dy = -rmax; dy <= rmax; ++dy) {
            i64 sq = dx * dx + dy * dy;
            if (sq > 0 && params.range.sq_leq(sq)) steps.push_back({dx, dy});
        }

    table_[index(0, 0)] = 0;
    std::deque<IntVec2> queue{{0, 0}};
    while (!queue.empty()) {
        IntVec2 cur = queue.front();
        queue.pop_front();
        int d = table_[index(static_cast<int>(cur.x), static_cast<int>(cur.y))];
        if (d >= hops_) continue;
        for (const IntVec2& s : steps) {
            i64 nx = cur.x + s.x;
            i64 ny = cur.y + s.y;
            if (nx < -radius_box_ || nx > radius_box_ || ny < -radius_box_ || ny > radius_box_) continue;
            std::size_t idx = index(static_cast<int>(nx), static_cast<int>(ny));
            if (table_[idx] > d + 1) {
                table_[idx] = d + 1;
                queue.push_back({nx, ny});
            }
        }
    }

    for (int y = -radius_box_; y <= radius_box_; ++y)
        for (int x = -radius_box_; x <= radius_box_; ++x)
            if (table_[index(x, y)] <= hops_) reachable_.push_back({x, y});
}

bool lemma_bounds_check(const IntVec2& w, const RadioParams& params, const HopField& field) {
    int hop = field.hop_of(w);
    i64 wsq = w.norm_sq();

    // d(O,w) <= (R - sqrt2)*h => hop <= h. Irrational threshold, one-sided
    // conservative rounding: only trigger the premise strictly below it.
    double r = params.range.to_double();
    if (r > std::sqrt(2.0)) {
        double t = (r - std::sqrt(2.0)) * params.hops;
        if (static_cast<double>(wsq) <= t * t - 1e-9 && hop > params.hops) return false;
    }

    // d(O,w) > h*R => hop > h. Exact: wsq*den^2 > (h*num)^2.
    i64 hnum = checked_mul(params.hops, params.range.num());
    i64 den = params.range.den();
    if (checked_mul(checked_mul(wsq, den), den) > checked_mul(hnum, hnum) && hop <= params.hops) return false;

    return true;
}

} // namespace gridchroma
