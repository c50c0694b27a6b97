#pragma once

#include "gridchroma/rational.hpp"
#include "gridchroma/vec.hpp"

#include <vector>

namespace gridchroma {

/// A coloring problem instance: radio range R (grid-step units) and hop
/// count h.
struct RadioParams {
    Rational range;   // R >= 1
    int hops = 1;     // h >= 1

    RadioParams(Rational r, int h) : range(r), hops(h) {
        if (!(range >= 1)) throw std::domain_error("range must be >= 1");
        if (hops < 1) throw std::domain_error("hops must be >= 1");
    }
};

/// true iff 0 < d(a,b) <= R, decided exactly.
inline bool are_neighbors(const IntVec2& a, const IntVec2& b, const RadioParams& params) {
    i64 sq = (b - a).norm_sq();
    return sq > 0 && params.range.sq_leq(sq);
}

/// Exact hop distances from the origin, tabulated over the box
/// |x|,|y| <= radius_box with radius_box = ceil(h*R)+1. Any offset outside
/// the box is more than h*R away, hence more than h hops. Entries are
/// clamped to h+1 ("more than h").
class HopField {
public:
    explicit HopField(const RadioParams& params);

    int radius_box() const { return radius_box_; }
    int hops() const { return hops_; }

    /// Hop count of the offset w, clamped to h+1.
    int hop_of(const IntVec2& w) const {
        if (w.x < -radius_box_ || w.x > radius_box_ || w.y < -radius_box_ || w.y > radius_box_)
            return hops_ + 1;
        return table_[index(static_cast<int>(w.x), static_cast<int>(w.y))];
    }

    /// All offsets within h hops of the origin (the origin included).
    const std::vector<IntVec2>& reachable() const { return reachable_; }

private:
    std::size_t index(int x, int y) const {
        int side = 2 * radius_box_ + 1;
        return static_cast<std::size_t>(y + radius_box_) * side + (x + radius_box_);
    }

    int radius_box_;
    int hops_;
    std::vector<int> table_;
    std::vector<IntVec2> reachable_;
};

/// hop distance between two grid nodes, by translation invariance of Z^2;
/// returns h+1 when more than h.
inline int hops_between(const IntVec2& a, const IntVec2& b, const HopField& field) {
    return field.hop_of(b - a);
}

/// Test oracle for the hop/distance inequalities:
///   d(O,w) <= (R - sqrt2)*h  =>  hop(w) <= h      (needs R > sqrt2)
///   d(O,w) >  h*R            =>  hop(w) >  h
/// Returns true iff both implications hold for w against the exact field.
bool lemma_bounds_check(const IntVec2& w, const RadioParams& params, const HopField& field);

} // namespace gridchroma
