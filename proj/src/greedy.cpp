#include "gridchroma/greedy.hpp"

#include <algorithm>
#include <deque>
#include <random>

namespace gridchroma {

namespace {

// 1-hop neighbor offsets under the exact disk test
std::vector<IntVec2> disk_steps(const RadioParams& params) {
    std::vector<IntVec2> steps;
    i64 rmax = params.range.floor_mul(1) + 1;
    for (i64 dx = -rmax; dx <= rmax; ++dx)
        for (i64 dy = -rmax; dy <= rmax; ++dy) {
            i64 sq = dx * dx + dy * dy;
            if (sq > 0 && params.range.sq_leq(sq)) steps.push_back({dx, dy});
        }
    return steps;
}

std::vector<int> bfs_hops(int width, int height, const std::vector<IntVec2>& steps, int hops,
                          const IntVec2& from) {
    std::vector<int> dist(static_cast<std::size_t>(width) * height, hops + 1);
    auto idx = [&](i64 x, i64 y) { return static_cast<std::size_t>(y) * width + x; };
    dist[idx(from.x, from.y)] = 0;
    std::deque<IntVec2> queue{from};
    while (!queue.empty()) {
        IntVec2 cur = queue.front();
        queue.pop_front();
        int d = dist[idx(cur.x, cur.y)];
        if (d >= hops) continue;
        for (const IntVec2& s : steps) {
            i64 nx = cur.x + s.x;
            i64 ny = cur.y + s.y;
            if (nx < 0 || nx >= width || ny < 0 || ny >= height) continue;
            if (dist[idx(nx, ny)] > d + 1) {
                dist[idx(nx, ny)] = d + 1;
                queue.push_back({nx, ny});
            }
        }
    }
    return dist;
}

} // namespace

std::vector<int> finite_grid_hops(int width, int height, const RadioParams& params, const IntVec2& from) {
    return bfs_hops(width, height, disk_steps(params), params.hops, from);
}

std::vector<IntVec2> priority_order(int width, int height, const PriorityHeuristic& heuristic) {
    if (width < 1 || height < 1) throw std::domain_error("grid must be at least 1x1");
    std::vector<IntVec2> nodes;
    nodes.reserve(static_cast<std::size_t>(width) * height);
    for (i64 y = 0; y < height; ++y)
        for (i64 x = 0; x < width; ++x) nodes.push_back({x, y});

    switch (heuristic.kind) {
        case PriorityKind::LineColumn:
            // already in (y,x) order
            break;
        case PriorityKind::Diagonal:
            std::stable_sort(nodes.begin(), nodes.end(), [](const IntVec2& a, const IntVec2& b) {
                if (a.x + a.y != b.x + b.y) return a.x + a.y < b.x + b.y;
                return a.x < b.x;
            });
            break;
        case PriorityKind::CenterDistance: {
            // 4*d^2 to the center ((W-1)/2,(H-1)/2), exact in integers
            auto key = [&](const IntVec2& p) {
                i64 dx = 2 * p.x - (width - 1);
                i64 dy = 2 * p.y - (height - 1);
                return dx * dx + dy * dy;
            };
            std::stable_sort(nodes.begin(), nodes.end(),
                             [&](const IntVec2& a, const IntVec2& b) { return key(a) < key(b); });
            break;
        }
        case PriorityKind::Random: {
            std::mt19937_64 rng(heuristic.seed);
            // Fisher-Yates
            for (std::size_t i = nodes.size(); i > 1; --i) {
                std::size_t j = rng() % i;
                std::swap(nodes[i - 1], nodes[j]);
            }
            break;
        }
    }
    return nodes;
}

GreedyColoring greedy_color(int width, int height, const RadioParams& params,
                            const PriorityHeuristic& heuristic) {
    std::vector<IntVec2> order = priority_order(width, height, heuristic);
    std::vector<IntVec2> steps = disk_steps(params);

    GreedyColoring out;
    out.width = width;
    out.height = height;
    out.heuristic = heuristic;
    out.colors.assign(static_cast<std::size_t>(width) * height, -1);

    std::vector<char> used;
    for (const IntVec2& node : order) {
        std::vector<int> dist = bfs_hops(width, height, steps, params.hops, node);
        used.assign(out.colors.size() + 1, 0);
        for (std::size_t i = 0; i < dist.size(); ++i) {
            if (dist[i] <= params.hops && out.colors[i] >= 0)
                used[static_cast<std::size_t>(out.colors[i])] = 1;
        }
        i64 c = 0;
        while (used[static_cast<std::size_t>(c)]) ++c;
        out.colors[static_cast<std::size_t>(node.y) * width + node.x] = c;
        out.num_colors = std::max(out.num_colors, c + 1);
    }
    return out;
}

} // namespace gridchroma
