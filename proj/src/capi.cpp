#include "gridchroma.h"

#include "gridchroma/bounds.hpp"
#include "gridchroma/greedy.hpp"
#include "gridchroma/search.hpp"
#include "gridchroma/validity.hpp"

#include <algorithm>
#include <memory>
#include <string>

using namespace gridchroma;

struct gc_problem {
    RadioParams params;
    std::unique_ptr<HopField> field;

    explicit gc_problem(RadioParams p) : params(p) {}

    const HopField& hop_field() {
        if (!field) field = std::make_unique<HopField>(params);
        return *field;
    }
};

namespace {

thread_local std::string g_last_error;

gc_status fail(gc_status code, const std::string& what) {
    g_last_error = what;
    return code;
}

struct invalid_basis_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <class F>
gc_status guarded(F&& f) {
    try {
        g_last_error.clear();
        return f();
    } catch (const overflow_error& e) {
        return fail(GC_ERR_OVERFLOW, e.what());
    } catch (const invalid_basis_error& e) {
        return fail(GC_ERR_INVALID_BASIS, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(GC_ERR_INVALID_ARG, e.what());
    } catch (const std::domain_error& e) {
        return fail(GC_ERR_DOMAIN, e.what());
    } catch (const std::exception& e) {
        return fail(GC_ERR_INTERNAL, e.what());
    }
}

GeneratorBasis basis_of(const int64_t vectors[4]) {
    IntVec2 a{vectors[0], vectors[1]};
    IntVec2 b{vectors[2], vectors[3]};
    if (det(a, b) == 0) throw invalid_basis_error("generator vectors must be linearly independent");
    return GeneratorBasis(a, b);
}

void store_basis(const GeneratorBasis& b, int64_t out[4]) {
    out[0] = b.u1.x;
    out[1] = b.u1.y;
    out[2] = b.u2.x;
    out[3] = b.u2.y;
}

} // namespace

extern "C" {

const char* gc_strerror(gc_status code) {
    switch (code) {
        case GC_OK: return "ok";
        case GC_ERR_INVALID_ARG: return "invalid argument";
        case GC_ERR_DOMAIN: return "domain error";
        case GC_ERR_INVALID_BASIS: return "vectors do not yield a valid coloring";
        case GC_ERR_OVERFLOW: return "integer overflow";
        case GC_ERR_INTERNAL: return "internal error";
    }
    return "unknown error";
}

const char* gc_last_error(void) { return g_last_error.c_str(); }

gc_status gc_problem_create(const char* range_decimal, int hops, gc_problem** out) {
    if (!range_decimal || !out) return fail(GC_ERR_INVALID_ARG, "null argument");
    return guarded([&] {
        Rational r = Rational::parse(range_decimal);
        if (!(r >= 1)) return fail(GC_ERR_INVALID_ARG, "range must be >= 1");
        if (hops < 1) return fail(GC_ERR_INVALID_ARG, "hops must be >= 1");
        *out = new gc_problem(RadioParams(r, hops));
        return GC_OK;
    });
}

void gc_problem_destroy(gc_problem* p) { delete p; }

gc_status gc_solve(gc_problem* p, gc_solution* out) {
    if (!p || !out) return fail(GC_ERR_INVALID_ARG, "null argument");
    return guarded([&] {
        SearchResult r = find_optimal(p->params, p->hop_field());
        store_basis(r.basis, out->vectors);
        out->num_colors = r.num_colors;
        out->candidates_examined = r.candidates_examined;
        out->validity_method = r.validity_method == ValidityMethod::VC2 ? 2 : 1;
        return GC_OK;
    });
}

gc_status gc_verify(gc_problem* p, const int64_t vectors[4], gc_verify_method method,
                    int* valid, int64_t witness[2]) {
    if (!p || !vectors || !valid) return fail(GC_ERR_INVALID_ARG, "null argument");
    return guarded([&] {
        GeneratorBasis basis = basis_of(vectors);
        ValidityVerdict verdict;
        switch (method) {
            case GC_VC1:
                verdict = check_vc1(basis, p->params, p->hop_field());
                break;
            case GC_VC2:
                verdict = check_vc2(gauss_reduce(basis), p->params, p->hop_field());
                break;
            default:
                verdict = check_validity(gauss_reduce(basis), p->params, p->hop_field());
                break;
        }
        *valid = verdict.valid ? 1 : 0;
        if (!verdict.valid && witness && verdict.witness) {
            witness[0] = verdict.witness->x;
            witness[1] = verdict.witness->y;
        }
        return GC_OK;
    });
}

gc_status gc_color_window(gc_problem* p, const int64_t vectors[4], gc_color_method method,
                          int64_t origin_x, int64_t origin_y, int width, int height,
                          int32_t* colors) {
    if (!p || !vectors || !colors) return fail(GC_ERR_INVALID_ARG, "null argument");
    if (width < 1 || height < 1) return fail(GC_ERR_INVALID_ARG, "window must be at least 1x1");
    return guarded([&] {
        GeneratorBasis basis = basis_of(vectors);
        ColorMethod m = method == GC_NCC1 ? ColorMethod::NCC1 : ColorMethod::NCC2;
        GridColoring gc = color_window({origin_x, origin_y}, width, height, basis, m);
        for (std::size_t i = 0; i < gc.colors.size(); ++i)
            colors[i] = static_cast<int32_t>(gc.colors[i]);
        return GC_OK;
    });
}

gc_status gc_num_colors(const int64_t vectors[4], int64_t* out) {
    if (!vectors || !out) return fail(GC_ERR_INVALID_ARG, "null argument");
    return guarded([&] {
        *out = num_colors(basis_of(vectors));
        return GC_OK;
    });
}

gc_status gc_check_window(gc_problem* p, const int32_t* colors, int width, int height,
                          int* conflict_found, int64_t conflict[4]) {
    if (!p || !colors || !conflict_found) return fail(GC_ERR_INVALID_ARG, "null argument");
    return guarded([&] {
        const HopField& field = p->hop_field();
        int h = p->params.hops;
        *conflict_found = 0;
        for (int y1 = 0; y1 < height && !*conflict_found; ++y1)
            for (int x1 = 0; x1 < width && !*conflict_found; ++x1) {
                int32_t c = colors[static_cast<std::size_t>(y1) * width + x1];
                // only offsets within the hop box can conflict
                int rb = field.radius_box();
                for (int y2 = y1; y2 <= std::min(height - 1, y1 + rb); ++y2) {
                    int x_lo = (y2 == y1) ? x1 + 1 : std::max(0, x1 - rb);
                    for (int x2 = x_lo; x2 <= std::min(width - 1, x1 + rb); ++x2) {
                        if (colors[static_cast<std::size_t>(y2) * width + x2] != c) continue;
                        if (field.hop_of({x2 - x1, y2 - y1}) <= h) {
                            *conflict_found = 1;
                            if (conflict) {
                                conflict[0] = x1;
                                conflict[1] = y1;
                                conflict[2] = x2;
                                conflict[3] = y2;
                            }
                            y2 = height;  // break out
                            break;
                        }
                    }
                }
            }
        return GC_OK;
    });
}

gc_status gc_greedy_color(gc_problem* p, int width, int height, gc_heuristic heuristic,
                          uint64_t seed, int32_t* colors, int64_t* num_colors) {
    if (!p || !colors || !num_colors) return fail(GC_ERR_INVALID_ARG, "null argument");
    if (width < 1 || height < 1) return fail(GC_ERR_INVALID_ARG, "grid must be at least 1x1");
    return guarded([&] {
        PriorityHeuristic h;
        switch (heuristic) {
            case GC_PRIORITY_LINE: h.kind = PriorityKind::LineColumn; break;
            case GC_PRIORITY_DIAGONAL: h.kind = PriorityKind::Diagonal; break;
            case GC_PRIORITY_CENTER: h.kind = PriorityKind::CenterDistance; break;
            case GC_PRIORITY_RANDOM: h.kind = PriorityKind::Random; break;
            default: return fail(GC_ERR_INVALID_ARG, "unknown heuristic");
        }
        h.seed = seed;
        GreedyColoring gc = greedy_color(width, height, p->params, h);
        for (std::size_t i = 0; i < gc.colors.size(); ++i)
            colors[i] = static_cast<int32_t>(gc.colors[i]);
        *num_colors = gc.num_colors;
        return GC_OK;
    });
}

gc_status gc_bounds(gc_problem* p, gc_bounds_report* out) {
    if (!p || !out) return fail(GC_ERR_INVALID_ARG, "null argument");
    return guarded([&] {
        out->lower = p->params.range.greater_than_sqrt2() ? lower_bound(p->params) : -1.0;
        out->upper = upper_bound(p->params);
        GeneratorBasis hex = near_hexagonal_basis(p->params);
        GeneratorBasis sq = near_square_basis(p->params);
        store_basis(hex, out->hexagonal);
        out->hexagonal_colors = hex.d;
        store_basis(sq, out->square);
        out->square_colors = sq.d;
        return GC_OK;
    });
}

} // extern "C"
