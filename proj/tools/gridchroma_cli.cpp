// gridchroma command-line tool. Talks to the core only through the C API.

#include "gridchroma.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

struct ProblemHandle {
    gc_problem* p = nullptr;
    ~ProblemHandle() { gc_problem_destroy(p); }
};

// GC_ERR_INVALID_ARG -> usage (2); everything else -> domain failure (1)
int exit_code_for(gc_status st) {
    return st == GC_ERR_INVALID_ARG ? kExitUsage : kExitDomain;
}

int report_error(gc_status st) {
    std::cerr << "error: " << gc_last_error() << "\n";
    return exit_code_for(st);
}

bool parse_vectors(const std::string& s, int64_t out[4]) {
    long long v[4];
    char extra;
    if (std::sscanf(s.c_str(), "%lld,%lld,%lld,%lld%c", &v[0], &v[1], &v[2], &v[3], &extra) != 4)
        return false;
    for (int i = 0; i < 4; ++i) out[i] = v[i];
    return true;
}

json document(const std::string& range, int hops, const std::string& method, int width, int height,
              int64_t ox, int64_t oy, int64_t num_colors, const std::vector<int32_t>& colors) {
    json doc;
    doc["schema_version"] = 1;
    doc["range"] = range;  // original decimal string: rational round-trips exactly
    doc["hops"] = hops;
    doc["method"] = method;
    doc["vectors"] = nullptr;
    doc["width"] = width;
    doc["height"] = height;
    doc["origin"] = {ox, oy};
    doc["num_colors"] = num_colors;
    doc["colors"] = colors;
    return doc;
}

bool write_file(const std::string& path, const std::string& data) {
    std::ofstream f(path, std::ios::binary);
    f.write(data.data(), static_cast<std::streamsize>(data.size()));
    return static_cast<bool>(f);
}

void write_csv(const std::string& path, int width, int height, const std::vector<int32_t>& colors) {
    std::ofstream f(path);
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            if (x) f << ',';
            f << colors[static_cast<std::size_t>(y) * width + x];
        }
        f << '\n';
    }
}

// evenly spaced hues, full saturation ramp: distinct and deterministic
void palette_color(int64_t idx, int64_t n, unsigned char rgb[3]) {
    double h = 360.0 * static_cast<double>(idx) / static_cast<double>(n);
    double s = 0.85, v = 0.92;
    double c = v * s;
    double hp = h / 60.0;
    double x = c * (1.0 - std::fabs(std::fmod(hp, 2.0) - 1.0));
    double r = 0, g = 0, b = 0;
    if (hp < 1) { r = c; g = x; }
    else if (hp < 2) { r = x; g = c; }
    else if (hp < 3) { g = c; b = x; }
    else if (hp < 4) { g = x; b = c; }
    else if (hp < 5) { r = x; b = c; }
    else { r = c; b = x; }
    double m = v - c;
    rgb[0] = static_cast<unsigned char>(std::lround((r + m) * 255.0));
    rgb[1] = static_cast<unsigned char>(std::lround((g + m) * 255.0));
    rgb[2] = static_cast<unsigned char>(std::lround((b + m) * 255.0));
}

int cmd_solve(const std::string& range, int hops, const std::string& emit) {
    ProblemHandle ph;
    gc_status st = gc_problem_create(range.c_str(), hops, &ph.p);
    if (st != GC_OK) return report_error(st);

    auto t0 = std::chrono::steady_clock::now();
    gc_solution sol;
    st = gc_solve(ph.p, &sol);
    if (st != GC_OK) return report_error(st);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    gc_bounds_report b;
    if ((st = gc_bounds(ph.p, &b)) != GC_OK) return report_error(st);

    if (emit == "json") {
        json out;
        out["range"] = range;
        out["hops"] = hops;
        out["vectors"] = {{sol.vectors[0], sol.vectors[1]}, {sol.vectors[2], sol.vectors[3]}};
        out["num_colors"] = sol.num_colors;
        out["candidates_examined"] = sol.candidates_examined;
        out["validity_method"] = sol.validity_method == 2 ? "VC2" : "VC1";
        out["lower_bound"] = b.lower < 0 ? json(nullptr) : json(b.lower);
        out["upper_bound"] = b.upper;
        out["seconds"] = secs;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "optimal vectors: (" << sol.vectors[0] << "," << sol.vectors[1] << ") ("
                  << sol.vectors[2] << "," << sol.vectors[3] << ")\n";
        std::cout << "colors:          " << sol.num_colors << "\n";
        if (b.lower >= 0)
            std::cout << "lower bound:     " << b.lower << "\n";
        else
            std::cout << "lower bound:     n/a (R <= sqrt(2))\n";
        std::cout << "upper bound:     " << b.upper << "\n";
        std::cout << "candidates:      " << sol.candidates_examined << "\n";
        std::cout << "validity:        " << (sol.validity_method == 2 ? "VC2" : "VC1") << "\n";
        std::cout << "time:            " << secs << " s\n";
    }
    return kExitOk;
}

int cmd_color(const std::string& range, int hops, int width, int height,
              const std::optional<std::string>& vectors_str, const std::string& method,
              int64_t ox, int64_t oy, const std::string& out_path,
              const std::optional<std::string>& csv_path) {
    ProblemHandle ph;
    gc_status st = gc_problem_create(range.c_str(), hops, &ph.p);
    if (st != GC_OK) return report_error(st);

    int64_t vectors[4];
    if (vectors_str) {
        if (!parse_vectors(*vectors_str, vectors)) {
            std::cerr << "error: --vectors expects x1,y1,x2,y2\n";
            return kExitUsage;
        }
        int valid = 0;
        int64_t witness[2] = {0, 0};
        st = gc_verify(ph.p, vectors, GC_VC_AUTO, &valid, witness);
        if (st != GC_OK) return report_error(st);
        if (!valid) {
            std::cerr << "error: vectors are not a valid " << hops << "-hop coloring; witness ("
                      << witness[0] << "," << witness[1] << ")\n";
            return kExitDomain;
        }
    } else {
        gc_solution sol;
        st = gc_solve(ph.p, &sol);
        if (st != GC_OK) return report_error(st);
        for (int i = 0; i < 4; ++i) vectors[i] = sol.vectors[i];
    }

    std::vector<int32_t> colors(static_cast<std::size_t>(width) * height);
    gc_color_method m = method == "ncc1" ? GC_NCC1 : GC_NCC2;
    st = gc_color_window(ph.p, vectors, m, ox, oy, width, height, colors.data());
    if (st != GC_OK) return report_error(st);

    // post-hoc window verification
    int conflict = 0;
    int64_t where[4];
    st = gc_check_window(ph.p, colors.data(), width, height, &conflict, where);
    if (st != GC_OK) return report_error(st);
    if (conflict) {
        std::cerr << "error: window verification failed: (" << where[0] << "," << where[1]
                  << ") and (" << where[2] << "," << where[3] << ") share a color within " << hops
                  << " hops\n";
        return kExitDomain;
    }

    int64_t nc = 0;
    gc_num_colors(vectors, &nc);
    json doc = document(range, hops, method, width, height, ox, oy, nc, colors);
    doc["vectors"] = {{vectors[0], vectors[1]}, {vectors[2], vectors[3]}};
    if (!write_file(out_path, doc.dump(2) + "\n")) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return kExitDomain;
    }
    if (csv_path) write_csv(*csv_path, width, height, colors);
    std::cout << "wrote " << out_path << " (" << nc << " colors)\n";
    return kExitOk;
}

int cmd_verify(const std::string& range, int hops, const std::string& vectors_str,
               const std::string& method) {
    ProblemHandle ph;
    gc_status st = gc_problem_create(range.c_str(), hops, &ph.p);
    if (st != GC_OK) return report_error(st);

    int64_t vectors[4];
    if (!parse_vectors(vectors_str, vectors)) {
        std::cerr << "error: --vectors expects x1,y1,x2,y2\n";
        return kExitUsage;
    }
    gc_verify_method m = GC_VC_AUTO;
    if (method == "vc1") m = GC_VC1;
    else if (method == "vc2") m = GC_VC2;

    int valid = 0;
    int64_t witness[2] = {0, 0};
    st = gc_verify(ph.p, vectors, m, &valid, witness);
    if (st == GC_ERR_DOMAIN) {
        // asking for vc2 outside its precondition is a usage error here
        std::cerr << "error: " << gc_last_error() << "\n";
        return kExitUsage;
    }
    if (st != GC_OK) return report_error(st);
    if (valid) {
        std::cout << "valid\n";
        return kExitOk;
    }
    std::cout << "invalid: witness (" << witness[0] << "," << witness[1] << ")\n";
    return kExitDomain;
}

int cmd_greedy(const std::string& range, int hops, int width, int height,
               const std::string& priority, uint64_t seed, const std::string& out_path) {
    ProblemHandle ph;
    gc_status st = gc_problem_create(range.c_str(), hops, &ph.p);
    if (st != GC_OK) return report_error(st);

    gc_heuristic h;
    if (priority == "line") h = GC_PRIORITY_LINE;
    else if (priority == "diagonal") h = GC_PRIORITY_DIAGONAL;
    else if (priority == "center") h = GC_PRIORITY_CENTER;
    else if (priority == "random") h = GC_PRIORITY_RANDOM;
    else {
        std::cerr << "error: --priority must be line|diagonal|center|random\n";
        return kExitUsage;
    }

    std::vector<int32_t> colors(static_cast<std::size_t>(width) * height);
    int64_t nc = 0;
    st = gc_greedy_color(ph.p, width, height, h, seed, colors.data(), &nc);
    if (st != GC_OK) return report_error(st);

    json doc = document(range, hops, "greedy", width, height, 0, 0, nc, colors);
    doc["heuristic"] = priority;
    if (priority == "random") doc["seed"] = seed;
    if (!write_file(out_path, doc.dump(2) + "\n")) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return kExitDomain;
    }
    std::cout << nc << " colors\n";
    return kExitOk;
}

int cmd_bounds(const std::string& range, int hops) {
    ProblemHandle ph;
    gc_status st = gc_problem_create(range.c_str(), hops, &ph.p);
    if (st != GC_OK) return report_error(st);

    gc_bounds_report b;
    st = gc_bounds(ph.p, &b);
    if (st != GC_OK) return report_error(st);

    if (b.lower >= 0)
        std::cout << "lower bound:        " << b.lower << "\n";
    else
        std::cout << "lower bound:        n/a (R <= sqrt(2))\n";
    std::cout << "upper bound:        " << b.upper << "\n";
    std::cout << "near-hexagonal:     (" << b.hexagonal[0] << "," << b.hexagonal[1] << ") ("
              << b.hexagonal[2] << "," << b.hexagonal[3] << ") -> " << b.hexagonal_colors
              << " colors\n";
    std::cout << "near-square:        (" << b.square[0] << "," << b.square[1] << ") ("
              << b.square[2] << "," << b.square[3] << ") -> " << b.square_colors << " colors\n";
    return kExitOk;
}

int cmd_render(const std::string& in_path, const std::string& out_path) {
    std::ifstream f(in_path);
    if (!f) {
        std::cerr << "error: cannot read " << in_path << "\n";
        return kExitDomain;
    }
    json doc;
    try {
        f >> doc;
    } catch (const std::exception& e) {
        std::cerr << "error: malformed document: " << e.what() << "\n";
        return kExitDomain;
    }

    int width, height;
    int64_t nc;
    std::vector<int32_t> colors;
    try {
        width = doc.at("width").get<int>();
        height = doc.at("height").get<int>();
        nc = doc.at("num_colors").get<int64_t>();
        colors = doc.at("colors").get<std::vector<int32_t>>();
        if (width < 1 || height < 1 || nc < 1 ||
            colors.size() != static_cast<std::size_t>(width) * height)
            throw std::runtime_error("inconsistent dimensions");
        for (int32_t c : colors)
            if (c < 0 || c >= nc) throw std::runtime_error("color out of range");
    } catch (const std::exception& e) {
        std::cerr << "error: malformed document: " << e.what() << "\n";
        return kExitDomain;
    }

    constexpr int kCell = 10;
    int pw = width * kCell;
    int phh = height * kCell;
    std::string img;
    img.reserve(static_cast<std::size_t>(pw) * phh * 3 + 32);
    img += "P6\n" + std::to_string(pw) + " " + std::to_string(phh) + "\n255\n";
    for (int py = phh - 1; py >= 0; --py) {  // y grows upward in grid coordinates
        for (int px = 0; px < pw; ++px) {
            int32_t c = colors[static_cast<std::size_t>(py / kCell) * width + px / kCell];
            unsigned char rgb[3];
            palette_color(c, nc, rgb);
            img.append(reinterpret_cast<char*>(rgb), 3);
        }
    }
    if (!write_file(out_path, img)) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return kExitDomain;
    }
    std::cout << "wrote " << out_path << " (" << pw << "x" << phh << ")\n";
    return kExitOk;
}

int count_distinct(const std::vector<int32_t>& colors) {
    std::vector<int32_t> c = colors;
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    return static_cast<int>(c.size());
}

int cmd_tables(int which) {
    if (which == 2) {
        const char* ranges[] = {"1", "1.5", "2", "2.5", "3", "3.5", "4",
                                "4.5", "5", "5.5", "6", "6.5", "7"};
        const int64_t expect2[] = {5, 9, 13, 23, 33, 39, 53, 75, 94, 105, 124, 150, 166};
        const int64_t expect3[] = {8, 16, 25, 45, 68, 80, 112, 157, 198, 224, 269, 323, 352};
        bool all_pass = true;
        std::printf("%-6s %-6s %-22s %-8s %-8s %s\n", "R", "h", "vectors", "colors", "reference", "status");
        for (int h = 2; h <= 3; ++h) {
            for (int i = 0; i < 13; ++i) {
                ProblemHandle ph;
                if (gc_problem_create(ranges[i], h, &ph.p) != GC_OK) return kExitDomain;
                gc_solution sol;
                if (gc_solve(ph.p, &sol) != GC_OK) return kExitDomain;
                int64_t expect = h == 2 ? expect2[i] : expect3[i];
                bool pass = sol.num_colors == expect;
                all_pass = all_pass && pass;
                char vec[64];
                std::snprintf(vec, sizeof vec, "(%lld,%lld) (%lld,%lld)",
                              (long long)sol.vectors[0], (long long)sol.vectors[1],
                              (long long)sol.vectors[2], (long long)sol.vectors[3]);
                std::printf("%-6s %-6d %-22s %-8lld %-8lld %s\n", ranges[i], h, vec,
                            (long long)sol.num_colors, (long long)expect, pass ? "PASS" : "FAIL");
            }
        }
        return all_pass ? kExitOk : kExitDomain;
    }

    if (which == 3) {
        struct Row { const char* range; int size; int ref_vcm; int ref_line; };
        const Row rows[] = {
            {"1", 10, 8, 8},    {"1", 20, 8, 8},    {"1", 30, 8, 8},
            {"1.5", 10, 16, 16}, {"1.5", 20, 16, 16}, {"1.5", 30, 16, 16},
            {"2", 10, 25, 30},  {"2", 20, 25, 33},  {"2", 30, 25, 33},
            {"3", 20, 68, 80},  {"3", 30, 68, 83},
            {"3.5", 20, 80, 91}, {"3.5", 30, 80, 91},
        };
        std::printf("%-6s %-8s %-10s %-10s %-12s %s\n", "R", "grid", "VCM", "VCM(reference)",
                    "line", "line(reference)");
        for (const Row& row : rows) {
            ProblemHandle ph;
            if (gc_problem_create(row.range, 3, &ph.p) != GC_OK) return kExitDomain;
            gc_solution sol;
            if (gc_solve(ph.p, &sol) != GC_OK) return kExitDomain;
            std::vector<int32_t> win(static_cast<std::size_t>(row.size) * row.size);
            if (gc_color_window(ph.p, sol.vectors, GC_NCC2, 0, 0, row.size, row.size, win.data()) != GC_OK)
                return kExitDomain;
            int vcm_used = count_distinct(win);
            int64_t greedy_nc = 0;
            std::vector<int32_t> gw(win.size());
            if (gc_greedy_color(ph.p, row.size, row.size, GC_PRIORITY_LINE, 0, gw.data(), &greedy_nc) != GC_OK)
                return kExitDomain;
            std::printf("%-6s %dx%-5d %-10d %-10d %-12lld %d\n", row.range, row.size, row.size,
                        vcm_used, row.ref_vcm, (long long)greedy_nc, row.ref_line);
        }
        return kExitOk;
    }

    if (which == 1) {
        struct Row { int size; const char* range; int reference[4]; };
        // reference columns: line/column, diagonal, center-distance, random
        const Row rows[] = {
            {10, "1", {8, 8, 8, 13}},
            {10, "2", {30, 28, 30, 36}},
            {20, "1", {15, 8, 8, 14}},
            {20, "2", {33, 29, 30, 41}},
        };
        const gc_heuristic hs[] = {GC_PRIORITY_LINE, GC_PRIORITY_DIAGONAL, GC_PRIORITY_CENTER,
                                   GC_PRIORITY_RANDOM};
        const char* names[] = {"line/column", "diagonal", "center", "random"};
        std::printf("%-8s %-6s %-14s %-10s %s\n", "grid", "R", "priority", "colors", "reference");
        for (const Row& row : rows) {
            ProblemHandle ph;
            if (gc_problem_create(row.range, 3, &ph.p) != GC_OK) return kExitDomain;
            for (int i = 0; i < 4; ++i) {
                std::vector<int32_t> gw(static_cast<std::size_t>(row.size) * row.size);
                int64_t nc = 0;
                if (gc_greedy_color(ph.p, row.size, row.size, hs[i], 0, gw.data(), &nc) != GC_OK)
                    return kExitDomain;
                std::printf("%dx%-6d %-6s %-14s %-10lld %d\n", row.size, row.size, row.range,
                            names[i], (long long)nc, row.reference[i]);
            }
        }
        return kExitOk;
    }

    std::cerr << "error: --which must be 1, 2 or 3\n";
    return kExitUsage;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Optimal periodic h-hop colorings of grid wireless sensor networks"};
    app.require_subcommand(1);

    std::string range = "1", emit = "text", method = "ncc2", vmethod = "auto";
    std::string vectors_str, priority = "line", out_path, in_path, csv_path;
    int hops = 3, width = 10, height = 10, which = 2;
    int64_t ox = 0, oy = 0;
    uint64_t seed = 0;
    bool have_vectors = false, have_csv = false;

    auto* solve = app.add_subcommand("solve", "Find optimal generator vectors (Method OVS)");
    solve->add_option("--range", range, "radio range R (decimal, >= 1)")->required();
    solve->add_option("--hops", hops, "hop count h (>= 1)")->required();
    solve->add_option("--emit", emit, "output format: text|json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* color = app.add_subcommand("color", "Color a finite window of the grid");
    color->add_option("--range", range)->required();
    color->add_option("--hops", hops)->required();
    color->add_option("--width", width)->required();
    color->add_option("--height", height)->required();
    auto* vopt = color->add_option("--vectors", vectors_str, "x1,y1,x2,y2 (default: solve)");
    color->add_option("--method", method)->check(CLI::IsMember({"ncc1", "ncc2"}));
    color->add_option("--origin-x", ox);
    color->add_option("--origin-y", oy);
    color->add_option("--out", out_path, "output JSON document")->required();
    auto* csvopt = color->add_option("--csv", csv_path, "also write colors as CSV");

    auto* verify = app.add_subcommand("verify", "Check validity of generator vectors");
    verify->add_option("--range", range)->required();
    verify->add_option("--hops", hops)->required();
    verify->add_option("--vectors", vectors_str, "x1,y1,x2,y2")->required();
    verify->add_option("--method", vmethod)->check(CLI::IsMember({"vc1", "vc2", "auto"}));

    auto* greedy = app.add_subcommand("greedy", "Greedy FirstFit coloring of a finite grid");
    greedy->add_option("--range", range)->required();
    greedy->add_option("--hops", hops)->required();
    greedy->add_option("--width", width)->required();
    greedy->add_option("--height", height)->required();
    greedy->add_option("--priority", priority, "line|diagonal|center|random");
    greedy->add_option("--seed", seed, "seed for random priority");
    greedy->add_option("--out", out_path)->required();

    auto* bounds = app.add_subcommand("bounds", "Analytic bounds and constructive bases");
    bounds->add_option("--range", range)->required();
    bounds->add_option("--hops", hops)->required();

    auto* render = app.add_subcommand("render", "Render a coloring document to a PPM image");
    render->add_option("--in", in_path)->required();
    render->add_option("--out", out_path)->required();

    auto* tables = app.add_subcommand("tables", "Reproduce the reference tables");
    tables->add_option("--which", which, "1, 2 or 3")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_name() == "CallForHelp" ? kExitOk : kExitUsage;
    }

    have_vectors = vopt->count() > 0;
    have_csv = csvopt->count() > 0;

    if (solve->parsed()) return cmd_solve(range, hops, emit);
    if (color->parsed())
        return cmd_color(range, hops, width, height,
                         have_vectors ? std::optional<std::string>(vectors_str) : std::nullopt,
                         method, ox, oy, out_path,
                         have_csv ? std::optional<std::string>(csv_path) : std::nullopt);
    if (verify->parsed()) return cmd_verify(range, hops, vectors_str, vmethod);
    if (greedy->parsed()) return cmd_greedy(range, hops, width, height, priority, seed, out_path);
    if (bounds->parsed()) return cmd_bounds(range, hops);
    if (render->parsed()) return cmd_render(in_path, out_path);
    if (tables->parsed()) return cmd_tables(which);
    return kExitUsage;
}
