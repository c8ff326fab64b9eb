// Command-line front end for the contiguous boundary-guard solver. Links only
// the C API so it doubles as a smoke test of the shared library surface.
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cag.h"

namespace {

// Exit codes: 0 success, 1 verification failure, 2 parse/validation error,
// 3 solver cap exhausted.
int exit_code_for(cag_status st) {
    switch (st) {
        case CAG_OK: return 0;
        case CAG_ERR_VERIFY_FAILED: return 1;
        case CAG_ERR_CAP_EXHAUSTED: return 3;
        default: return 2;
    }
}

int fail(cag_status st, const std::string& context) {
    std::cerr << context << ": " << cag_status_name(st) << " (" << cag_last_error() << ")\n";
    return exit_code_for(st);
}

std::string read_file(const std::string& path, bool& ok) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        ok = false;
        return {};
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    ok = true;
    return buf.str();
}

bool write_output(const std::string& path, const std::string& data) {
    if (path.empty() || path == "-") {
        std::cout << data;
        return true;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) return false;
    out << data;
    return out.good();
}

struct PolygonHandle {
    cag_polygon* p = nullptr;
    ~PolygonHandle() { cag_polygon_free(p); }
};

struct SolutionHandle {
    cag_solution* s = nullptr;
    ~SolutionHandle() { cag_solution_free(s); }
};

struct StringHandle {
    char* s = nullptr;
    ~StringHandle() { cag_string_free(s); }
};

int load_polygon(const std::string& path, PolygonHandle& poly) {
    bool ok = false;
    std::string text = read_file(path, ok);
    if (!ok) {
        std::cerr << "cannot read " << path << "\n";
        return 2;
    }
    cag_status st = cag_polygon_parse(text.c_str(), &poly.p);
    if (st != CAG_OK) return fail(st, path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"contiguous boundary-guard solver"};
    app.require_subcommand(1);

    // solve
    std::string in_path, out_path, mode = "unrestricted", start;
    long cap_constant = 8;
    auto* solve = app.add_subcommand("solve", "partition the boundary with minimum guards");
    solve->add_option("input", in_path, "polygon JSON file")->required();
    solve->add_option("--mode", mode,
                      "unrestricted | interval-vertex | guard-vertex");
    solve->add_option("--start", start, "start boundary point as edge:s, e.g. 3:1/2");
    solve->add_option("--cap-constant", cap_constant, "step cap multiplier");
    solve->add_option("-o,--out", out_path, "output file (default stdout)");

    // verify
    std::string sol_path;
    auto* verify = app.add_subcommand("verify", "check a solution against a polygon");
    verify->add_option("input", in_path, "polygon JSON file")->required();
    verify->add_option("solution", sol_path, "solution JSON file")->required();

    // render
    std::string render_sol;
    auto* render = app.add_subcommand("render", "draw polygon (and solution) as SVG");
    render->add_option("input", in_path, "polygon JSON file")->required();
    render->add_option("solution", render_sol, "optional solution JSON file");
    render->add_option("-o,--out", out_path, "output SVG file (default stdout)");

    // gen
    int gen_n = 12;
    unsigned long long gen_seed = 1;
    auto* gen = app.add_subcommand("gen", "generate a random simple polygon");
    gen->add_option("n", gen_n, "vertex count")->required();
    gen->add_option("seed", gen_seed, "random seed")->required();
    gen->add_option("-o,--out", out_path, "output file (default stdout)");

    // bench
    int trials = 100, n_min = 6, n_max = 12;
    unsigned long long bench_seed = 1;
    auto* bench = app.add_subcommand("bench", "revolution statistics over random polygons");
    bench->add_option("--trials", trials, "number of trials");
    bench->add_option("--n-min", n_min, "smallest polygon size");
    bench->add_option("--n-max", n_max, "largest polygon size");
    bench->add_option("--seed", bench_seed, "base seed");
    bench->add_option("-o,--out", out_path, "output CSV file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    if (solve->parsed()) {
        PolygonHandle poly;
        if (int rc = load_polygon(in_path, poly)) return rc;
        std::ostringstream opts;
        opts << "{\"mode\":\"" << mode << "\",\"cap_constant\":" << cap_constant;
        if (!start.empty()) {
            auto colon = start.find(':');
            if (colon == std::string::npos) {
                std::cerr << "--start expects edge:s\n";
                return 2;
            }
            opts << ",\"start\":[" << start.substr(0, colon) << ",\""
                 << start.substr(colon + 1) << "\"]";
        }
        opts << "}";
        SolutionHandle sol;
        cag_status st = cag_solve(poly.p, opts.str().c_str(), &sol.s);
        if (st != CAG_OK) return fail(st, "solve");
        StringHandle json;
        st = cag_solution_to_json(sol.s, &json.s);
        if (st != CAG_OK) return fail(st, "serialize");
        if (!write_output(out_path, std::string(json.s) + "\n")) {
            std::cerr << "cannot write " << out_path << "\n";
            return 2;
        }
        return 0;
    }

    if (verify->parsed()) {
        PolygonHandle poly;
        if (int rc = load_polygon(in_path, poly)) return rc;
        bool ok = false;
        std::string sol_text = read_file(sol_path, ok);
        if (!ok) {
            std::cerr << "cannot read " << sol_path << "\n";
            return 2;
        }
        SolutionHandle sol;
        cag_status st = cag_solution_parse(poly.p, sol_text.c_str(), &sol.s);
        if (st != CAG_OK) return fail(st, sol_path);
        StringHandle report;
        st = cag_verify(poly.p, sol.s, &report.s);
        if (st == CAG_OK) {
            std::cout << "pass\n";
            return 0;
        }
        if (st == CAG_ERR_VERIFY_FAILED) {
            std::cerr << "fail: " << (report.s ? report.s : "") << "\n";
            return 1;
        }
        return fail(st, "verify");
    }

    if (render->parsed()) {
        PolygonHandle poly;
        if (int rc = load_polygon(in_path, poly)) return rc;
        SolutionHandle sol;
        if (!render_sol.empty()) {
            bool ok = false;
            std::string sol_text = read_file(render_sol, ok);
            if (!ok) {
                std::cerr << "cannot read " << render_sol << "\n";
                return 2;
            }
            cag_status st = cag_solution_parse(poly.p, sol_text.c_str(), &sol.s);
            if (st != CAG_OK) return fail(st, render_sol);
        }
        StringHandle svg;
        cag_status st = cag_render_svg(poly.p, sol.s, &svg.s);
        if (st != CAG_OK) return fail(st, "render");
        if (!write_output(out_path, svg.s)) {
            std::cerr << "cannot write " << out_path << "\n";
            return 2;
        }
        return 0;
    }

    if (gen->parsed()) {
        PolygonHandle poly;
        cag_status st = cag_polygon_generate(gen_n, gen_seed, &poly.p);
        if (st != CAG_OK) return fail(st, "gen");
        StringHandle json;
        st = cag_polygon_to_json(poly.p, &json.s);
        if (st != CAG_OK) return fail(st, "serialize");
        if (!write_output(out_path, std::string(json.s) + "\n")) {
            std::cerr << "cannot write " << out_path << "\n";
            return 2;
        }
        return 0;
    }

    if (bench->parsed()) {
        std::ostringstream params;
        params << "{\"trials\":" << trials << ",\"n_min\":" << n_min << ",\"n_max\":" << n_max
               << ",\"seed\":" << bench_seed << "}";
        StringHandle csv;
        cag_status st = cag_bench(params.str().c_str(), &csv.s);
        if (st != CAG_OK) return fail(st, "bench");
        if (!write_output(out_path, csv.s)) {
            std::cerr << "cannot write " << out_path << "\n";
            return 2;
        }
        return 0;
    }

    return 2;
}
