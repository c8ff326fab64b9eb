#include "cag.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>

#include <nlohmann/json.hpp>

#include "cag/polygon.hpp"
#include "cag/restricted.hpp"
#include "cag/solver.hpp"
#include "cag/svg.hpp"
#include "cag/verify.hpp"

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

// Solutions carry their mode so verify/render can dispatch.
struct SolutionBox {
    bool restricted = false;
    cag::Solution unres;
    cag::RestrictedSolution res;
    std::string certificate;
    int size = 0;
};

template <typename F>
cag_status guarded(F&& f) {
    try {
        f();
        return CAG_OK;
    } catch (const cag::MalformedNumber& e) {
        g_last_error = e.what();
        return CAG_ERR_PARSE;
    } catch (const cag::PolygonError& e) {
        g_last_error = e.what();
        return CAG_ERR_INVALID_INPUT;
    } catch (const cag::CapExhaustedError& e) {
        g_last_error = e.what();
        return CAG_ERR_CAP_EXHAUSTED;
    } catch (const std::invalid_argument& e) {
        g_last_error = e.what();
        return CAG_ERR_INVALID_INPUT;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return CAG_ERR_INTERNAL;
    }
}

}  // namespace

struct cag_polygon {
    cag::Polygon poly;
};

struct cag_solution {
    SolutionBox box;
    // Solutions are tied to the polygon they were produced from.
    cag::Polygon poly;
};

extern "C" {

const char* cag_status_name(cag_status s) {
    switch (s) {
        case CAG_OK: return "ok";
        case CAG_ERR_PARSE: return "parse error";
        case CAG_ERR_INVALID_INPUT: return "invalid input";
        case CAG_ERR_CAP_EXHAUSTED: return "cap exhausted";
        case CAG_ERR_VERIFY_FAILED: return "verification failed";
        case CAG_ERR_INTERNAL: return "internal error";
    }
    return "?";
}

const char* cag_last_error(void) { return g_last_error.c_str(); }

void cag_string_free(char* s) { std::free(s); }

cag_status cag_polygon_parse(const char* json, cag_polygon** out) {
    if (!json || !out) {
        g_last_error = "null argument";
        return CAG_ERR_INVALID_INPUT;
    }
    return guarded([&] { *out = new cag_polygon{cag::parse_polygon(json)}; });
}

cag_status cag_polygon_to_json(const cag_polygon* p, char** out) {
    if (!p || !out) {
        g_last_error = "null argument";
        return CAG_ERR_INVALID_INPUT;
    }
    return guarded([&] { *out = dup_string(cag::polygon_to_json(p->poly)); });
}

int cag_polygon_vertex_count(const cag_polygon* p) { return p ? p->poly.size() : 0; }

cag_status cag_polygon_generate(int n, unsigned long long seed, cag_polygon** out) {
    if (!out) {
        g_last_error = "null argument";
        return CAG_ERR_INVALID_INPUT;
    }
    return guarded([&] { *out = new cag_polygon{cag::random_polygon(n, seed)}; });
}

void cag_polygon_free(cag_polygon* p) { delete p; }

cag_status cag_solve(const cag_polygon* p, const char* options_json, cag_solution** out) {
    if (!p || !out) {
        g_last_error = "null argument";
        return CAG_ERR_INVALID_INPUT;
    }
    return guarded([&] {
        std::string mode = "unrestricted";
        cag::SolveOptions opts;
        if (options_json && *options_json) {
            nlohmann::json j = nlohmann::json::parse(options_json);
            mode = j.value("mode", "unrestricted");
            if (j.contains("cap_constant")) opts.cap_constant = j["cap_constant"].get<long>();
            if (j.contains("start")) {
                const auto& st = j["start"];
                int edge = st.at(0).get<int>();
                cag::Rational s =
                    st.at(1).is_string() ? cag::parse_rational(st.at(1).get<std::string>())
                                         : cag::Rational(static_cast<long>(st.at(1).get<long long>()));
                opts.start = cag::canonical_boundary_point(p->poly, edge, s);
            }
        }
        auto sol = std::make_unique<cag_solution>(cag_solution{SolutionBox{}, p->poly});
        if (mode == "unrestricted") {
            sol->box.unres = cag::solve(p->poly, opts);
            sol->box.size = sol->box.unres.size;
            sol->box.certificate = cag::certificate_kind_name(sol->box.unres.certificate.kind);
        } else if (mode == "interval-vertex") {
            sol->box.restricted = true;
            sol->box.res = cag::solve_interval_restricted(p->poly);
            sol->box.size = sol->box.res.size;
            sol->box.certificate = "Restricted";
        } else if (mode == "guard-vertex") {
            sol->box.restricted = true;
            sol->box.res = cag::solve_guard_restricted(p->poly);
            sol->box.size = sol->box.res.size;
            sol->box.certificate = "Restricted";
        } else {
            throw std::invalid_argument("unknown mode: " + mode);
        }
        *out = sol.release();
    });
}

cag_status cag_solution_parse(const cag_polygon* p, const char* json, cag_solution** out) {
    if (!p || !json || !out) {
        g_last_error = "null argument";
        return CAG_ERR_INVALID_INPUT;
    }
    return guarded([&] {
        auto sol = std::make_unique<cag_solution>(cag_solution{SolutionBox{}, p->poly});
        sol->box.unres = cag::solution_from_json(p->poly, json);
        sol->box.size = sol->box.unres.size;
        sol->box.certificate = cag::certificate_kind_name(sol->box.unres.certificate.kind);
        *out = sol.release();
    });
}

cag_status cag_solution_to_json(const cag_solution* s, char** out) {
    if (!s || !out) {
        g_last_error = "null argument";
        return CAG_ERR_INVALID_INPUT;
    }
    return guarded([&] {
        *out = dup_string(s->box.restricted ? cag::restricted_to_json(s->poly, s->box.res)
                                            : cag::solution_to_json(s->poly, s->box.unres));
    });
}

int cag_solution_size(const cag_solution* s) { return s ? s->box.size : 0; }

const char* cag_solution_certificate(const cag_solution* s) {
    return s ? s->box.certificate.c_str() : "";
}

void cag_solution_free(cag_solution* s) { delete s; }

cag_status cag_verify(const cag_polygon* p, const cag_solution* s, char** report) {
    if (!p || !s) {
        g_last_error = "null argument";
        return CAG_ERR_INVALID_INPUT;
    }
    cag::VerifyReport rep;
    cag_status st = guarded([&] {
        rep = s->box.restricted ? cag::verify_restricted(p->poly, s->box.res)
                                : cag::verify_solution(p->poly, s->box.unres);
    });
    if (st != CAG_OK) return st;
    if (report) *report = dup_string(rep.pass ? "pass" : rep.first_violation);
    if (!rep.pass) {
        g_last_error = rep.first_violation;
        return CAG_ERR_VERIFY_FAILED;
    }
    return CAG_OK;
}

cag_status cag_render_svg(const cag_polygon* p, const cag_solution* s, char** svg) {
    if (!p || !svg) {
        g_last_error = "null argument";
        return CAG_ERR_INVALID_INPUT;
    }
    return guarded([&] {
        if (!s) {
            *svg = dup_string(cag::render_svg(p->poly, nullptr));
            return;
        }
        if (s->box.restricted) {
            // Restricted chains render through the shared schema.
            cag::Solution view;
            view.size = s->box.res.size;
            view.certificate.kind = cag::CertificateKind::Repetition;
            for (const cag::Arc& a : s->box.res.chains) {
                cag::GreedyStep c;
                c.start = a.interval.start;
                c.end = a.interval.end;
                c.guard = a.guard;
                c.full_wrap = s->box.res.chains.size() == 1 && a.interval.start == a.interval.end;
                view.chains.push_back(c);
            }
            *svg = dup_string(cag::render_svg(p->poly, &view));
        } else {
            *svg = dup_string(cag::render_svg(p->poly, &s->box.unres));
        }
    });
}

cag_status cag_bench(const char* params_json, char** csv) {
    if (!csv) {
        g_last_error = "null argument";
        return CAG_ERR_INVALID_INPUT;
    }
    return guarded([&] {
        cag::BenchParams params;
        if (params_json && *params_json) {
            nlohmann::json j = nlohmann::json::parse(params_json);
            params.trials = j.value("trials", params.trials);
            params.n_min = j.value("n_min", params.n_min);
            params.n_max = j.value("n_max", params.n_max);
            params.seed = j.value("seed", params.seed);
        }
        *csv = dup_string(cag::bench_csv(cag::bench_revolutions(params)));
    });
}

}  // extern "C"
