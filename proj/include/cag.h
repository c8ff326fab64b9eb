/* C interface to the contiguous boundary-guard solver.
 *
 * All objects are opaque handles; every function returns a cag_status and
 * writes results through out-parameters. Strings returned through `char**`
 * are heap-allocated and must be released with cag_string_free. On failure,
 * cag_last_error() returns a thread-local description of the problem.
 */
#ifndef CAG_H
#define CAG_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct cag_polygon cag_polygon;
typedef struct cag_solution cag_solution;

typedef enum {
    CAG_OK = 0,
    CAG_ERR_PARSE = 1,          /* malformed JSON or numbers */
    CAG_ERR_INVALID_INPUT = 2,  /* not a simple polygon, bad arguments */
    CAG_ERR_CAP_EXHAUSTED = 3,  /* solver step cap hit (indicates a bug) */
    CAG_ERR_VERIFY_FAILED = 4,  /* solution rejected by the verifier */
    CAG_ERR_INTERNAL = 5
} cag_status;

const char* cag_status_name(cag_status s);
const char* cag_last_error(void);
void cag_string_free(char* s);

/* Polygons ---------------------------------------------------------- */

/* JSON: {"vertices": [["x","y"], ...]}, coordinates as "p/q" or decimals. */
cag_status cag_polygon_parse(const char* json, cag_polygon** out);
cag_status cag_polygon_to_json(const cag_polygon* p, char** out);
int cag_polygon_vertex_count(const cag_polygon* p);
/* Deterministic random simple polygon on a 2^16 grid. */
cag_status cag_polygon_generate(int n, unsigned long long seed, cag_polygon** out);
void cag_polygon_free(cag_polygon* p);

/* Solving ----------------------------------------------------------- */

/* options_json may be NULL or an object with any of:
 *   "mode": "unrestricted" (default) | "interval-vertex" | "guard-vertex"
 *   "start": [edge, "s"]       (unrestricted mode only)
 *   "cap_constant": integer    (step cap multiplier, default 8)
 */
cag_status cag_solve(const cag_polygon* p, const char* options_json, cag_solution** out);
cag_status cag_solution_parse(const cag_polygon* p, const char* json, cag_solution** out);
cag_status cag_solution_to_json(const cag_solution* s, char** out);
int cag_solution_size(const cag_solution* s);
const char* cag_solution_certificate(const cag_solution* s);
void cag_solution_free(cag_solution* s);

/* Verification, rendering, benchmarking ----------------------------- */

/* CAG_OK when the solution is valid; CAG_ERR_VERIFY_FAILED otherwise, with
 * the first violation in *report (always set when non-NULL). */
cag_status cag_verify(const cag_polygon* p, const cag_solution* s, char** report);

/* solution may be NULL for an outline-only drawing. */
cag_status cag_render_svg(const cag_polygon* p, const cag_solution* s, char** svg);

/* params_json may be NULL or {"trials": int, "n_min": int, "n_max": int,
 * "seed": int}; returns the benchmark table as CSV. */
cag_status cag_bench(const char* params_json, char** csv);

#ifdef __cplusplus
}
#endif

#endif
