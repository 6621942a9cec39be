#ifndef CROSSPACK_H
#define CROSSPACK_H

/* C interface to the crosspack core: cross-ratio coordinates for circle
 * packings by one circle on surfaces with complex projective structures.
 *
 * Conventions:
 *   - every function returns a cpk_status; on failure cpk_last_error() holds
 *     a one-line machine-parsable reason ("code: message");
 *   - strings returned through char** are heap-allocated, release them with
 *     cpk_string_free();
 *   - opaque handles are released with their matching *_free function;
 *   - structured inputs and outputs use the JSON schemas documented in the
 *     README (pattern files, parameter files, reports, scenes).
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cpk_status {
    CPK_OK = 0,
    CPK_ERR_INVALID = 1,   /* bad input: parse failure, precondition violation */
    CPK_ERR_VERDICT = 2,   /* valid input with a negative mathematical verdict */
    CPK_ERR_INTERNAL = 3
} cpk_status;

/* Thread-local message for the most recent failure in this thread. */
const char* cpk_last_error(void);

void cpk_string_free(char* s);

/* ---- side-pairing patterns ---------------------------------------- */

/* Census of one-vertex triangulation patterns of genus g, canonical and
 * sorted, as a JSON array. */
cpk_status cpk_enumerate_patterns(int genus, char** json_out);

/* ---- cross-ratio words --------------------------------------------- */

typedef struct cpk_admissibility {
    int cls;            /* 0 strict, 1 boundary, 2 inadmissible */
    int from, to;       /* 1-based subword of the first violation, 0 if none */
    char condition;     /* violated entry 'a'|'b'|'c'|'d', 0 if none */
    double margin;      /* smallest slack over all sign conditions */
} cpk_admissibility;

cpk_status cpk_classify_vector(const double* entries, int n, cpk_admissibility* out);

/* ---- torus closed forms -------------------------------------------- */

cpk_status cpk_torus_dependent(double x, double y, double* z_out);

/* out = {re1, im1, re2, im2}, sign-normalized generator traces. */
cpk_status cpk_torus_traces(double x, double y, double z, double out[4]);

/* ---- parameter points ---------------------------------------------- */

typedef struct cpk_params cpk_params;

cpk_status cpk_params_parse(const char* json, cpk_params** out);
cpk_status cpk_params_load(const char* path, cpk_params** out);
cpk_status cpk_params_to_json(const cpk_params* p, char** json_out);
void cpk_params_free(cpk_params* p);

/* Dependent-triple solve: pattern JSON plus {"x3": v, ...} free values.
 * On success *report_json carries the solved triple and *params_json the
 * full parameter file. */
cpk_status cpk_solve(const char* pattern_json, const char* free_values_json,
                     char** report_json, char** params_json);

cpk_status cpk_verify(const cpk_params* p, char** report_json);

cpk_status cpk_holonomy_compare(const cpk_params* p, const cpk_params* other,
                                char** report_json);

/* ---- development ---------------------------------------------------- */

typedef struct cpk_scene cpk_scene;

cpk_status cpk_develop(const cpk_params* p, int depth, cpk_scene** out);
cpk_status cpk_scene_to_json(const cpk_scene* s, char** json_out);
cpk_status cpk_render_svg(const cpk_scene* s, double center_re, double center_im,
                          double half_width, double min_radius, double stroke_width,
                          char** svg_out);
void cpk_scene_free(cpk_scene* s);

#ifdef __cplusplus
}
#endif

#endif /* CROSSPACK_H */
