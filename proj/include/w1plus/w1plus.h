/* w1plus: W1+ geodesics and entropy convexity checks on finite graphs.
 *
 * C API over the C++ core. All objects are opaque handles owned by the
 * caller and released with the matching *_free function. Functions that can
 * fail return a status code (or NULL for constructors); w1p_last_error()
 * returns a thread-local description of the most recent failure.
 */
#ifndef W1PLUS_H
#define W1PLUS_H

#include <stddef.h>

#if defined(_WIN32)
#define W1P_API __declspec(dllexport)
#elif defined(__GNUC__)
#define W1P_API __attribute__((visibility("default")))
#else
#define W1P_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum w1p_status {
  W1P_OK = 0,
  W1P_ERR_INVALID = 1,    /* bad argument or malformed input */
  W1P_ERR_PARSE = 2,      /* unreadable file or scenario document */
  W1P_ERR_NOCONV = 3,     /* iterative solver exhausted its budget */
  W1P_ERR_INTERNAL = 4    /* invariant violation inside the library */
} w1p_status;

typedef struct w1p_graph w1p_graph;
typedef struct w1p_measure w1p_measure;
typedef struct w1p_curve w1p_curve;

W1P_API const char* w1p_last_error(void);

/* --- graphs --------------------------------------------------------- */

W1P_API w1p_graph* w1p_graph_path(int n);
W1P_API w1p_graph* w1p_graph_cycle(int n);
W1P_API w1p_graph* w1p_graph_complete(int n);
W1P_API w1p_graph* w1p_graph_hypercube(int dim);
W1P_API w1p_graph* w1p_graph_product(const w1p_graph* a, const w1p_graph* b);
W1P_API w1p_graph* w1p_graph_from_edge_list(const char* path);
W1P_API void w1p_graph_free(w1p_graph* g);

W1P_API int w1p_graph_vertex_count(const w1p_graph* g);
W1P_API int w1p_graph_edge_count(const w1p_graph* g);
/* Graph distance, or -1 on invalid vertices. */
W1P_API int w1p_graph_dist(const w1p_graph* g, int u, int v);
/* Number of geodesics between u and v, or -1 on error. */
W1P_API long w1p_graph_geodesic_count(const w1p_graph* g, int u, int v);

/* --- measures -------------------------------------------------------- */

/* Masses must be non-negative and sum to 1 within 1e-6 (renormalized). */
W1P_API w1p_measure* w1p_measure_create(const w1p_graph* g, const int* vertices,
                                        const double* masses, int n_atoms);
W1P_API w1p_measure* w1p_measure_dirac(const w1p_graph* g, int vertex);
/* Text format: one "vertex mass" pair per line, '#' comments. */
W1P_API w1p_measure* w1p_measure_from_file(const w1p_graph* g, const char* path);
W1P_API void w1p_measure_free(w1p_measure* m);

/* --- transport -------------------------------------------------------- */

W1P_API w1p_status w1p_w1_cost(const w1p_graph* g, const w1p_measure* f0, const w1p_measure* f1,
                               double* out_cost);
/* 1, 0, or a negative status code. */
W1P_API int w1p_pair_in_optimal_support(const w1p_graph* g, const w1p_measure* f0,
                                        const w1p_measure* f1, int a, int b);

/* --- canonical W1+ geodesics ----------------------------------------- */

W1P_API w1p_curve* w1p_solve_canonical(const w1p_graph* g, const w1p_measure* f0,
                                       const w1p_measure* f1, double tol, long max_iter);
W1P_API void w1p_curve_free(w1p_curve* c);

W1P_API double w1p_curve_residual(const w1p_curve* c);
/* Writes f_t into out (length = vertex count). */
W1P_API w1p_status w1p_curve_density(const w1p_curve* c, double t, double* out);
/* Entropy H(t) and its second derivative (the functional I at t). */
W1P_API w1p_status w1p_curve_entropy(const w1p_curve* c, double t, double* out_H,
                                     double* out_Hpp);

/* --- scenario runner and selftest ------------------------------------ */

/* Executes a scenario document; *exit_code receives 0 (pass), 1 (check
 * failure), 2 (parse error) or 3 (non-convergence), mirroring the CLI.
 * out_override, tol_override and grid_override may be NULL / <= 0. */
W1P_API w1p_status w1p_run_scenario(const char* scenario_path, const char* out_override,
                                    double tol_override, int grid_override,
                                    int* exit_code);
W1P_API w1p_status w1p_selftest(unsigned long long seed, int* exit_code);

#ifdef __cplusplus
}
#endif

#endif /* W1PLUS_H */
