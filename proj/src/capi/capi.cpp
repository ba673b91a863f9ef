#include "w1plus/w1plus.h"

#include <iostream>
#include <string>

#include "core/entropy.hpp"
#include "core/geodesic.hpp"
#include "core/scenario.hpp"
#include "core/selftest.hpp"
#include "core/transport.hpp"

using namespace w1plus;

struct w1p_graph {
  Graph g;
};
struct w1p_measure {
  Measure m;
};
struct w1p_curve {
  GeodesicCurve c;
};

namespace {

thread_local std::string t_last_error;

void set_error(const std::string& msg) { t_last_error = msg; }

w1p_status status_of(const Error& e) {
  switch (e.code()) {
    case ErrorCode::parse_error: return W1P_ERR_PARSE;
    case ErrorCode::invalid_argument: return W1P_ERR_INVALID;
    case ErrorCode::no_convergence: return W1P_ERR_NOCONV;
    default: return W1P_ERR_INTERNAL;
  }
}

template <typename F>
w1p_status guarded(F&& fn) {
  try {
    fn();
    return W1P_OK;
  } catch (const Error& e) {
    set_error(e.what());
    return status_of(e);
  } catch (const std::exception& e) {
    set_error(e.what());
    return W1P_ERR_INTERNAL;
  }
}

template <typename T, typename F>
T* guarded_new(F&& fn) {
  try {
    return new T{fn()};
  } catch (const Error& e) {
    set_error(e.what());
    return nullptr;
  } catch (const std::exception& e) {
    set_error(e.what());
    return nullptr;
  }
}

} // namespace

extern "C" {

const char* w1p_last_error(void) { return t_last_error.c_str(); }

w1p_graph* w1p_graph_path(int n) {
  return guarded_new<w1p_graph>([&] { return Graph::path(n); });
}
w1p_graph* w1p_graph_cycle(int n) {
  return guarded_new<w1p_graph>([&] { return Graph::cycle(n); });
}
w1p_graph* w1p_graph_complete(int n) {
  return guarded_new<w1p_graph>([&] { return Graph::complete(n); });
}
w1p_graph* w1p_graph_hypercube(int dim) {
  return guarded_new<w1p_graph>([&] { return Graph::hypercube(dim); });
}
w1p_graph* w1p_graph_product(const w1p_graph* a, const w1p_graph* b) {
  if (!a || !b) {
    set_error("null graph");
    return nullptr;
  }
  return guarded_new<w1p_graph>([&] { return Graph::product(a->g, b->g); });
}
w1p_graph* w1p_graph_from_edge_list(const char* path) {
  if (!path) {
    set_error("null path");
    return nullptr;
  }
  return guarded_new<w1p_graph>([&] { return Graph::from_edge_list_file(path); });
}
void w1p_graph_free(w1p_graph* g) { delete g; }

int w1p_graph_vertex_count(const w1p_graph* g) { return g ? g->g.vertex_count() : 0; }
int w1p_graph_edge_count(const w1p_graph* g) { return g ? g->g.edge_count() : 0; }
int w1p_graph_dist(const w1p_graph* g, int u, int v) {
  if (!g) return -1;
  int out = -1;
  guarded([&] { out = g->g.dist(u, v); });
  return out;
}
long w1p_graph_geodesic_count(const w1p_graph* g, int u, int v) {
  if (!g) return -1;
  long out = -1;
  guarded([&] { out = g->g.geodesic_count(u, v); });
  return out;
}

w1p_measure* w1p_measure_create(const w1p_graph* g, const int* vertices, const double* masses,
                                int n_atoms) {
  if (!g || !vertices || !masses || n_atoms <= 0) {
    set_error("invalid measure arguments");
    return nullptr;
  }
  return guarded_new<w1p_measure>([&] {
    std::vector<std::pair<int, double>> atoms;
    for (int i = 0; i < n_atoms; ++i) atoms.emplace_back(vertices[i], masses[i]);
    return Measure::from_atoms(g->g.vertex_count(), atoms);
  });
}
w1p_measure* w1p_measure_dirac(const w1p_graph* g, int vertex) {
  if (!g) {
    set_error("null graph");
    return nullptr;
  }
  return guarded_new<w1p_measure>([&] { return Measure::dirac(g->g.vertex_count(), vertex); });
}
w1p_measure* w1p_measure_from_file(const w1p_graph* g, const char* path) {
  if (!g || !path) {
    set_error("null argument");
    return nullptr;
  }
  return guarded_new<w1p_measure>([&] { return Measure::from_file(g->g, path); });
}
void w1p_measure_free(w1p_measure* m) { delete m; }

w1p_status w1p_w1_cost(const w1p_graph* g, const w1p_measure* f0, const w1p_measure* f1,
                       double* out_cost) {
  if (!g || !f0 || !f1 || !out_cost) {
    set_error("null argument");
    return W1P_ERR_INVALID;
  }
  return guarded([&] { *out_cost = w1_cost(g->g, f0->m, f1->m); });
}

int w1p_pair_in_optimal_support(const w1p_graph* g, const w1p_measure* f0, const w1p_measure* f1,
                                int a, int b) {
  if (!g || !f0 || !f1) {
    set_error("null argument");
    return -W1P_ERR_INVALID;
  }
  int out = 0;
  w1p_status st = guarded([&] { out = in_some_optimal_support(g->g, f0->m, f1->m, a, b) ? 1 : 0; });
  return st == W1P_OK ? out : -static_cast<int>(st);
}

w1p_curve* w1p_solve_canonical(const w1p_graph* g, const w1p_measure* f0, const w1p_measure* f1,
                               double tol, long max_iter) {
  if (!g || !f0 || !f1) {
    set_error("null argument");
    return nullptr;
  }
  return guarded_new<w1p_curve>(
      [&] { return solve_canonical(g->g, f0->m, f1->m, tol > 0 ? tol : 1e-10,
                                   max_iter > 0 ? max_iter : 100000); });
}
void w1p_curve_free(w1p_curve* c) { delete c; }

double w1p_curve_residual(const w1p_curve* c) { return c ? c->c.residual : -1.0; }

w1p_status w1p_curve_density(const w1p_curve* c, double t, double* out) {
  if (!c || !out) {
    set_error("null argument");
    return W1P_ERR_INVALID;
  }
  return guarded([&] {
    if (t < 0.0 || t > 1.0) fail(ErrorCode::invalid_argument, "t outside [0,1]");
    auto f = c->c.f_at(t);
    for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[i];
  });
}

w1p_status w1p_curve_entropy(const w1p_curve* c, double t, double* out_H, double* out_Hpp) {
  if (!c || !out_H || !out_Hpp) {
    set_error("null argument");
    return W1P_ERR_INVALID;
  }
  return guarded([&] {
    *out_H = shannon_entropy(c->c.f_at(t));
    *out_Hpp = functional_I(c->c.triple_at(t));
  });
}

w1p_status w1p_run_scenario(const char* scenario_path, const char* out_override,
                            double tol_override, int grid_override, int* exit_code) {
  if (!scenario_path || !exit_code) {
    set_error("null argument");
    return W1P_ERR_INVALID;
  }
  return guarded([&] {
    ScenarioOverrides ov;
    if (out_override) ov.out = std::string(out_override);
    if (tol_override > 0.0) ov.tol = tol_override;
    if (grid_override > 1) ov.grid_count = grid_override;
    *exit_code = run_scenario_file(scenario_path, ov, std::cout);
  });
}

w1p_status w1p_selftest(unsigned long long seed, int* exit_code) {
  if (!exit_code) {
    set_error("null argument");
    return W1P_ERR_INVALID;
  }
  return guarded([&] { *exit_code = selftest(seed, std::cout); });
}

} // extern "C"
