#pragma once

#include <vector>

#include "measure.hpp"
#include "transport.hpp"

namespace w1plus {

// Mixture of binomial bridges with respect to the monotone W2-optimal
// coupling on a Z-segment (vertex index = integer coordinate):
//   f_t(k) = sum pi(i,j) Bin_{j-i,t}(k-i)
//   g_t(k) = sum pi(i,j) (j-i) Bin_{j-i-1,t}(k-i)           (edge k,k+1)
//   h_t(k) = sum pi(i,j) (j-i)(j-i-1) Bin_{j-i-2,t}(k-i)    (triple k,k+1,k+2)
// so that df/dt = -del g and dg/dt = -del h hold with left differences.

// F0(k) >= F1(k) for every k.
bool stochastic_domination(const Measure& f0, const Measure& f1);

struct BinomialW2Eval {
  std::vector<double> f; // per vertex
  std::vector<double> g; // g[k] on edge (k, k+1)
  std::vector<double> h; // h[k] on triple (k, k+1, k+2)
};

// Requires stochastic domination (the coupling is then monotone and pairs
// satisfy i <= j).
BinomialW2Eval eval_binomial_w2(const Measure& f0, const Measure& f1, double t);

// Alternative form of g used in the convexity proof:
// sum pi(i,j) Bin_{j-i,t}(k-i) (j-k)/(1-t); matches g for t in (0,1).
std::vector<double> binomial_w2_g_alt(const Measure& f0, const Measure& f1, double t);

// h~(k) = g(k) g(k+1) / f(k+1): the h that would close (f, g) into a
// BB-triple on Z.
std::vector<double> h_tilde(const std::vector<double>& f, const std::vector<double>& g);

struct CompareHReport {
  double max_h_minus_htilde = 0.0;
  long long certificate = 0; // min (i2-i1)(j2-j1) over coupling support pairs
  bool h_dominated = false;  // max_h_minus_htilde <= 1e-10
};

CompareHReport compare_h(const Measure& f0, const Measure& f1, double t);

// f(k+1)^2 >= f(k) f(k+2) with interval support; boundary zeros pass.
bool log_concavity(const std::vector<double>& f);
bool log_concavity(const Measure& f);

struct BinW2Row {
  double t = 0.0;
  double H = 0.0;
  double Hpp_fd = 0.0; // central difference, NaN near the endpoints
  bool log_concave = false;
  bool h_le_htilde = false;
};

struct BinW2Report {
  bool domination = false;
  std::vector<BinW2Row> rows;
  bool theorem_applies = false; // domination and log-concavity on the grid
  double min_second_diff = 0.0; // undivided, uniform internal grid
  bool convex_observed = false; // min_second_diff >= -1e-6
  double max_h_violation = 0.0;
};

BinW2Report entropy_convexity_report(const Measure& f0, const Measure& f1,
                                     const std::vector<double>& grid);

} // namespace w1plus
