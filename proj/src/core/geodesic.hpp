#pragma once

#include <memory>

#include "bb.hpp"
#include "measure.hpp"
#include "orientation.hpp"
#include "polynomial.hpp"

namespace w1plus {

// Canonical W1+-geodesic between f0 and f1, represented by the polynomial
// families p_t, q_t solving
//   p'_t(x) =  sum_{x0 in E(x)} p_t(x0),
//   q'_t(x) = -sum_{x2 in F(x)} q_t(x2),
// with endpoint products p_0 q_0 = |EG| f0 and p_1 q_1 = |EG| f1. Evaluation:
// f_t = p q / |EG|, g_t(x0x1) = p(x0) q(x1) / |EG|, h_t(x0x1x2) = p(x0) q(x2) / |EG|.
struct GeodesicCurve {
  std::shared_ptr<const Orientation> orientation;
  PathCounts counts;
  // p in the time variable t, q in the reversed variable u = 1 - t; both
  // integrations then have non-negative coefficients and evaluate without
  // cancellation. q_t(x) = q[x](1 - t).
  std::vector<Poly> p, q;
  Measure f0, f1;
  double residual = 0.0; // achieved endpoint total-variation residual
  long iterations = 0;

  std::vector<double> f_at(double t) const;
  BBTriple triple_at(double t) const;
  double p_at(int x, double t) const { return p[x](t); }
  double q_at(int x, double t) const { return q[x](1.0 - t); }
};

// Alternating boundary fit (iterative proportional fitting): backward
// integrate q from q_1, fit p_0 to f0 pointwise, forward integrate, fit q_1
// to f1, until both endpoint residuals drop below tol.
GeodesicCurve solve_canonical(std::shared_ptr<const Orientation> o, const PathCounts& pc,
                              const Measure& f0, const Measure& f1, double tol = 1e-10,
                              long max_iter = 100000);

GeodesicCurve solve_canonical(const Graph& g, const Measure& f0, const Measure& f1,
                              double tol = 1e-10, long max_iter = 100000);

// Polynomial-level identities of the construction: continuity equations,
// mass conservation, interior positivity of g, and the BB equation.
struct CurveIdentityReport {
  double continuity_defect = 0.0; // coefficients of d/dt f + del.g
  double flux_defect = 0.0;       // coefficients of d/dt g + del.h
  double mass_defect = 0.0;       // coefficients of sum_x f - 1
  double min_interior_g = 0.0;    // over [delta, 1-delta]
  double max_bb_violation = 0.0;  // relative, sampled
};

CurveIdentityReport check_curve_identities(const GeodesicCurve& c, double delta = 1e-3);

struct W1GeodesicReport {
  double w1_total = 0.0;  // W1(f0, f1)
  double max_defect = 0.0; // max |W1(f_s,f_t) - |t-s| W1(f0,f1)|
  bool ok = false;         // within 1e-6
};

W1GeodesicReport check_w1_geodesic(const GeodesicCurve& c, const std::vector<double>& grid);

} // namespace w1plus
