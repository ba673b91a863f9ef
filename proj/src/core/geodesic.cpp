#include "geodesic.hpp"

#include <algorithm>
#include <cmath>

#include "transport.hpp"

namespace w1plus {

namespace {

double safe_fit(double num, double den, const char* side) {
  if (num == 0.0) return 0.0;
  if (std::fabs(den) < 1e-14)
    fail(ErrorCode::numerical_failure,
         std::string("degenerate boundary system: zero ") + side + " under endpoint mass");
  return num / den;
}

std::vector<Poly> integrate_forward(const Orientation& o, const PathCounts& pc,
                                    const std::vector<double>& p0) {
  std::vector<Poly> p(o.graph().vertex_count());
  for (int x : pc.topo) {
    Poly sum;
    for (int x0 : o.in_set(x)) sum += p[x0];
    p[x] = Poly::constant(p0[x]) + sum.antiderivative();
  }
  return p;
}

// In the reversed variable u = 1 - t the backward system reads
// d q~ / du (x) = sum_{x2 in F(x)} q~(x2) with q~(0) = q_1, so it is a plain
// forward antidifferentiation with non-negative coefficients.
std::vector<Poly> integrate_backward(const Orientation& o, const PathCounts& pc,
                                     const std::vector<double>& q1) {
  std::vector<Poly> q(o.graph().vertex_count());
  for (auto it = pc.topo.rbegin(); it != pc.topo.rend(); ++it) {
    int x = *it;
    Poly sum;
    for (int x2 : o.out_set(x)) sum += q[x2];
    q[x] = Poly::constant(q1[x]) + sum.antiderivative();
  }
  return q;
}

} // namespace

std::vector<double> GeodesicCurve::f_at(double t) const {
  const Orientation& o = *orientation;
  double eg = static_cast<double>(counts.eg);
  std::vector<double> f(o.graph().vertex_count(), 0.0);
  for (int x : o.active_vertices()) f[x] = p_at(x, t) * q_at(x, t) / eg;
  return f;
}

BBTriple GeodesicCurve::triple_at(double t) const {
  if (t < 0.0 || t > 1.0) fail(ErrorCode::invalid_argument, "t outside [0,1]");
  const Orientation& o = *orientation;
  double eg = static_cast<double>(counts.eg);
  BBTriple tr;
  tr.orient = orientation;
  tr.f = f_at(t);
  tr.g.resize(o.edges().size());
  for (int e = 0; e < static_cast<int>(o.edges().size()); ++e) {
    auto [x0, x1] = o.edges()[e];
    tr.g[e] = p_at(x0, t) * q_at(x1, t) / eg;
  }
  tr.h.resize(o.triples().size());
  for (int i = 0; i < static_cast<int>(o.triples().size()); ++i) {
    auto [x0, x1, x2] = o.triples()[i];
    tr.h[i] = p_at(x0, t) * q_at(x2, t) / eg;
  }
  return tr;
}

GeodesicCurve solve_canonical(std::shared_ptr<const Orientation> o, const PathCounts& pc,
                              const Measure& f0, const Measure& f1, double tol, long max_iter) {
  const Orientation& ori = *o;
  int n = ori.graph().vertex_count();
  if (f0.size() != n || f1.size() != n)
    fail(ErrorCode::invalid_argument, "measure size does not match graph");
  if (tol <= 0.0) fail(ErrorCode::invalid_argument, "tolerance must be positive");
  for (int v = 0; v < n; ++v)
    if ((f0[v] > 0.0 || f1[v] > 0.0) && !ori.is_active(v))
      fail(ErrorCode::invalid_argument, "measure mass outside the active set");

  double eg = static_cast<double>(pc.eg);
  GeodesicCurve c;
  c.orientation = std::move(o);
  c.counts = pc;
  c.f0 = f0;
  c.f1 = f1;

  std::vector<double> q1(n, 0.0), p0(n, 0.0);
  for (int v : ori.active_vertices()) q1[v] = 1.0;

  for (long iter = 1; iter <= max_iter; ++iter) {
    std::vector<Poly> q = integrate_backward(ori, pc, q1);
    for (int v : ori.active_vertices()) p0[v] = safe_fit(eg * f0[v], q[v](1.0), "backward family");
    std::vector<Poly> p = integrate_forward(ori, pc, p0);

    double res1 = 0.0;
    for (int v : ori.active_vertices()) res1 += std::fabs(p[v](1.0) * q1[v] / eg - f1[v]);
    res1 *= 0.5;
    if (res1 < tol) {
      c.p = std::move(p);
      c.q = std::move(q);
      c.iterations = iter;
      double res0 = 0.0;
      for (int v : ori.active_vertices()) res0 += std::fabs(c.p[v](0.0) * c.q[v](1.0) / eg - f0[v]);
      c.residual = std::max(res1, 0.5 * res0);
      return c;
    }

    double qmax = 0.0;
    for (int v : ori.active_vertices()) {
      q1[v] = safe_fit(eg * f1[v], p[v](1.0), "forward family");
      qmax = std::max(qmax, q1[v]);
    }
    if (qmax <= 0.0) fail(ErrorCode::numerical_failure, "degenerate boundary system: q vanished");
    for (int v : ori.active_vertices()) q1[v] /= qmax;

    if (iter == max_iter) {
      fail(ErrorCode::no_convergence,
           "boundary fit did not converge: residual " + std::to_string(res1) + " after " +
               std::to_string(iter) + " iterations");
    }
  }
  fail(ErrorCode::no_convergence, "boundary fit did not converge");
}

GeodesicCurve solve_canonical(const Graph& g, const Measure& f0, const Measure& f1, double tol,
                              long max_iter) {
  auto o = std::make_shared<Orientation>(orient(g, f0, f1));
  PathCounts pc = path_counts(*o);
  return solve_canonical(std::move(o), pc, f0, f1, tol, max_iter);
}

CurveIdentityReport check_curve_identities(const GeodesicCurve& c, double delta) {
  const Orientation& o = *c.orientation;
  double eg = static_cast<double>(c.counts.eg);
  CurveIdentityReport rep;

  // q in the t variable, for coefficient-level checks.
  std::vector<Poly> qt(c.q.size());
  for (int x : o.active_vertices()) qt[x] = c.q[x].substituted_one_minus_t();

  // d/dt (p q) + del.g, per active vertex, as polynomials scaled by 1/eg.
  for (int x : o.active_vertices()) {
    Poly defect = (c.p[x] * qt[x]).derivative();
    for (int x2 : o.out_set(x)) defect += c.p[x] * qt[x2];
    for (int x0 : o.in_set(x)) defect -= c.p[x0] * qt[x];
    rep.continuity_defect = std::max(rep.continuity_defect, defect.max_abs_coeff() / eg);
  }

  // d/dt g + del.h per oriented edge.
  for (int e = 0; e < static_cast<int>(o.edges().size()); ++e) {
    auto [x0, x1] = o.edges()[e];
    Poly defect = (c.p[x0] * qt[x1]).derivative();
    for (int x2 : o.out_set(x1)) defect += c.p[x0] * qt[x2];
    for (int xm : o.in_set(x0)) defect -= c.p[xm] * qt[x1];
    rep.flux_defect = std::max(rep.flux_defect, defect.max_abs_coeff() / eg);
  }

  Poly mass;
  for (int x : o.active_vertices()) mass += c.p[x] * qt[x];
  mass -= Poly::constant(eg);
  rep.mass_defect = mass.max_abs_coeff() / eg;

  rep.min_interior_g = std::numeric_limits<double>::infinity();
  const int samples = 1001;
  for (int i = 0; i <= samples; ++i) {
    double t = delta + (1.0 - 2.0 * delta) * i / samples;
    for (int e = 0; e < static_cast<int>(o.edges().size()); ++e) {
      auto [x0, x1] = o.edges()[e];
      rep.min_interior_g = std::min(rep.min_interior_g, c.p_at(x0, t) * c.q_at(x1, t) / eg);
    }
  }
  if (o.edges().empty()) rep.min_interior_g = 0.0;

  for (double t : {0.21, 0.5, 0.83}) {
    BBValidation val = validate(c.triple_at(t));
    rep.max_bb_violation = std::max(rep.max_bb_violation, val.max_bb_rel_violation);
  }
  return rep;
}

W1GeodesicReport check_w1_geodesic(const GeodesicCurve& c, const std::vector<double>& grid) {
  W1GeodesicReport rep;
  const Graph& g = c.orientation->graph();
  rep.w1_total = w1_cost(g, c.f0, c.f1);
  auto measure_at = [&](double t) {
    std::vector<double> f = c.f_at(t);
    for (double& v : f) v = std::max(v, 0.0);
    return Measure(std::move(f));
  };
  std::vector<Measure> snaps;
  snaps.reserve(grid.size());
  for (double t : grid) snaps.push_back(measure_at(t));
  for (std::size_t i = 0; i < grid.size(); ++i)
    for (std::size_t j = i + 1; j < grid.size(); ++j) {
      double w = w1_cost(g, snaps[i], snaps[j]);
      double expect = std::fabs(grid[j] - grid[i]) * rep.w1_total;
      rep.max_defect = std::max(rep.max_defect, std::fabs(w - expect));
    }
  rep.ok = rep.max_defect <= 1e-6;
  return rep;
}

} // namespace w1plus
