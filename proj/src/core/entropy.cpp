#include "entropy.hpp"

#include <cmath>
#include <limits>

namespace w1plus {

namespace {
constexpr double nan_value = std::numeric_limits<double>::quiet_NaN();
}

double shannon_entropy(const std::vector<double>& f) {
  double acc = 0.0;
  for (double v : f) {
    if (v < 0.0) fail(ErrorCode::invalid_argument, "negative mass in entropy");
    if (v > 0.0) acc += v * std::log(v);
  }
  return acc;
}

double renyi_entropy(const std::vector<double>& f, double p) {
  if (!(p > 0.0 && p < 1.0)) fail(ErrorCode::invalid_argument, "Renyi order must lie in (0,1)");
  double acc = 0.0;
  for (double v : f) {
    if (v < 0.0) fail(ErrorCode::invalid_argument, "negative mass in entropy");
    if (v > 0.0) acc += std::pow(v, p);
  }
  return -acc;
}

double relative_entropy(const std::vector<double>& f, const std::vector<double>& nu) {
  if (f.size() != nu.size()) fail(ErrorCode::invalid_argument, "measure sizes differ");
  double acc = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] > 0.0) {
      if (nu[i] <= 0.0)
        fail(ErrorCode::invalid_argument, "reference measure vanishes on the support");
      acc += f[i] * std::log(f[i] / nu[i]);
    }
  }
  return acc;
}

double w_squared(const BBTriple& t) {
  double acc = 0.0;
  for (double hv : t.h) acc += hv;
  return acc;
}

std::pair<VertexFunc, VertexFunc> velocity_fields(const BBTriple& t) {
  const Orientation& o = *t.orient;
  int n = o.graph().vertex_count();
  VertexFunc vplus(n, 0.0), vminus(n, 0.0);
  for (int e = 0; e < static_cast<int>(o.edges().size()); ++e) {
    auto [x0, x1] = o.edges()[e];
    vplus[x0] += t.g[e];
    vminus[x1] += t.g[e];
  }
  for (int x : o.active_vertices()) {
    if (vplus[x] != 0.0 || vminus[x] != 0.0) {
      if (t.f[x] <= 0.0) fail(ErrorCode::invalid_argument, "velocity undefined at zero mass");
      vplus[x] /= t.f[x];
      vminus[x] /= t.f[x];
    }
  }
  return {vplus, vminus};
}

namespace {

// Hpp via the functional I; NaN when some active vertex has no mass (curve
// endpoints, where log derivatives are singular).
double hpp_or_nan(const GeodesicCurve& c, double t) {
  BBTriple tr = c.triple_at(t);
  for (int v : tr.orient->active_vertices())
    if (tr.f[v] <= 0.0) return nan_value;
  return functional_I(tr);
}

} // namespace

EntropyCurveReport entropy_along_curve(const GeodesicCurve& c, const std::vector<double>& grid,
                                       const std::vector<double>& renyi_orders, double fd_step) {
  EntropyCurveReport rep;
  rep.grid = grid;
  rep.renyi_orders = renyi_orders;
  rep.renyi.assign(renyi_orders.size(), {});

  auto entropy_at = [&](double t) { return shannon_entropy(c.f_at(t)); };

  rep.min_Hpp = std::numeric_limits<double>::infinity();
  for (double t : grid) {
    if (t < 0.0 || t > 1.0) fail(ErrorCode::invalid_argument, "grid point outside [0,1]");
    rep.H.push_back(entropy_at(t));
    double hpp = hpp_or_nan(c, t);
    rep.Hpp_analytic.push_back(hpp);
    if (!std::isnan(hpp)) rep.min_Hpp = std::min(rep.min_Hpp, hpp);

    if (t >= 2.0 * fd_step && t <= 1.0 - 2.0 * fd_step) {
      double fd =
          (entropy_at(t + fd_step) - 2.0 * rep.H.back() + entropy_at(t - fd_step)) /
          (fd_step * fd_step);
      rep.Hpp_fd.push_back(fd);
    } else {
      rep.Hpp_fd.push_back(nan_value);
    }

    BBTriple tr = c.triple_at(t);
    rep.w2.push_back(w_squared(tr));
    bool interior_ok = true;
    for (int v : tr.orient->active_vertices())
      if (tr.f[v] <= 0.0) { interior_ok = false; break; }
    rep.lower_bound.push_back(interior_ok ? lower_bound_general(tr) : nan_value);

    for (std::size_t r = 0; r < renyi_orders.size(); ++r)
      rep.renyi[r].push_back(renyi_entropy(c.f_at(t), renyi_orders[r]));
  }

  // Convexity verdict on a refined interior grid.
  const int refined = std::max<std::size_t>(401, 4 * grid.size());
  double lo = 1e-3, hi = 1.0 - 1e-3;
  double refined_min = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= refined; ++i) {
    double t = lo + (hi - lo) * i / refined;
    double hpp = hpp_or_nan(c, t);
    if (!std::isnan(hpp)) refined_min = std::min(refined_min, hpp);
  }
  rep.convex = refined_min >= -1e-8;

  // Renyi convexity: undivided second differences over a uniform grid.
  for (std::size_t r = 0; r < renyi_orders.size(); ++r) {
    const int pts = 101;
    std::vector<double> vals(pts);
    for (int i = 0; i < pts; ++i) vals[i] = renyi_entropy(c.f_at(i / double(pts - 1)), renyi_orders[r]);
    double worst = std::numeric_limits<double>::infinity();
    for (int i = 1; i + 1 < pts; ++i)
      worst = std::min(worst, vals[i + 1] - 2.0 * vals[i] + vals[i - 1]);
    rep.renyi_min_second_diff.push_back(worst);
  }
  return rep;
}

std::vector<std::array<int, 3>> potential_violations(const Orientation& o, const Potential& pot) {
  if (static_cast<int>(pot.V.size()) != o.graph().vertex_count())
    fail(ErrorCode::invalid_argument, "potential size does not match graph");
  std::vector<std::array<int, 3>> bad;
  for (auto [x0, x1, x2] : o.triples())
    if (pot.V[x0] - 2.0 * pot.V[x1] + pot.V[x2] < pot.K - 1e-12) bad.push_back({x0, x1, x2});
  return bad;
}

RelativeEntropyReport relative_entropy_bound(const GeodesicCurve& c, const Potential& pot,
                                             const std::vector<double>& grid) {
  const Orientation& o = *c.orientation;
  auto bad = potential_violations(o, pot);
  if (!bad.empty()) {
    auto [x0, x1, x2] = bad.front();
    fail(ErrorCode::invalid_argument,
         "potential is not K-convex on " + std::to_string(bad.size()) +
             " oriented triple(s), first (" + std::to_string(x0) + "," + std::to_string(x1) +
             "," + std::to_string(x2) + ")");
  }
  RelativeEntropyReport rep;
  rep.K = pot.K;
  rep.satisfied = true;
  for (double t : grid) {
    BBTriple tr = c.triple_at(t);
    bool interior = true;
    for (int v : o.active_vertices())
      if (tr.f[v] <= 0.0) { interior = false; break; }
    if (!interior) continue;
    double I = functional_I(tr);
    VertexFunc d2h = double_divergence(o, tr.h);
    double hnupp = I;
    for (int v : o.active_vertices()) hnupp += d2h[v] * pot.V[v];
    double w2 = w_squared(tr);
    rep.grid.push_back(t);
    rep.Hpp.push_back(I);
    rep.Hnupp.push_back(hnupp);
    rep.w2.push_back(w2);
    double violation = (I + pot.K * w2) - hnupp;
    rep.max_violation = std::max(rep.max_violation, violation);
    if (violation > 1e-8) rep.satisfied = false;
  }
  return rep;
}

double psi(double x, double p) {
  if (x < 0.0) fail(ErrorCode::invalid_argument, "psi needs x >= 0");
  if (!(p > 0.0 && p < 1.0)) fail(ErrorCode::invalid_argument, "psi needs 0 < p < 1");
  double q = 2.0 - p;
  return (1.0 - p) * (x - 1.0) * (x - 1.0) - (std::pow(x, p) - 1.0) / q - std::pow(x, q) / q -
         (1.0 - p) * x * x / q + 2.0 * x - 1.0;
}

double holder_gap(double f, double g, double h, double p) {
  if (f < 0.0 || g < 0.0 || h < 0.0)
    fail(ErrorCode::invalid_argument, "holder_gap needs non-negative inputs");
  if (!(p > 0.0 && p < 1.0)) fail(ErrorCode::invalid_argument, "holder_gap needs 0 < p < 1");
  double q = 2.0 - p;
  double rhs = std::pow(h, q) * std::pow(g, 2.0 * p - 2.0) / q +
               (1.0 - p) / q * g * g * std::pow(f, p - 2.0);
  double lhs = h * std::pow(f, p - 1.0);
  return rhs - lhs;
}

} // namespace w1plus
