#include "bb.hpp"

#include <cmath>

namespace w1plus {

BBValidation validate(const BBTriple& t) {
  const Orientation& o = *t.orient;
  BBValidation rep;
  double total = 0.0;
  for (int v : o.active_vertices()) {
    total += t.f[v];
    if (t.f[v] <= 0.0) ++rep.nonpositive_f;
  }
  rep.normalization_defect = std::fabs(total - 1.0);
  for (double gv : t.g)
    if (gv <= 0.0) ++rep.nonpositive_g;
  for (double hv : t.h)
    if (hv < 0.0) ++rep.negative_h;
  for (int i = 0; i < static_cast<int>(o.triples().size()); ++i) {
    auto [x0, x1, x2] = o.triples()[i];
    double lhs = t.f[x1] * t.h[i];
    double rhs = t.g[o.edge_index(x0, x1)] * t.g[o.edge_index(x1, x2)];
    // relative to g g, the side the equation constrains h against
    double scale = std::fabs(rhs) > 0.0 ? std::fabs(rhs) : std::max(std::fabs(lhs), 1.0);
    rep.max_bb_rel_violation = std::max(rep.max_bb_rel_violation, std::fabs(lhs - rhs) / scale);
  }
  return rep;
}

double functional_I(const BBTriple& t) {
  const Orientation& o = *t.orient;
  VertexFunc div_g = divergence(o, t.g);
  VertexFunc div2_h = double_divergence(o, t.h);
  double acc = 0.0;
  for (int v : o.active_vertices()) {
    if (div2_h[v] != 0.0) {
      if (t.f[v] <= 0.0)
        fail(ErrorCode::invalid_argument, "functional undefined: zero mass with curvature flux");
      acc += div2_h[v] * std::log(t.f[v]);
    }
    if (div_g[v] != 0.0) {
      if (t.f[v] <= 0.0)
        fail(ErrorCode::invalid_argument, "functional undefined: zero mass with nonzero divergence");
      acc += div_g[v] * div_g[v] / t.f[v];
    }
  }
  return acc;
}

double functional_I_ibp(const BBTriple& t) {
  const Orientation& o = *t.orient;
  double acc = 0.0;
  for (int i = 0; i < static_cast<int>(o.triples().size()); ++i) {
    double hv = t.h[i];
    if (hv == 0.0) continue;
    auto [x0, x1, x2] = o.triples()[i];
    double g01 = t.g[o.edge_index(x0, x1)];
    double g12 = t.g[o.edge_index(x1, x2)];
    acc += hv * std::log(t.f[x0] * hv / (g01 * g01));
    acc += hv * std::log(t.f[x2] * hv / (g12 * g12));
  }
  VertexFunc div_g = divergence(o, t.g);
  for (int v : o.active_vertices())
    if (div_g[v] != 0.0) acc += div_g[v] * div_g[v] / t.f[v];
  return acc;
}

double lower_bound_general(const BBTriple& t) {
  const Orientation& o = *t.orient;
  double acc = 0.0;
  for (int e = 0; e < static_cast<int>(o.edges().size()); ++e) {
    auto [x0, x1] = o.edges()[e];
    double g2 = t.g[e] * t.g[e];
    if (g2 == 0.0) continue;
    acc += g2 / t.f[x0] * (1.0 - static_cast<double>(o.out_set(x1).size()));
    acc += g2 / t.f[x1] * (1.0 - static_cast<double>(o.in_set(x0).size()));
  }
  return acc;
}

IBoundReport check_I_bound(const BBTriple& t) {
  IBoundReport rep;
  rep.I = functional_I(t);
  rep.bound = lower_bound_general(t);
  rep.satisfied = rep.I >= rep.bound - 1e-8 * std::max(1.0, std::fabs(rep.I));
  return rep;
}

BBTriple random_bb_triple(std::shared_ptr<const Orientation> o, std::mt19937_64& rng) {
  auto unit = [&rng]() { return (rng() >> 11) * 0x1.0p-53; };
  const Orientation& ori = *o;
  BBTriple t;
  t.orient = std::move(o);
  t.f.assign(ori.graph().vertex_count(), 0.0);
  double total = 0.0;
  for (int v : ori.active_vertices()) {
    t.f[v] = 0.05 + unit();
    total += t.f[v];
  }
  for (int v : ori.active_vertices()) t.f[v] /= total;
  t.g.resize(ori.edges().size());
  for (double& gv : t.g) gv = 0.05 + unit();
  t.h.resize(ori.triples().size());
  for (int i = 0; i < static_cast<int>(ori.triples().size()); ++i) {
    auto [x0, x1, x2] = ori.triples()[i];
    t.h[i] = t.g[ori.edge_index(x0, x1)] * t.g[ori.edge_index(x1, x2)] / t.f[x1];
  }
  return t;
}

} // namespace w1plus
