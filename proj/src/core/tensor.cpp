#include "tensor.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "entropy.hpp"
#include "transport.hpp"

namespace w1plus {

namespace {

std::vector<long long> suffix_weights(const Graph& g) {
  const auto& fs = g.factors();
  std::vector<long long> w(fs.size(), 1);
  for (int i = static_cast<int>(fs.size()) - 2; i >= 0; --i) w[i] = w[i + 1] * fs[i + 1].size;
  return w;
}

int differing_factor(const Graph& g, int u, int v) {
  auto cu = g.coords(u), cv = g.coords(v);
  int which = -1;
  for (std::size_t i = 0; i < cu.size(); ++i)
    if (cu[i] != cv[i]) {
      if (which >= 0) fail(ErrorCode::numerical_failure, "edge moves two factor coordinates");
      which = static_cast<int>(i);
    }
  if (which < 0) fail(ErrorCode::numerical_failure, "edge moves no factor coordinate");
  return which;
}

long long block2_size(const Graph& g, int split) {
  long long n2 = 1;
  for (int i = split; i < static_cast<int>(g.factors().size()); ++i) n2 *= g.factors()[i].size;
  return n2;
}

} // namespace

ProductOrientation product_orientation(std::shared_ptr<const Orientation> o, int split) {
  const Graph& g = o->graph();
  int nf = static_cast<int>(g.factors().size());
  if (nf < 2) fail(ErrorCode::invalid_argument, "orientation is not on a product graph");
  if (split < 0) split = g.top_split() > 0 ? g.top_split() : 1;
  if (split <= 0 || split >= nf) fail(ErrorCode::invalid_argument, "factor split out of range");
  ProductOrientation po;
  po.split = split;
  po.edge_factor.reserve(o->edges().size());
  po.edge_class.reserve(o->edges().size());
  for (auto [u, v] : o->edges()) {
    int fi = differing_factor(g, u, v);
    po.edge_factor.push_back(fi);
    po.edge_class.push_back(fi < split ? 1 : 2);
  }
  po.orientation = std::move(o);
  return po;
}

Measure block_marginal(const Graph& product, const Measure& f, int split, bool first) {
  long long n2 = block2_size(product, split);
  long long n1 = product.vertex_count() / n2;
  std::vector<double> m(first ? n1 : n2, 0.0);
  for (int v = 0; v < product.vertex_count(); ++v) {
    if (f[v] == 0.0) continue;
    m[first ? v / n2 : v % n2] += f[v];
  }
  return Measure(std::move(m));
}

SquareReport enumerate_squares(const ProductOrientation& po) {
  const Orientation& o = *po.orientation;
  const Graph& g = o.graph();
  SquareReport rep;
  for (int x0 : o.active_vertices()) {
    std::vector<int> out1, out2;
    for (int y : o.out_set(x0))
      (po.edge_class[o.edge_index(x0, y)] == 1 ? out1 : out2).push_back(y);
    rep.sum_f1f2 += static_cast<long>(out1.size()) * static_cast<long>(out2.size());
    for (int m1 : out1)
      for (int m2 : out2) {
        int f1 = differing_factor(g, x0, m1);
        int f2 = differing_factor(g, x0, m2);
        auto cc = g.coords(x0);
        cc[f1] = g.coords(m1)[f1];
        cc[f2] = g.coords(m2)[f2];
        int x2 = g.vertex_at(cc);
        if (!o.has_edge(m1, x2) || !o.has_edge(m2, x2))
          fail(ErrorCode::numerical_failure, "product square closure missing");
        rep.squares.push_back({x0, m1, m2, x2});
      }
  }
  for (int i = 0; i < static_cast<int>(o.triples().size()); ++i) {
    auto [x0, x1, x2] = o.triples()[i];
    int c1 = po.edge_class[o.edge_index(x0, x1)];
    int c2 = po.edge_class[o.edge_index(x1, x2)];
    if (c1 == 1 && c2 == 2) ++rep.t12;
    if (c1 == 2 && c2 == 1) ++rep.t21;
  }
  long s = static_cast<long>(rep.squares.size());
  rep.bijections_ok = (s == rep.t12 && s == rep.t21 && s == rep.sum_f1f2);
  return rep;
}

std::pair<VertexFunc, VertexFunc> split_divergence(const ProductOrientation& po,
                                                   const EdgeFunc& g) {
  const Orientation& o = *po.orientation;
  if (g.size() != o.edges().size()) fail(ErrorCode::invalid_argument, "edge function size mismatch");
  int n = o.graph().vertex_count();
  VertexFunc d1(n, 0.0), d2(n, 0.0);
  for (int e = 0; e < static_cast<int>(o.edges().size()); ++e) {
    auto [x, y] = o.edges()[e];
    VertexFunc& d = po.edge_class[e] == 1 ? d1 : d2;
    d[x] += g[e];
    d[y] -= g[e];
  }
  return {d1, d2};
}

DecompositionReport check_orientation_decomposition(const Graph& g1, const Graph& g2,
                                                    const Measure& f0, const Measure& f1) {
  Graph prod = Graph::product(g1, g2);
  if (f0.size() != prod.vertex_count() || f1.size() != prod.vertex_count())
    fail(ErrorCode::invalid_argument, "measures must live on the product graph");
  int split = static_cast<int>(g1.factors().size());
  long long n2 = g2.vertex_count();

  Orientation direct = orient(prod, f0, f1);

  Measure f0_1 = block_marginal(prod, f0, split, true);
  Measure f1_1 = block_marginal(prod, f1, split, true);
  Measure f0_2 = block_marginal(prod, f0, split, false);
  Measure f1_2 = block_marginal(prod, f1, split, false);
  Orientation o1 = orient(g1, f0_1, f1_1);
  Orientation o2 = orient(g2, f0_2, f1_2);

  std::set<std::pair<int, int>> composed;
  for (auto [x1, y1] : o1.edges())
    for (int x2 : o2.active_vertices())
      composed.insert({static_cast<int>(x1 * n2 + x2), static_cast<int>(y1 * n2 + x2)});
  for (auto [x2, y2] : o2.edges())
    for (int x1 : o1.active_vertices())
      composed.insert({static_cast<int>(x1 * n2 + x2), static_cast<int>(x1 * n2 + y2)});

  std::set<std::pair<int, int>> direct_set(direct.edges().begin(), direct.edges().end());
  DecompositionReport rep;
  for (auto& e : direct_set)
    if (!composed.count(e)) rep.only_direct.push_back(e);
  for (auto& e : composed)
    if (!direct_set.count(e)) rep.only_composed.push_back(e);
  rep.equal = rep.only_direct.empty() && rep.only_composed.empty();
  return rep;
}

BBTriple project_triple(const BBTriple& tr, const ProductOrientation& po, int axis, int fixed) {
  const Orientation& o = *po.orientation;
  const Graph& g = o.graph();
  int nf = static_cast<int>(g.factors().size());
  long long n2 = block2_size(g, po.split);
  Graph block = axis == 1 ? Graph::factor_block(g, 0, po.split)
                          : Graph::factor_block(g, po.split, nf);
  if (axis != 1 && axis != 2) fail(ErrorCode::invalid_argument, "axis must be 1 or 2");

  auto in_slice = [&](int v) {
    return axis == 1 ? (v % n2 == fixed) : (v / n2 == fixed);
  };
  auto to_block = [&](int v) { return axis == 1 ? static_cast<int>(v / n2) : static_cast<int>(v % n2); };

  std::vector<double> f_slice(block.vertex_count(), 0.0);
  for (int v = 0; v < g.vertex_count(); ++v)
    if (in_slice(v)) f_slice[to_block(v)] = tr.f[v];

  std::vector<std::pair<int, int>> edges;
  std::vector<double> gvals;
  for (int e = 0; e < static_cast<int>(o.edges().size()); ++e) {
    if (po.edge_class[e] != axis) continue;
    auto [x, y] = o.edges()[e];
    if (!in_slice(x)) continue;
    edges.emplace_back(to_block(x), to_block(y));
    gvals.push_back(tr.g[e]);
  }

  std::vector<int> extra;
  for (int u = 0; u < block.vertex_count(); ++u)
    if (f_slice[u] > 0.0) extra.push_back(u);

  auto so = std::make_shared<Orientation>(Orientation::from_edges(block, edges, extra));
  BBTriple out;
  out.orient = so;
  out.f = std::move(f_slice);
  out.g.assign(so->edges().size(), 0.0);
  for (std::size_t i = 0; i < edges.size(); ++i) out.g[so->edge_index(edges[i].first, edges[i].second)] = gvals[i];
  out.h.assign(so->triples().size(), 0.0);
  for (int ti = 0; ti < static_cast<int>(so->triples().size()); ++ti) {
    auto [u0, u1, u2] = so->triples()[ti];
    int v0 = axis == 1 ? static_cast<int>(u0 * n2 + fixed) : static_cast<int>(fixed * n2 + u0);
    int v1 = axis == 1 ? static_cast<int>(u1 * n2 + fixed) : static_cast<int>(fixed * n2 + u1);
    int v2 = axis == 1 ? static_cast<int>(u2 * n2 + fixed) : static_cast<int>(fixed * n2 + u2);
    int pidx = o.triple_index(v0, v1, v2);
    if (pidx < 0) fail(ErrorCode::numerical_failure, "slice triple missing in product");
    out.h[ti] = tr.h[pidx];
  }
  return out;
}

BBTriple line_slice(const BBTriple& tr, int factor_index, int complement_key,
                    const Graph& factor_graph) {
  const Orientation& o = *tr.orient;
  const Graph& g = o.graph();
  auto w = suffix_weights(g);
  long long wi = w[factor_index];
  int si = g.factors()[factor_index].size;

  auto id_of = [&](int u) { return static_cast<int>(complement_key + u * wi); };

  std::vector<double> f_slice(si, 0.0);
  for (int u = 0; u < si; ++u) f_slice[u] = tr.f[id_of(u)];

  std::vector<std::pair<int, int>> edges;
  std::vector<double> gvals;
  for (int e = 0; e < static_cast<int>(o.edges().size()); ++e) {
    auto [x, y] = o.edges()[e];
    auto cx = g.coords(x);
    if (differing_factor(g, x, y) != factor_index) continue;
    long long key = x - cx[factor_index] * wi;
    if (key != complement_key) continue;
    edges.emplace_back(cx[factor_index], g.coords(y)[factor_index]);
    gvals.push_back(tr.g[e]);
  }

  std::vector<int> extra;
  for (int u = 0; u < si; ++u)
    if (f_slice[u] > 0.0) extra.push_back(u);

  auto so = std::make_shared<Orientation>(Orientation::from_edges(factor_graph, edges, extra));
  BBTriple out;
  out.orient = so;
  out.f = std::move(f_slice);
  out.g.assign(so->edges().size(), 0.0);
  for (std::size_t i = 0; i < edges.size(); ++i) out.g[so->edge_index(edges[i].first, edges[i].second)] = gvals[i];
  out.h.assign(so->triples().size(), 0.0);
  for (int ti = 0; ti < static_cast<int>(so->triples().size()); ++ti) {
    auto [u0, u1, u2] = so->triples()[ti];
    int pidx = o.triple_index(id_of(u0), id_of(u1), id_of(u2));
    if (pidx < 0) fail(ErrorCode::numerical_failure, "line triple missing in product");
    out.h[ti] = tr.h[pidx];
  }
  return out;
}

TensorizationReport tensorization_check(const GeodesicCurve& c, const std::vector<double>& grid,
                                        int split) {
  auto po = product_orientation(c.orientation, split);
  const Orientation& o = *c.orientation;
  const Graph& g = o.graph();
  int nf = static_cast<int>(g.factors().size());
  long long n2 = block2_size(g, po.split);
  long long n1 = g.vertex_count() / n2;

  // Per-factor line graphs and the complement keys that carry edges.
  auto w = suffix_weights(g);
  std::vector<Graph> lines;
  std::vector<std::set<long long>> keys(nf);
  for (int i = 0; i < nf; ++i) lines.push_back(Graph::factor_block(g, i, i + 1));
  for (int e = 0; e < static_cast<int>(o.edges().size()); ++e) {
    auto [x, y] = o.edges()[e];
    int fi = po.edge_factor[e];
    keys[fi].insert(x - g.coords(x)[fi] * w[fi]);
  }

  TensorizationReport rep;
  rep.all_satisfied = true;
  for (double t : grid) {
    BBTriple tr = c.triple_at(t);
    bool interior = true;
    for (int v : o.active_vertices())
      if (tr.f[v] <= 0.0) { interior = false; break; }
    if (!interior) continue;

    TensorizationRow row;
    row.t = t;
    row.Hpp = functional_I(tr);

    for (long long fixed = 0; fixed < n2; ++fixed) {
      BBTriple slice = project_triple(tr, po, 1, static_cast<int>(fixed));
      if (!slice.orient->edges().empty()) row.slice_sum_axis1 += functional_I(slice);
    }
    for (long long fixed = 0; fixed < n1; ++fixed) {
      BBTriple slice = project_triple(tr, po, 2, static_cast<int>(fixed));
      if (!slice.orient->edges().empty()) row.slice_sum_axis2 += functional_I(slice);
    }

    for (int i = 0; i < nf; ++i)
      for (long long key : keys[i]) {
        BBTriple slice = line_slice(tr, i, static_cast<int>(key), lines[i]);
        if (!slice.orient->edges().empty()) row.line_slice_sum += functional_I(slice);
      }

    for (int e = 0; e < static_cast<int>(o.edges().size()); ++e) {
      if (!g.factors()[po.edge_factor[e]].involutive) continue;
      auto [x0, x1] = o.edges()[e];
      row.involutive_edge_bound += tr.g[e] * tr.g[e] * (1.0 / tr.f[x0] + 1.0 / tr.f[x1]);
    }

    double split_sum = row.slice_sum_axis1 + row.slice_sum_axis2;
    rep.max_split_violation = std::max(rep.max_split_violation, split_sum - row.Hpp);
    rep.max_line_violation = std::max(rep.max_line_violation, row.line_slice_sum - row.Hpp);
    rep.max_involutive_violation =
        std::max(rep.max_involutive_violation, row.involutive_edge_bound - row.Hpp);
    row.satisfied = split_sum <= row.Hpp + 1e-8 && row.line_slice_sum <= row.Hpp + 1e-8 &&
                    row.involutive_edge_bound <= row.Hpp + 1e-8;
    rep.all_satisfied = rep.all_satisfied && row.satisfied;
    rep.rows.push_back(row);
  }
  return rep;
}

} // namespace w1plus
