#include "orientation.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "transport.hpp"

namespace w1plus {

namespace {
long long ekey(int n, int x, int y) { return static_cast<long long>(x) * n + y; }
long long tkey(int n, int x0, int x1, int x2) {
  return (static_cast<long long>(x0) * n + x1) * n + x2;
}
} // namespace

void Orientation::finalize(const std::vector<int>& extra_active) {
  int n = graph_.vertex_count();
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  in_.assign(n, {});
  out_.assign(n, {});
  is_active_.assign(n, 0);
  edge_idx_.clear();
  for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
    auto [x, y] = edges_[e];
    if (edge_idx_.count(ekey(n, y, x)))
      fail(ErrorCode::numerical_failure, "edge oriented both ways");
    edge_idx_[ekey(n, x, y)] = e;
    out_[x].push_back(y);
    in_[y].push_back(x);
    is_active_[x] = is_active_[y] = 1;
  }
  for (int v : extra_active) is_active_[v] = 1;
  active_.clear();
  for (int v = 0; v < n; ++v)
    if (is_active_[v]) active_.push_back(v);
  triples_.clear();
  triple_idx_.clear();
  for (auto [x0, x1] : edges_)
    for (int x2 : out_[x1]) {
      triple_idx_[tkey(n, x0, x1, x2)] = static_cast<int>(triples_.size());
      triples_.push_back({x0, x1, x2});
    }
}

Orientation Orientation::from_edges(Graph g, std::vector<std::pair<int, int>> edges,
                                    const std::vector<int>& extra_active) {
  Orientation o;
  o.graph_ = std::move(g);
  for (auto [x, y] : edges)
    if (!o.graph_.adjacent(x, y))
      fail(ErrorCode::invalid_argument, "oriented pair is not a graph edge");
  o.edges_ = std::move(edges);
  o.finalize(extra_active);
  return o;
}

int Orientation::edge_index(int x, int y) const {
  auto it = edge_idx_.find(ekey(graph_.vertex_count(), x, y));
  return it == edge_idx_.end() ? -1 : it->second;
}

int Orientation::triple_index(int x0, int x1, int x2) const {
  auto it = triple_idx_.find(tkey(graph_.vertex_count(), x0, x1, x2));
  return it == triple_idx_.end() ? -1 : it->second;
}

Orientation orient(const Graph& g, const Measure& f0, const Measure& f1) {
  OptimalTransport ot(g, f0, f1);
  std::vector<int> s0 = f0.support(), s1 = f1.support();
  std::vector<std::pair<int, int>> coupled;
  for (int a : s0)
    for (int b : s1)
      if (ot.pair_in_optimal_support(a, b)) coupled.emplace_back(a, b);

  std::vector<std::pair<int, int>> oriented;
  for (auto [x, y] : g.edges()) {
    bool fwd = false, bwd = false;
    for (auto [a, b] : coupled) {
      int dab = g.dist(a, b);
      if (g.dist(a, x) + 1 + g.dist(y, b) == dab) fwd = true;
      if (g.dist(a, y) + 1 + g.dist(x, b) == dab) bwd = true;
    }
    if (fwd && bwd) fail(ErrorCode::numerical_failure, "edge oriented both ways");
    if (fwd) oriented.emplace_back(x, y);
    if (bwd) oriented.emplace_back(y, x);
  }

  std::vector<int> extra = s0;
  extra.insert(extra.end(), s1.begin(), s1.end());
  return Orientation::from_edges(g, std::move(oriented), extra);
}

PathCounts path_counts(const Orientation& o) {
  int n = o.graph().vertex_count();
  PathCounts pc;
  pc.A.assign(n, 0);
  pc.B.assign(n, 0);

  // Kahn's algorithm; a leftover vertex means a directed cycle.
  std::vector<int> indeg(n, 0);
  for (int v : o.active_vertices()) indeg[v] = static_cast<int>(o.in_set(v).size());
  std::deque<int> queue;
  for (int v : o.active_vertices())
    if (indeg[v] == 0) queue.push_back(v);
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    pc.topo.push_back(v);
    for (int w : o.out_set(v))
      if (--indeg[w] == 0) queue.push_back(w);
  }
  if (pc.topo.size() != o.active_vertices().size())
    fail(ErrorCode::numerical_failure, "orientation contains a directed cycle");

  auto checked_add = [](long long& acc, long long v) {
    acc += v;
    if (acc < 0 || acc > (1LL << 62)) fail(ErrorCode::numerical_failure, "path count overflow");
  };

  for (int v : pc.topo) {
    if (o.in_set(v).empty()) {
      pc.A[v] = 1;
    } else {
      long long acc = 0;
      for (int w : o.in_set(v)) checked_add(acc, pc.A[w]);
      pc.A[v] = acc;
    }
  }
  for (auto it = pc.topo.rbegin(); it != pc.topo.rend(); ++it) {
    int v = *it;
    if (o.out_set(v).empty()) {
      pc.B[v] = 1;
    } else {
      long long acc = 0;
      for (int w : o.out_set(v)) checked_add(acc, pc.B[w]);
      pc.B[v] = acc;
    }
  }
  long long eg = 0;
  for (int v : o.active_vertices())
    if (o.in_set(v).empty()) checked_add(eg, pc.B[v]);
  pc.eg = eg;
  return pc;
}

Rational m_weight(const Orientation& o, const PathCounts& pc, const std::vector<int>& tuple) {
  if (pc.eg == 0) fail(ErrorCode::invalid_argument, "empty orientation has no extremal geodesics");
  switch (tuple.size()) {
    case 1: {
      int x = tuple[0];
      if (!o.is_active(x)) fail(ErrorCode::invalid_argument, "vertex not active");
      return Rational(pc.A[x], 1) * Rational(pc.B[x], pc.eg);
    }
    case 2: {
      if (o.edge_index(tuple[0], tuple[1]) < 0)
        fail(ErrorCode::invalid_argument, "tuple is not an oriented edge");
      return Rational(pc.A[tuple[0]], 1) * Rational(pc.B[tuple[1]], pc.eg);
    }
    case 3: {
      if (o.triple_index(tuple[0], tuple[1], tuple[2]) < 0)
        fail(ErrorCode::invalid_argument, "tuple is not an oriented triple");
      return Rational(pc.A[tuple[0]], 1) * Rational(pc.B[tuple[2]], pc.eg);
    }
    default:
      fail(ErrorCode::invalid_argument, "m-weight takes 1, 2 or 3 vertices");
  }
}

VertexFunc divergence(const Orientation& o, const EdgeFunc& g) {
  if (g.size() != o.edges().size())
    fail(ErrorCode::invalid_argument, "edge function size mismatch");
  VertexFunc out(o.graph().vertex_count(), 0.0);
  for (int e = 0; e < static_cast<int>(o.edges().size()); ++e) {
    auto [x, y] = o.edges()[e];
    out[x] += g[e];
    out[y] -= g[e];
  }
  return out;
}

EdgeFunc triple_divergence(const Orientation& o, const TripleFunc& h) {
  if (h.size() != o.triples().size())
    fail(ErrorCode::invalid_argument, "triple function size mismatch");
  EdgeFunc out(o.edges().size(), 0.0);
  for (int t = 0; t < static_cast<int>(o.triples().size()); ++t) {
    auto [x0, x1, x2] = o.triples()[t];
    out[o.edge_index(x0, x1)] += h[t];
    out[o.edge_index(x1, x2)] -= h[t];
  }
  return out;
}

VertexFunc double_divergence(const Orientation& o, const TripleFunc& h) {
  return divergence(o, triple_divergence(o, h));
}

std::string Orientation::dump() const {
  std::ostringstream os;
  for (auto [x, y] : edges_) os << graph_.label(x) << " -> " << graph_.label(y) << '\n';
  PathCounts pc = path_counts(*this);
  for (int v : active_) os << "A " << graph_.label(v) << ' ' << pc.A[v] << '\n';
  for (int v : active_) os << "B " << graph_.label(v) << ' ' << pc.B[v] << '\n';
  os << "EG " << pc.eg << '\n';
  return os.str();
}

} // namespace w1plus
