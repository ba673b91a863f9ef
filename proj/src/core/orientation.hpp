#pragma once

#include <array>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "graph.hpp"
#include "measure.hpp"
#include "rational.hpp"

namespace w1plus {

// The W1-orientation of a graph with respect to a pair of measures: an edge
// carries x -> y when (x,y) is a consecutive step of some geodesic between
// support points coupled by some W1-optimal coupling. The result is a DAG and
// every directed path is a geodesic.
class Orientation {
public:
  // Direct construction from an explicit oriented edge list (used for slice
  // triples and synthetic test orientations).
  static Orientation from_edges(Graph g, std::vector<std::pair<int, int>> edges,
                                const std::vector<int>& extra_active = {});

  const Graph& graph() const { return graph_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<std::array<int, 3>>& triples() const { return triples_; }
  const std::vector<int>& in_set(int v) const { return in_[v]; }   // E(v)
  const std::vector<int>& out_set(int v) const { return out_[v]; } // F(v)
  const std::vector<int>& active_vertices() const { return active_; }
  bool is_active(int v) const { return is_active_[v]; }

  int edge_index(int x, int y) const;   // -1 if not oriented
  int triple_index(int x0, int x1, int x2) const;
  bool has_edge(int x, int y) const { return edge_index(x, y) >= 0; }

  std::string dump() const; // "x -> y" lines, then A/B/EG (labels)

private:
  friend Orientation orient(const Graph&, const Measure&, const Measure&);
  friend struct PathCounts;

  void finalize(const std::vector<int>& extra_active);

  Graph graph_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::array<int, 3>> triples_;
  std::vector<std::vector<int>> in_, out_;
  std::vector<int> active_;
  std::vector<char> is_active_;
  std::unordered_map<long long, int> edge_idx_;
  std::unordered_map<long long, int> triple_idx_;
};

Orientation orient(const Graph& g, const Measure& f0, const Measure& f1);

// Extremal-geodesic counting on the orientation DAG. A(x) counts oriented
// paths from sources to x, B(x) from x to sinks; eg = |EG| counts maximal
// oriented paths (isolated active vertices count one each).
struct PathCounts {
  std::vector<long long> A, B;
  long long eg = 0;
  std::vector<int> topo; // active vertices, sources first
};

PathCounts path_counts(const Orientation& o);

// m(x) = A(x)B(x)/|EG|, m(x0,x1) = A(x0)B(x1)/|EG|,
// m(x0,x1,x2) = A(x0)B(x2)/|EG|; exact rationals.
Rational m_weight(const Orientation& o, const PathCounts& pc, const std::vector<int>& tuple);

// Edge and triple functions are stored parallel to o.edges() / o.triples().
using VertexFunc = std::vector<double>; // indexed by graph vertex
using EdgeFunc = std::vector<double>;
using TripleFunc = std::vector<double>;

// del . g(x) = sum_{F(x)} g(x,x2) - sum_{E(x)} g(x0,x)
VertexFunc divergence(const Orientation& o, const EdgeFunc& g);
// del . h on an edge (x0,x1): sum_{F(x1)} h(x0x1x2) - sum_{E(x0)} h(x-1,x0,x1)
EdgeFunc triple_divergence(const Orientation& o, const TripleFunc& h);
// del_2 . h = del . (del . h)
VertexFunc double_divergence(const Orientation& o, const TripleFunc& h);

} // namespace w1plus
