#include <doctest.h>

#include <random>
#include <set>
#include <sstream>

#include "core/orientation.hpp"
#include "core/transport.hpp"

using namespace w1plus;

namespace {

Measure atoms(int n, std::initializer_list<std::pair<int, double>> a) {
  return Measure::from_atoms(n, std::vector<std::pair<int, double>>(a));
}

} // namespace

TEST_CASE("chain orientation for a Dirac pair") {
  Graph g = Graph::path(4);
  Orientation o = orient(g, Measure::dirac(4, 0), Measure::dirac(4, 3));
  REQUIRE(o.edges().size() == 3);
  CHECK(o.has_edge(0, 1));
  CHECK(o.has_edge(1, 2));
  CHECK(o.has_edge(2, 3));
  CHECK(o.triples().size() == 2);
}

TEST_CASE("the middle edge stays unoriented") {
  Graph g = Graph::path(4);
  Measure f0 = atoms(4, {{0, 0.5}, {2, 0.5}});
  Measure f1 = atoms(4, {{1, 0.5}, {3, 0.5}});
  Orientation o = orient(g, f0, f1);
  CHECK(o.has_edge(0, 1));
  CHECK(o.has_edge(2, 3));
  CHECK_FALSE(o.has_edge(1, 2));
  CHECK_FALSE(o.has_edge(2, 1));
  CHECK(o.edges().size() == 2);
}

TEST_CASE("hypercube diamond") {
  Graph g = Graph::hypercube(2);
  Orientation o = orient(g, Measure::dirac(4, g.vertex_at({0, 0})), Measure::dirac(4, g.vertex_at({1, 1})));
  CHECK(o.edges().size() == 4);
  CHECK(o.triples().size() == 2);
  PathCounts pc = path_counts(o);
  CHECK(pc.A[g.vertex_at({0, 0})] == 1);
  CHECK(pc.A[g.vertex_at({0, 1})] == 1);
  CHECK(pc.A[g.vertex_at({1, 0})] == 1);
  CHECK(pc.A[g.vertex_at({1, 1})] == 2);
  CHECK(pc.B[g.vertex_at({0, 0})] == 2);
  CHECK(pc.B[g.vertex_at({1, 1})] == 1);
  CHECK(pc.eg == 2);
}

TEST_CASE("complete graph orientation has no triples") {
  Graph g = Graph::complete(4);
  Measure f0 = atoms(4, {{0, 0.5}, {1, 0.5}});
  Measure f1 = atoms(4, {{2, 0.5}, {3, 0.5}});
  Orientation o = orient(g, f0, f1);
  CHECK_FALSE(o.edges().empty());
  CHECK(o.triples().empty());
}

TEST_CASE("equal measures give an empty orientation") {
  Graph g = Graph::path(4);
  Measure f = atoms(4, {{0, 0.5}, {3, 0.5}});
  Orientation o = orient(g, f, f);
  CHECK(o.edges().empty());
  CHECK(o.active_vertices() == std::vector<int>{0, 3});
  PathCounts pc = path_counts(o);
  CHECK(pc.eg == 2); // two length-zero extremal geodesics
}

TEST_CASE("oriented paths are geodesics") {
  std::mt19937_64 rng(9);
  Graph g = Graph::product(Graph::path(3), Graph::path(3));
  std::vector<double> a(g.vertex_count(), 0.0), b(g.vertex_count(), 0.0);
  a[g.vertex_at({0, 0})] = 0.5;
  a[g.vertex_at({1, 0})] = 0.5;
  b[g.vertex_at({2, 2})] = 0.5;
  b[g.vertex_at({0, 2})] = 0.5;
  Orientation o = orient(g, Measure{a}, Measure{b});
  path_counts(o); // asserts acyclicity
  for (int trial = 0; trial < 200; ++trial) {
    int v = o.active_vertices()[rng() % o.active_vertices().size()];
    std::vector<int> walk{v};
    while (!o.out_set(walk.back()).empty() && walk.size() < 12) {
      const auto& outs = o.out_set(walk.back());
      walk.push_back(outs[rng() % outs.size()]);
    }
    CHECK(g.dist(walk.front(), walk.back()) == static_cast<int>(walk.size()) - 1);
  }
}

TEST_CASE("divergence on a chain") {
  Graph g = Graph::path(3);
  Orientation o = Orientation::from_edges(g, {{0, 1}, {1, 2}});
  VertexFunc d = divergence(o, {1.0, 1.0});
  CHECK(d[0] == 1.0);
  CHECK(d[1] == 0.0);
  CHECK(d[2] == -1.0);
}

TEST_CASE("divergence sums to zero") {
  std::mt19937_64 rng(1);
  Graph g = Graph::hypercube(3);
  Orientation o = orient(g, Measure::dirac(8, 0), Measure::dirac(8, 7));
  EdgeFunc e(o.edges().size());
  for (double& v : e) v = (rng() >> 11) * 0x1.0p-53;
  VertexFunc d = divergence(o, e);
  double total = 0.0;
  for (double v : d) total += v;
  CHECK(total == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("double divergence of a constant on a chain") {
  Graph g = Graph::path(4);
  Orientation o = Orientation::from_edges(g, {{0, 1}, {1, 2}, {2, 3}});
  VertexFunc d2 = double_divergence(o, {1.0, 1.0});
  CHECK(d2[0] == 1.0);
  CHECK(d2[1] == -1.0);
  CHECK(d2[2] == -1.0);
  CHECK(d2[3] == 1.0);
}

TEST_CASE("divergence rejects wrong sizes") {
  Graph g = Graph::path(3);
  Orientation o = Orientation::from_edges(g, {{0, 1}, {1, 2}});
  CHECK_THROWS_AS(divergence(o, {1.0}), Error);
}

TEST_CASE("path counts on chains and split chains") {
  Graph g = Graph::path(4);
  Orientation chain = orient(g, Measure::dirac(4, 0), Measure::dirac(4, 3));
  PathCounts pc = path_counts(chain);
  for (int v = 0; v < 4; ++v) {
    CHECK(pc.A[v] == 1);
    CHECK(pc.B[v] == 1);
  }
  CHECK(pc.eg == 1);

  Measure f0 = Measure::from_atoms(4, {{0, 0.5}, {2, 0.5}});
  Measure f1 = Measure::from_atoms(4, {{1, 0.5}, {3, 0.5}});
  PathCounts pc2 = path_counts(orient(g, f0, f1));
  CHECK(pc2.eg == 2);
}

TEST_CASE("m-weights") {
  Graph g = Graph::path(4);
  Orientation chain = orient(g, Measure::dirac(4, 0), Measure::dirac(4, 3));
  PathCounts pc = path_counts(chain);
  for (int v = 0; v < 4; ++v) CHECK(m_weight(chain, pc, {v}) == Rational(1));

  Graph h = Graph::hypercube(2);
  Orientation o = orient(h, Measure::dirac(4, 0), Measure::dirac(4, 3));
  PathCounts pch = path_counts(o);
  CHECK(m_weight(o, pch, {h.vertex_at({0, 0})}) == Rational(1));
  CHECK(m_weight(o, pch, {h.vertex_at({0, 0}), h.vertex_at({0, 1})}) == Rational(1, 2));
  CHECK(m_weight(o, pch, {h.vertex_at({0, 0}), h.vertex_at({0, 1}), h.vertex_at({1, 1})}) ==
        Rational(1, 2));
  CHECK(m_weight(o, pch, {h.vertex_at({0, 0}), h.vertex_at({1, 0}), h.vertex_at({1, 1})}) ==
        Rational(1, 2));
  CHECK_THROWS_AS(m_weight(o, pch, {h.vertex_at({0, 1}), h.vertex_at({1, 0})}), Error);
}

TEST_CASE("m-weight chain rule over triples is exact") {
  std::mt19937_64 rng(12);
  std::vector<std::pair<Measure, Measure>> instances;
  Graph cube = Graph::hypercube(3);
  instances.emplace_back(Measure::dirac(8, 0), Measure::dirac(8, 7));
  Graph grid = Graph::product(Graph::path(3), Graph::path(3));
  instances.emplace_back(Measure::dirac(9, grid.vertex_at({0, 0})),
                         Measure::dirac(9, grid.vertex_at({2, 2})));
  const Graph* graphs[2] = {&cube, &grid};
  for (int i = 0; i < 2; ++i) {
    Orientation o = orient(*graphs[i], instances[i].first, instances[i].second);
    PathCounts pc = path_counts(o);
    for (auto [x0, x1, x2] : o.triples()) {
      Rational lhs = m_weight(o, pc, {x0, x1}) * m_weight(o, pc, {x1, x2}) / m_weight(o, pc, {x1});
      CHECK(lhs == m_weight(o, pc, {x0, x1, x2}));
    }
  }
}

namespace {

// All maximal directed paths, by brute-force extension.
long brute_extremal_count(const Orientation& o) {
  long count = 0;
  auto extend = [&](auto&& self, int v) -> void {
    if (o.out_set(v).empty()) {
      ++count;
      return;
    }
    for (int w : o.out_set(v)) self(self, w);
  };
  for (int v : o.active_vertices())
    if (o.in_set(v).empty()) extend(extend, v);
  return count;
}

} // namespace

TEST_CASE("extremal geodesic counts match brute force") {
  Graph cube = Graph::hypercube(3);
  Orientation o = orient(cube, Measure::dirac(8, 0), Measure::dirac(8, 7));
  PathCounts pc = path_counts(o);
  CHECK(pc.eg == brute_extremal_count(o));
  CHECK(pc.eg == 6); // 3! orders of coordinate flips

  Graph g = Graph::path(6);
  Measure f0 = Measure::from_atoms(6, {{0, 0.25}, {2, 0.75}});
  Measure f1 = Measure::from_atoms(6, {{3, 0.5}, {5, 0.5}});
  Orientation o2 = orient(g, f0, f1);
  CHECK(path_counts(o2).eg == brute_extremal_count(o2));
}

TEST_CASE("A and B recursions hold") {
  Graph grid = Graph::product(Graph::path(3), Graph::path(3));
  Orientation o = orient(grid, Measure::dirac(9, grid.vertex_at({0, 0})),
                         Measure::dirac(9, grid.vertex_at({2, 2})));
  PathCounts pc = path_counts(o);
  long long source_sum = 0, sink_sum = 0;
  for (int v : o.active_vertices()) {
    if (o.in_set(v).empty()) {
      CHECK(pc.A[v] == 1);
      source_sum += pc.B[v];
    } else {
      long long acc = 0;
      for (int w : o.in_set(v)) acc += pc.A[w];
      CHECK(pc.A[v] == acc);
    }
    if (o.out_set(v).empty()) sink_sum += pc.A[v];
  }
  CHECK(source_sum == pc.eg);
  CHECK(sink_sum == pc.eg);
}

TEST_CASE("orientation dump format") {
  Graph g = Graph::path(3);
  Orientation o = orient(g, Measure::dirac(3, 0), Measure::dirac(3, 2));
  std::string dump = o.dump();
  CHECK(dump.find("0 -> 1") != std::string::npos);
  CHECK(dump.find("1 -> 2") != std::string::npos);
  CHECK(dump.find("A 0 1") != std::string::npos);
  CHECK(dump.find("B 2 1") != std::string::npos);
  CHECK(dump.find("EG 1") != std::string::npos);
}

TEST_CASE("cycle detection trips on a synthetic cycle") {
  Graph g = Graph::cycle(3);
  Orientation o = Orientation::from_edges(g, {{0, 1}, {1, 2}, {2, 0}});
  CHECK_THROWS_AS(path_counts(o), Error);
}

namespace {

long brute_paths_through_triple(const Orientation& o, int x0, int x1, int x2) {
  // maximal directed paths that visit x0, x1, x2 consecutively
  long count = 0;
  auto extend = [&](auto&& self, std::vector<int>& walk) -> void {
    if (o.out_set(walk.back()).empty()) {
      for (std::size_t i = 0; i + 2 < walk.size(); ++i)
        if (walk[i] == x0 && walk[i + 1] == x1 && walk[i + 2] == x2) {
          ++count;
          return;
        }
      return;
    }
    for (int w : o.out_set(walk.back())) {
      walk.push_back(w);
      self(self, walk);
      walk.pop_back();
    }
  };
  for (int v : o.active_vertices())
    if (o.in_set(v).empty()) {
      std::vector<int> walk{v};
      extend(extend, walk);
    }
  return count;
}

} // namespace

TEST_CASE("triple visit counts match the A*B formula") {
  Graph cube = Graph::hypercube(3);
  Orientation o = orient(cube, Measure::dirac(8, 0), Measure::dirac(8, 7));
  REQUIRE(o.active_vertices().size() <= 10);
  PathCounts pc = path_counts(o);
  for (auto [x0, x1, x2] : o.triples())
    CHECK(brute_paths_through_triple(o, x0, x1, x2) == pc.A[x0] * pc.B[x2]);
}
