#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "core/graph.hpp"

using namespace w1plus;

TEST_CASE("builtin families") {
  Graph p = Graph::path(4);
  CHECK(p.vertex_count() == 4);
  CHECK(p.edge_count() == 3);
  CHECK(p.dist(0, 3) == 3);

  Graph h = Graph::hypercube(2);
  CHECK(h.vertex_count() == 4);
  CHECK(h.edge_count() == 4);
  CHECK(h.dist(0, 3) == 2); // (0,0) to (1,1)

  Graph k = Graph::complete(3);
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      CHECK(k.dist(x, y) == (x == y ? 0 : 1));

  Graph c = Graph::cycle(5);
  CHECK(c.dist(0, 3) == 2);
  CHECK_THROWS_AS(Graph::cycle(2), Error);
}

TEST_CASE("edge list parsing") {
  Graph g = Graph::from_edge_list_text("# comment\n0 1\n1 2\n");
  CHECK(g.vertex_count() == 3);
  CHECK(g.dist(0, 2) == 2);

  // labels are remembered
  Graph s = Graph::from_edge_list_text("5 7\n7 9\n");
  CHECK(s.vertex_count() == 3);
  CHECK(s.label(0) == 5);
  CHECK(s.vertex_of_label(9) == 2);

  CHECK_THROWS_AS(Graph::from_edge_list_text("0 1\n2 3\n"), Error); // disconnected
  CHECK_THROWS_AS(Graph::from_edge_list_text(""), Error);           // empty
  CHECK_THROWS_AS(Graph::from_edge_list_text("0 0\n"), Error);      // loop
}

TEST_CASE("distance table is a metric") {
  Graph g = Graph::product(Graph::path(3), Graph::cycle(4));
  int n = g.vertex_count();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      CHECK(g.dist(x, y) == g.dist(y, x));
      CHECK((g.dist(x, y) == 0) == (x == y));
      CHECK((g.dist(x, y) == 1) == g.adjacent(x, y));
      for (int z = 0; z < n; ++z) CHECK(g.dist(x, z) <= g.dist(x, y) + g.dist(y, z));
    }
}

TEST_CASE("product metric is the sum of coordinate distances") {
  Graph a = Graph::path(5), b = Graph::cycle(4);
  Graph g = Graph::product(a, b);
  std::mt19937_64 rng(1);
  for (int s = 0; s < 100; ++s) {
    int x = int(rng() % g.vertex_count()), y = int(rng() % g.vertex_count());
    auto cx = g.coords(x), cy = g.coords(y);
    CHECK(g.dist(x, y) == a.dist(cx[0], cy[0]) + b.dist(cx[1], cy[1]));
  }
}

TEST_CASE("path2 x path2 is the 2-cube") {
  Graph g = Graph::product(Graph::path(2), Graph::path(2));
  Graph h = Graph::hypercube(2);
  CHECK(g.vertex_count() == h.vertex_count());
  CHECK(g.edges() == h.edges());
}

namespace {

// Independent oracle: plain DFS over adjacent steps of the right length.
void brute_paths(const Graph& g, int v, int y, int budget, std::vector<int>& stack,
                 std::vector<Curve>& out) {
  if (budget == 0) {
    if (v == y) out.push_back(Curve{stack});
    return;
  }
  for (int w : g.neighbors(v)) {
    stack.push_back(w);
    brute_paths(g, w, y, budget - 1, stack, out);
    stack.pop_back();
  }
}

std::vector<Curve> brute_geodesics(const Graph& g, int x, int y) {
  std::vector<Curve> out;
  std::vector<int> stack{x};
  brute_paths(g, x, y, g.dist(x, y), stack, out);
  return out;
}

std::set<std::vector<int>> as_set(const std::vector<Curve>& cs) {
  std::set<std::vector<int>> s;
  for (const auto& c : cs) s.insert(c.points);
  return s;
}

} // namespace

TEST_CASE("geodesic enumeration matches brute force on small graphs") {
  std::vector<Graph> graphs{Graph::path(4), Graph::cycle(6), Graph::complete(4),
                            Graph::hypercube(3), Graph::product(Graph::path(3), Graph::path(2))};
  for (const Graph& g : graphs) {
    REQUIRE(g.vertex_count() <= 12);
    for (int x = 0; x < g.vertex_count(); ++x)
      for (int y = 0; y < g.vertex_count(); ++y) {
        auto enumerated = g.geodesics(x, y);
        for (const auto& c : enumerated) {
          CHECK(g.is_geodesic(c));
          CHECK(c.length() == g.dist(x, y));
        }
        CHECK(as_set(enumerated) == as_set(brute_geodesics(g, x, y)));
        CHECK(g.geodesic_count(x, y) == static_cast<long>(enumerated.size()));
      }
  }
}

TEST_CASE("geodesic counts on products follow the binomial rule") {
  Graph p = Graph::path(4);
  CHECK(p.geodesics(0, 3).size() == 1);

  Graph h2 = Graph::hypercube(2);
  CHECK(h2.geodesics(0, 3).size() == 2);

  // grid: (0,0) -> (2,1) has C(3,1) * 1 * 1 = 3 geodesics
  Graph grid = Graph::product(Graph::path(3), Graph::path(2));
  int from = grid.vertex_at({0, 0});
  int to = grid.vertex_at({2, 1});
  CHECK(grid.geodesics(from, to).size() == 3);

  // corner to corner in path3 x path2: C(3,2) = 3
  CHECK(grid.geodesics(grid.vertex_at({0, 0}), grid.vertex_at({2, 1})).size() == 3);
}

TEST_CASE("product geodesics project with a monotone index map") {
  Graph a = Graph::path(3), b = Graph::cycle(4);
  Graph g = Graph::product(a, b);
  int x = g.vertex_at({0, 0}), y = g.vertex_at({2, 2});
  for (const auto& c : g.geodesics(x, y)) {
    // phi(k) = distance travelled in the first coordinate after k steps
    std::vector<int> phi{0};
    std::vector<int> proj1, proj2;
    for (std::size_t k = 0; k < c.points.size(); ++k) {
      auto cc = g.coords(c.points[k]);
      if (proj1.empty() || proj1.back() != cc[0]) proj1.push_back(cc[0]);
      if (proj2.empty() || proj2.back() != cc[1]) proj2.push_back(cc[1]);
      if (k > 0) {
        auto prev = g.coords(c.points[k - 1]);
        int step1 = (cc[0] != prev[0]) ? 1 : 0;
        phi.push_back(phi.back() + step1);
        CHECK((phi[k] - phi[k - 1] == 0 || phi[k] - phi[k - 1] == 1));
      }
    }
    CHECK(phi.back() == a.dist(0, 2));
    CHECK(a.is_geodesic(Curve{proj1}));
    CHECK(b.is_geodesic(Curve{proj2}));
  }
}

TEST_CASE("trivial geodesic for x == y") {
  Graph g = Graph::path(3);
  auto gs = g.geodesics(1, 1);
  REQUIRE(gs.size() == 1);
  CHECK(gs[0].points == std::vector<int>{1});
}

TEST_CASE("vertex cap") {
  CHECK_THROWS_AS(Graph::path(5000), Error);
  CHECK_THROWS_AS(Graph::product(Graph::path(100), Graph::path(50)), Error);
  CHECK_THROWS_AS(Graph::hypercube(13), Error);
}

TEST_CASE("geodesic count cap trips on combinatorial blowups") {
  Graph g = Graph::hypercube(10); // 10! corner-to-corner geodesics
  CHECK_THROWS_AS(g.geodesic_count(0, g.vertex_count() - 1), Error);
}
