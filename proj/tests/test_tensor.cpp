#include <doctest.h>

#include <cmath>
#include <random>

#include "core/entropy.hpp"
#include "core/tensor.hpp"

using namespace w1plus;

namespace {

// Product measure on g1 x g2 from factor measures.
Measure product_measure(const Graph& prod, const Measure& m1, const Measure& m2) {
  int n2 = m2.size();
  std::vector<double> m(prod.vertex_count(), 0.0);
  for (int i = 0; i < m1.size(); ++i)
    for (int j = 0; j < n2; ++j) m[i * n2 + j] = m1[i] * m2[j];
  return Measure(std::move(m));
}

Measure random_measure(int n, int atoms, std::mt19937_64& rng) {
  std::vector<double> m(n, 0.0);
  for (int i = 0; i < atoms; ++i) m[rng() % n] += 1.0 / atoms;
  return Measure(std::move(m));
}

} // namespace

TEST_CASE("orientation decomposition on dirac corner pairs") {
  Graph z1 = Graph::path(4), z2 = Graph::path(3);
  Graph prod = Graph::product(z1, z2);
  Measure f0 = Measure::dirac(prod.vertex_count(), prod.vertex_at({0, 0}));
  Measure f1 = Measure::dirac(prod.vertex_count(), prod.vertex_at({3, 2}));
  DecompositionReport rep = check_orientation_decomposition(z1, z2, f0, f1);
  CHECK(rep.equal);
}

TEST_CASE("orientation decomposition on the 2-cube") {
  Graph k2 = Graph::path(2);
  Graph prod = Graph::product(k2, k2);
  Measure f0 = Measure::dirac(4, prod.vertex_at({0, 0}));
  Measure f1 = Measure::dirac(4, prod.vertex_at({1, 1}));
  DecompositionReport rep = check_orientation_decomposition(k2, k2, f0, f1);
  CHECK(rep.equal);
  Orientation o = orient(prod, f0, f1);
  CHECK(o.edges().size() == 4);
}

TEST_CASE("orientation decomposition for equal product measures is empty") {
  Graph z1 = Graph::path(3), z2 = Graph::path(2);
  Graph prod = Graph::product(z1, z2);
  Measure m1 = Measure::from_atoms(3, {{0, 0.5}, {2, 0.5}});
  Measure m2 = Measure::from_atoms(2, {{0, 0.25}, {1, 0.75}});
  Measure f = product_measure(prod, m1, m2);
  DecompositionReport rep = check_orientation_decomposition(z1, z2, f, f);
  CHECK(rep.equal);
  CHECK(orient(prod, f, f).edges().empty());
}

TEST_CASE("orientation decomposition on randomized product measures") {
  std::mt19937_64 rng(2718);
  Graph z1 = Graph::path(5), z2 = Graph::path(4);
  Graph prod = Graph::product(z1, z2);
  for (int trial = 0; trial < 10; ++trial) {
    Measure f0 = product_measure(prod, random_measure(5, 8, rng), random_measure(4, 8, rng));
    Measure f1 = product_measure(prod, random_measure(5, 8, rng), random_measure(4, 8, rng));
    DecompositionReport rep = check_orientation_decomposition(z1, z2, f0, f1);
    CHECK(rep.equal);
  }
}

TEST_CASE("split divergence adds up to the full divergence") {
  std::mt19937_64 rng(5);
  Graph prod = Graph::product(Graph::path(3), Graph::path(3));
  Measure f0 = Measure::dirac(9, prod.vertex_at({0, 0}));
  Measure f1 = Measure::dirac(9, prod.vertex_at({2, 2}));
  auto o = std::make_shared<Orientation>(orient(prod, f0, f1));
  ProductOrientation po = product_orientation(o);
  EdgeFunc g(o->edges().size());
  for (double& v : g) v = (rng() >> 11) * 0x1.0p-53;
  auto [d1, d2] = split_divergence(po, g);
  VertexFunc d = divergence(*o, g);
  for (int v = 0; v < 9; ++v) CHECK(d1[v] + d2[v] == doctest::Approx(d[v]).epsilon(1e-15));

  // class-1-only function has zero second-axis divergence
  EdgeFunc g1only(o->edges().size(), 0.0);
  for (std::size_t e = 0; e < g1only.size(); ++e)
    if (po.edge_class[e] == 1) g1only[e] = 1.0;
  auto [e1, e2] = split_divergence(po, g1only);
  for (int v = 0; v < 9; ++v) CHECK(e2[v] == 0.0);
}

TEST_CASE("squares on the 2-cube diamond") {
  Graph prod = Graph::hypercube(2);
  Measure f0 = Measure::dirac(4, 0);
  Measure f1 = Measure::dirac(4, 3);
  auto o = std::make_shared<Orientation>(orient(prod, f0, f1));
  ProductOrientation po = product_orientation(o);
  SquareReport rep = enumerate_squares(po);
  CHECK(rep.squares.size() == 1);
  CHECK(rep.bijections_ok);
  CHECK(rep.t12 == 1);
  CHECK(rep.t21 == 1);
}

TEST_CASE("squares on a grid diamond") {
  Graph prod = Graph::product(Graph::path(3), Graph::path(2));
  Measure f0 = Measure::dirac(6, prod.vertex_at({0, 0}));
  Measure f1 = Measure::dirac(6, prod.vertex_at({2, 1}));
  auto o = std::make_shared<Orientation>(orient(prod, f0, f1));
  SquareReport rep = enumerate_squares(product_orientation(o));
  CHECK(rep.bijections_ok);
  CHECK(rep.sum_f1f2 == static_cast<long>(rep.squares.size()));
}

TEST_CASE("chain times a fixed coordinate has no squares") {
  Graph prod = Graph::product(Graph::path(4), Graph::path(2));
  Measure f0 = Measure::dirac(8, prod.vertex_at({0, 0}));
  Measure f1 = Measure::dirac(8, prod.vertex_at({3, 0}));
  auto o = std::make_shared<Orientation>(orient(prod, f0, f1));
  SquareReport rep = enumerate_squares(product_orientation(o));
  CHECK(rep.squares.empty());
  CHECK(rep.bijections_ok);
}

TEST_CASE("projected slices are BB-triples and match the product Bernoulli") {
  Graph prod = Graph::hypercube(2);
  GeodesicCurve c = solve_canonical(prod, Measure::dirac(4, 0), Measure::dirac(4, 3));
  BBTriple tr = c.triple_at(0.5);
  ProductOrientation po = product_orientation(c.orientation);

  BBTriple slice = project_triple(tr, po, 1, 0); // first coordinate varies, second fixed to 0
  CHECK(validate(slice).max_bb_rel_violation <= 1e-9);
  REQUIRE(slice.orient->edges().size() == 1);
  CHECK(slice.f[0] == doctest::Approx(0.25).epsilon(1e-10));
  CHECK(slice.f[1] == doctest::Approx(0.25).epsilon(1e-10));

  // zero-g triple slices to zero functional
  BBTriple zero = tr;
  for (double& v : zero.g) v = 0.0;
  for (double& v : zero.h) v = 0.0;
  BBTriple zslice = project_triple(zero, po, 2, 1);
  CHECK(functional_I(zslice) == 0.0);
}

TEST_CASE("slice BB equation holds exactly on grid curves") {
  Graph prod = Graph::product(Graph::path(3), Graph::path(3));
  GeodesicCurve c = solve_canonical(prod, Measure::dirac(9, prod.vertex_at({0, 0})),
                                    Measure::dirac(9, prod.vertex_at({2, 2})));
  BBTriple tr = c.triple_at(0.3);
  ProductOrientation po = product_orientation(c.orientation);
  for (int fixed = 0; fixed < 3; ++fixed) {
    BBTriple slice = project_triple(tr, po, 1, fixed);
    CHECK(validate(slice).max_bb_rel_violation <= 1e-12);
  }
}

TEST_CASE("tensorization on the 2-cube is an equality for the Bernoulli product") {
  Graph prod = Graph::hypercube(2);
  GeodesicCurve c = solve_canonical(prod, Measure::dirac(4, 0), Measure::dirac(4, 3));
  std::vector<double> grid{0.2, 0.5, 0.8};
  TensorizationReport rep = tensorization_check(c, grid);
  CHECK(rep.all_satisfied);
  for (const auto& row : rep.rows) {
    double expect = 2.0 * (1.0 / row.t + 1.0 / (1.0 - row.t));
    CHECK(row.Hpp == doctest::Approx(expect).epsilon(1e-9));
    CHECK(row.slice_sum_axis1 + row.slice_sum_axis2 ==
          doctest::Approx(row.Hpp).epsilon(1e-9));
    CHECK(row.involutive_edge_bound <= row.Hpp + 1e-8);
  }
}

TEST_CASE("tensorization bound on grid and mixed products") {
  std::mt19937_64 rng(99);
  SUBCASE("Z x Z dirac corners") {
    Graph prod = Graph::product(Graph::path(4), Graph::path(3));
    GeodesicCurve c = solve_canonical(prod, Measure::dirac(12, prod.vertex_at({0, 0})),
                                      Measure::dirac(12, prod.vertex_at({3, 2})));
    std::vector<double> grid;
    for (int i = 1; i < 20; ++i) grid.push_back(i / 20.0);
    TensorizationReport rep = tensorization_check(c, grid);
    CHECK(rep.all_satisfied);
    for (const auto& row : rep.rows) {
      CHECK(row.slice_sum_axis1 + row.slice_sum_axis2 >= -1e-8); // slices on Z are non-negative
      CHECK(row.Hpp >= -1e-8);
    }
  }
  SUBCASE("random product measures on Z x Z_2") {
    Graph z = Graph::path(4), two = Graph::path(2);
    Graph prod = Graph::product(z, two);
    for (int trial = 0; trial < 5; ++trial) {
      Measure f0 = product_measure(prod, random_measure(4, 8, rng), random_measure(2, 8, rng));
      Measure f1 = product_measure(prod, random_measure(4, 8, rng), random_measure(2, 8, rng));
      GeodesicCurve c = solve_canonical(prod, f0, f1);
      std::vector<double> grid{0.25, 0.5, 0.75};
      TensorizationReport rep = tensorization_check(c, grid);
      CHECK(rep.all_satisfied);
    }
  }
}

TEST_CASE("three-factor cube uses line slices") {
  Graph prod = Graph::hypercube(3);
  GeodesicCurve c = solve_canonical(prod, Measure::dirac(8, 0), Measure::dirac(8, 7));
  std::vector<double> grid{0.3, 0.5, 0.7};
  TensorizationReport rep = tensorization_check(c, grid);
  CHECK(rep.all_satisfied);
  for (const auto& row : rep.rows) {
    // all factors involutive: the line-slice sum IS the involutive bound
    CHECK(row.involutive_edge_bound == doctest::Approx(row.line_slice_sum).epsilon(1e-9));
    CHECK(row.Hpp >= row.involutive_edge_bound - 1e-8);
  }
}

TEST_CASE("block graphs and marginals") {
  Graph prod = Graph::product(Graph::product(Graph::path(3), Graph::path(2)), Graph::cycle(4));
  CHECK(prod.factors().size() == 3);
  CHECK(prod.top_split() == 2);
  Graph b1 = Graph::factor_block(prod, 0, 2);
  CHECK(b1.vertex_count() == 6);
  CHECK(b1.edge_count() == Graph::product(Graph::path(3), Graph::path(2)).edge_count());
  Graph b2 = Graph::factor_block(prod, 2, 3);
  CHECK(b2.vertex_count() == 4);
  CHECK(b2.edge_count() == 4);

  std::mt19937_64 rng(4);
  Measure f = random_measure(prod.vertex_count(), 24, rng);
  Measure m1 = block_marginal(prod, f, 2, true);
  Measure m2 = block_marginal(prod, f, 2, false);
  CHECK(m1.total() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(m2.total() == doctest::Approx(1.0).epsilon(1e-12));
  double check = 0.0;
  for (int v = 0; v < prod.vertex_count(); ++v)
    if (prod.coords(v)[2] == 1) check += f[v];
  CHECK(m2[1] == doctest::Approx(check).epsilon(1e-12));
}

TEST_CASE("orientation decomposition with a cycle factor") {
  std::mt19937_64 rng(314);
  Graph z = Graph::path(3), c4 = Graph::cycle(4);
  Graph prod = Graph::product(c4, z);
  for (int trial = 0; trial < 5; ++trial) {
    Measure f0 = product_measure(prod, random_measure(4, 8, rng), random_measure(3, 8, rng));
    Measure f1 = product_measure(prod, random_measure(4, 8, rng), random_measure(3, 8, rng));
    DecompositionReport rep = check_orientation_decomposition(c4, z, f0, f1);
    CHECK(rep.equal);
  }
}
