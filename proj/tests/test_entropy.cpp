#include <doctest.h>

#include <cmath>
#include <random>

#include "core/entropy.hpp"
#include "core/transport.hpp"

using namespace w1plus;

TEST_CASE("shannon entropy basics") {
  CHECK(shannon_entropy({1.0, 0.0}) == 0.0);
  CHECK(shannon_entropy({0.5, 0.5}) == doctest::Approx(-std::log(2.0)).epsilon(1e-14));
  CHECK(shannon_entropy({0.25, 0.5, 0.25}) ==
        doctest::Approx(-1.5 * std::log(2.0)).epsilon(1e-14));
}

TEST_CASE("renyi entropy basics and the p -> 1 limit") {
  CHECK(renyi_entropy({1.0}, 0.3) == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(renyi_entropy({0.5, 0.5}, 0.5) == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-14));
  CHECK_THROWS_AS(renyi_entropy({1.0}, 1.2), Error);
  CHECK_THROWS_AS(renyi_entropy({1.0}, 0.0), Error);

  std::vector<double> f{0.25, 0.5, 0.25};
  double p = 0.999;
  double approx_H = (renyi_entropy(f, p) + 1.0) / (1.0 - p);
  CHECK(std::fabs(approx_H - shannon_entropy(f)) <= 1e-2);
}

TEST_CASE("relative entropy") {
  std::vector<double> f{0.25, 0.5, 0.25};
  CHECK(relative_entropy(f, f) == doctest::Approx(0.0));
  std::vector<double> uni4{0.25, 0.25, 0.25, 0.25};
  std::vector<double> dirac{1.0, 0.0, 0.0, 0.0};
  CHECK(relative_entropy(dirac, uni4) == doctest::Approx(std::log(4.0)).epsilon(1e-14));

  // uniform-reference shift identity
  std::mt19937_64 rng(17);
  std::vector<double> r(4, 0.0);
  for (int i = 0; i < 16; ++i) r[rng() % 4] += 1.0 / 16;
  CHECK(std::fabs(relative_entropy(r, uni4) - shannon_entropy(r) - std::log(4.0)) < 1e-12);

  std::vector<double> bad{0.5, 0.5, 0.0, 0.0};
  std::vector<double> nu{1.0, 0.0, 0.0, 0.0};
  CHECK_THROWS_AS(relative_entropy(bad, nu), Error);
}

TEST_CASE("entropy curve on the Bernoulli bridge") {
  Graph g = Graph::path(2);
  GeodesicCurve c = solve_canonical(g, Measure::dirac(2, 0), Measure::dirac(2, 1));
  std::vector<double> grid{0.25, 0.5, 0.75};
  EntropyCurveReport rep = entropy_along_curve(c, grid);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    double t = grid[i];
    CHECK(rep.Hpp_analytic[i] ==
          doctest::Approx(1.0 / t + 1.0 / (1.0 - t)).epsilon(1e-10));
    CHECK(std::fabs(rep.Hpp_fd[i] - rep.Hpp_analytic[i]) <=
          1e-4 * std::max(1.0, std::fabs(rep.Hpp_analytic[i])));
  }
  CHECK(rep.Hpp_analytic[1] == doctest::Approx(4.0).epsilon(1e-11));
  CHECK(rep.convex);
}

TEST_CASE("convexity along Z-segment curves") {
  Graph g = Graph::path(6);
  GeodesicCurve c = solve_canonical(g, Measure::dirac(6, 0), Measure::dirac(6, 5));
  std::vector<double> grid;
  for (int i = 0; i <= 100; ++i) grid.push_back(i / 100.0);
  EntropyCurveReport rep = entropy_along_curve(c, grid, {0.5});
  CHECK(rep.convex);
  CHECK(rep.min_Hpp >= -1e-8);
  CHECK(rep.renyi_min_second_diff[0] >= -1e-6);
}

TEST_CASE("w squared and velocity fields") {
  Graph g = Graph::path(3);
  GeodesicCurve c = solve_canonical(g, Measure::dirac(3, 0), Measure::dirac(3, 2));
  for (double t : {0.2, 0.5, 0.9}) {
    BBTriple tr = c.triple_at(t);
    CHECK(w_squared(tr) == doctest::Approx(2.0).epsilon(1e-12));
    auto [vp, vm] = velocity_fields(tr);
    double inner = 0.0;
    for (int v : tr.orient->active_vertices()) inner += tr.f[v] * vp[v] * vm[v];
    CHECK(inner == doctest::Approx(w_squared(tr)).epsilon(1e-9));
  }

  // adjacent Diracs: no oriented triples, W^2 = 0
  Graph g2 = Graph::path(2);
  GeodesicCurve c2 = solve_canonical(g2, Measure::dirac(2, 0), Measure::dirac(2, 1));
  CHECK(w_squared(c2.triple_at(0.5)) == 0.0);
}

TEST_CASE("w squared is constant along curves") {
  std::mt19937_64 rng(23);
  Graph g = Graph::path(7);
  std::vector<double> a(7, 0.0), b(7, 0.0);
  for (int i = 0; i < 12; ++i) a[rng() % 3] += 1.0 / 12;
  for (int i = 0; i < 12; ++i) b[4 + rng() % 3] += 1.0 / 12;
  GeodesicCurve c = solve_canonical(g, Measure{a}, Measure{b});
  double lo = INFINITY, hi = -INFINITY;
  for (int i = 0; i <= 100; ++i) {
    double w2 = w_squared(c.triple_at(i / 100.0));
    lo = std::min(lo, w2);
    hi = std::max(hi, w2);
  }
  CHECK(hi - lo < 1e-8);
}

TEST_CASE("relative entropy bound with quadratic and absolute-value potentials") {
  Graph g = Graph::path(3);
  GeodesicCurve c = solve_canonical(g, Measure::dirac(3, 0), Measure::dirac(3, 2));
  std::vector<double> grid;
  for (int i = 1; i < 40; ++i) grid.push_back(i / 40.0);

  SUBCASE("V = 0, K = 0 reduces to equality") {
    Potential pot{std::vector<double>(3, 0.0), 0.0};
    RelativeEntropyReport rep = relative_entropy_bound(c, pot, grid);
    CHECK(rep.satisfied);
    for (std::size_t i = 0; i < rep.grid.size(); ++i)
      CHECK(rep.Hnupp[i] == doctest::Approx(rep.Hpp[i]).epsilon(1e-12));
  }

  SUBCASE("V(k) = k^2 is 2-convex and the bound holds with W^2 = 2") {
    Potential pot{{0.0, 1.0, 4.0}, 2.0};
    RelativeEntropyReport rep = relative_entropy_bound(c, pot, grid);
    CHECK(rep.satisfied);
    for (double w2 : rep.w2) CHECK(w2 == doctest::Approx(2.0).epsilon(1e-12));
  }

  SUBCASE("V(k) = |k - 1| is 0-convex") {
    Potential pot{{1.0, 0.0, 1.0}, 0.0};
    RelativeEntropyReport rep = relative_entropy_bound(c, pot, grid);
    CHECK(rep.satisfied);
  }

  SUBCASE("V(k) = |k| is 0-convex") {
    Potential pot{{0.0, 1.0, 2.0}, 0.0};
    RelativeEntropyReport rep = relative_entropy_bound(c, pot, grid);
    CHECK(rep.satisfied);
  }

  SUBCASE("insufficiently convex potential is rejected with the offending triple") {
    Potential pot{{0.0, 1.0, 4.0}, 3.0}; // second difference is 2 < K
    CHECK_THROWS_AS(relative_entropy_bound(c, pot, grid), Error);
  }
}

TEST_CASE("psi is zero at 1 and non-negative on the grid") {
  for (int pi = 1; pi <= 9; ++pi) {
    double p = pi / 10.0;
    CHECK(psi(1.0, p) == doctest::Approx(0.0).epsilon(1e-14));
  }
  double min_psi = 0.0;
  for (int pi = 1; pi <= 9; ++pi)
    for (int i = 0; i <= 10000; ++i) min_psi = std::min(min_psi, psi(i * 1e-3, pi / 10.0));
  CHECK(min_psi >= -1e-12);
}

TEST_CASE("hoelder gap is zero at ones and non-negative on random samples") {
  for (int pi = 1; pi <= 9; ++pi)
    CHECK(holder_gap(1.0, 1.0, 1.0, pi / 10.0) == doctest::Approx(0.0).epsilon(1e-14));
  std::mt19937_64 rng(8);
  auto unit = [&rng]() { return (rng() >> 11) * 0x1.0p-53; };
  double worst = 0.0;
  for (int s = 0; s < 100000; ++s) {
    double gap = holder_gap(0.01 + 3 * unit(), 0.01 + 3 * unit(), 0.01 + 3 * unit(),
                            0.02 + 0.96 * unit());
    worst = std::min(worst, gap);
  }
  CHECK(worst >= -1e-12);
}

TEST_CASE("cycle graphs keep the entropy convex") {
  // every vertex has two neighbours, so the edge bound is non-negative
  Graph g = Graph::cycle(6);
  GeodesicCurve c = solve_canonical(g, Measure::dirac(6, 0), Measure::dirac(6, 3));
  CHECK(c.orientation->edges().size() == 6); // both arcs of the hexagon
  std::vector<double> grid;
  for (int i = 0; i <= 50; ++i) grid.push_back(i / 50.0);
  EntropyCurveReport rep = entropy_along_curve(c, grid);
  CHECK(rep.convex);
  CHECK(rep.min_Hpp >= -1e-8);

  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<double> a(6, 0.0), b(6, 0.0);
    for (int i = 0; i < 8; ++i) a[rng() % 6] += 1.0 / 8;
    for (int i = 0; i < 8; ++i) b[rng() % 6] += 1.0 / 8;
    GeodesicCurve rc = solve_canonical(g, Measure{a}, Measure{b});
    EntropyCurveReport rr = entropy_along_curve(rc, grid);
    CHECK(rr.convex);
  }
}
