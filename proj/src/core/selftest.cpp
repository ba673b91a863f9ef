#include "selftest.hpp"

#include <cmath>
#include <iomanip>
#include <random>

#include "binom.hpp"
#include "entropy.hpp"
#include "geodesic.hpp"
#include "tensor.hpp"

namespace w1plus {

namespace {

std::shared_ptr<const Orientation> chain_orientation(int len) {
  Graph g = Graph::path(len + 1);
  std::vector<std::pair<int, int>> edges;
  for (int k = 0; k < len; ++k) edges.emplace_back(k, k + 1);
  return std::make_shared<Orientation>(Orientation::from_edges(g, edges));
}

std::shared_ptr<const Orientation> open_cycle_orientation(int r) {
  Graph g = Graph::cycle(r);
  std::vector<std::pair<int, int>> edges;
  for (int k = 0; k + 1 < r; ++k) edges.emplace_back(k, k + 1);
  return std::make_shared<Orientation>(Orientation::from_edges(g, edges));
}

} // namespace

int selftest(std::uint64_t seed, std::ostream& log) {
  std::mt19937_64 rng(seed);
  auto unit = [&rng]() { return (rng() >> 11) * 0x1.0p-53; };
  int failures = 0;
  auto report = [&](const char* name, bool ok, const std::string& detail) {
    log << (ok ? "[ok]   " : "[FAIL] ") << name << "  " << detail << '\n';
    if (!ok) ++failures;
  };

  {
    // Randomized BB triples on chains and open cycles: the two expressions of
    // the functional agree, the edge bound holds, and two-neighbour graphs
    // give a non-negative functional.
    double max_ident = 0.0, worst_bound = 0.0, min_I = 0.0;
    const int samples = 10000;
    for (int s = 0; s < samples; ++s) {
      std::shared_ptr<const Orientation> o =
          (s % 4 == 3) ? open_cycle_orientation(3 + int(rng() % 6))
                       : chain_orientation(2 + int(rng() % 7));
      BBTriple t = random_bb_triple(o, rng);
      double a = functional_I(t), b = functional_I_ibp(t);
      max_ident = std::max(max_ident, std::fabs(a - b) / std::max(1.0, std::fabs(a)));
      IBoundReport br = check_I_bound(t);
      worst_bound = std::max(worst_bound, br.bound - br.I);
      min_I = std::min(min_I, a);
    }
    report("bb identity I = I_ibp", max_ident <= 1e-9,
           "max rel diff " + std::to_string(max_ident));
    report("bb edge bound", worst_bound <= 1e-8, "worst slack " + std::to_string(worst_bound));
    report("bb two-neighbour positivity", min_I >= -1e-10, "min I " + std::to_string(min_I));
  }

  {
    double min_psi = 0.0;
    for (int pi = 1; pi <= 9; ++pi) {
      double p = pi / 10.0;
      for (int i = 0; i <= 10000; ++i) min_psi = std::min(min_psi, psi(i * 1e-3, p));
    }
    report("psi grid", min_psi >= -1e-12, "min " + std::to_string(min_psi));

    double min_gap = 0.0;
    for (int s = 0; s < 100000; ++s) {
      double f = 0.02 + 4.0 * unit(), g = 0.02 + 4.0 * unit(), h = 0.02 + 4.0 * unit();
      double p = 0.05 + 0.9 * unit();
      min_gap = std::min(min_gap, holder_gap(f, g, h, p));
    }
    report("hoelder gap", min_gap >= -1e-12, "min " + std::to_string(min_gap));
  }

  {
    // Dirac-to-Dirac curves on Z match the binomial closed form.
    double worst = 0.0;
    for (int n = 1; n <= 8; ++n) {
      Graph g = Graph::path(n + 1);
      GeodesicCurve c = solve_canonical(g, Measure::dirac(n + 1, 0), Measure::dirac(n + 1, n));
      for (int i = 0; i <= 20; ++i) {
        double t = i / 20.0;
        auto f = c.f_at(t);
        for (int k = 0; k <= n; ++k)
          worst = std::max(worst, std::fabs(f[k] - binomial_pmf(n, t, k)));
      }
    }
    report("binomial closed form", worst <= 1e-12, "max |diff| " + std::to_string(worst));

    Graph g = Graph::path(3);
    GeodesicCurve c = solve_canonical(g, Measure::dirac(3, 0), Measure::dirac(3, 2));
    double w2 = w_squared(c.triple_at(0.37));
    report("w-squared of the n=2 bridge", std::fabs(w2 - 2.0) <= 1e-12,
           "value " + std::to_string(w2));
  }

  {
    // Negative control: corrupt h on a canonical chain triple and expect the
    // BB equation check to flag it.
    Graph g = Graph::path(4);
    GeodesicCurve c = solve_canonical(g, Measure::dirac(4, 0), Measure::dirac(4, 3));
    BBTriple t = c.triple_at(0.5);
    t.h[0] *= 2.0;
    BBValidation val = validate(t);
    report("fault injection", !val.ok(), val.ok() ? "corrupted triple went unnoticed"
                                                  : "BB equation violated (expected)");
  }

  log << (failures == 0 ? "selftest: all suites passed\n"
                        : "selftest: " + std::to_string(failures) + " suite(s) failed\n");
  return failures == 0 ? 0 : 1;
}

} // namespace w1plus
