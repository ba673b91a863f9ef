#pragma once

#include <memory>
#include <random>

#include "orientation.hpp"

namespace w1plus {

// Functions (f, g, h) on vertices / oriented edges / oriented triples tied by
// the Benamou-Brenier equation f(x1) h(x0x1x2) = g(x0x1) g(x1x2).
struct BBTriple {
  std::shared_ptr<const Orientation> orient;
  VertexFunc f; // dense over graph vertices, zero off the active set
  EdgeFunc g;   // parallel to orient->edges()
  TripleFunc h; // parallel to orient->triples()
};

struct BBValidation {
  double max_bb_rel_violation = 0.0;
  double normalization_defect = 0.0; // |sum f - 1| over active vertices
  int nonpositive_f = 0;             // on active vertices
  int nonpositive_g = 0;
  int negative_h = 0;
  bool ok(double tol = 1e-9) const {
    return max_bb_rel_violation <= tol && nonpositive_f == 0 && nonpositive_g == 0 &&
           negative_h == 0;
  }
};

BBValidation validate(const BBTriple& t);

// I(f,g,h) = sum_x del2.h(x) log f(x) + (del.g(x))^2 / f(x), with 0 log 0 = 0.
// Along a W1+-geodesic this equals H''(t).
double functional_I(const BBTriple& t);

// Same value through the integrated-by-parts form:
// sum over triples of h [log(f(x0)h/g(x0x1)^2) + log(f(x2)h/g(x1x2)^2)]
// plus sum (del.g)^2/f.
double functional_I_ibp(const BBTriple& t);

// sum over oriented edges of g^2/f(x0) (1-|F(x1)|) + g^2/f(x1) (1-|E(x0)|).
double lower_bound_general(const BBTriple& t);

struct IBoundReport {
  double I = 0.0;
  double bound = 0.0;
  bool satisfied = false;
};

IBoundReport check_I_bound(const BBTriple& t);

// Random positive f and g on a given orientation, h closed via the BB
// equation h := g g / f. Used by the property suites.
BBTriple random_bb_triple(std::shared_ptr<const Orientation> o, std::mt19937_64& rng);

} // namespace w1plus
