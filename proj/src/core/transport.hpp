#pragma once

#include <tuple>
#include <vector>

#include "graph.hpp"
#include "measure.hpp"

namespace w1plus {

struct Coupling {
  // Strictly positive entries only, (left vertex, right vertex, mass).
  std::vector<std::tuple<int, int, double>> entries;
  Measure left_marginal;
  Measure right_marginal;

  double mass_at(int a, int b) const;
  double cost(const Graph& g) const; // sum d(x,y) pi(x,y)
};

// W1 transport between two measures on a graph, solved by a transportation
// network simplex. Costs are graph distances, so the simplex multipliers are
// integers and optimality tests are exact; flows are plain sums and
// differences of the input masses.
class OptimalTransport {
public:
  OptimalTransport(const Graph& g, const Measure& f0, const Measure& f1);

  double cost() const { return cost_; }
  Coupling coupling() const { return coupling_; }

  // True iff some W1-optimal coupling puts mass > 1e-9 on (a, b). Solved as a
  // second LP: maximize pi(a,b) over the optimal face, which is exactly the
  // set of plans supported on cells with zero reduced cost for the phase-1
  // optimal multipliers.
  bool pair_in_optimal_support(int a, int b);

private:
  void compute_duals(const std::vector<int>& cost);
  bool pivot_once(const std::vector<int>& cost, const std::vector<char>* allowed);
  void run_simplex(const std::vector<int>& cost, const std::vector<char>* allowed);

  int m_ = 0, k_ = 0;
  std::vector<int> rows_, cols_;      // graph vertices
  std::vector<int> row_of_, col_of_;  // vertex -> index, -1 outside support
  std::vector<double> supply_, demand_;
  std::vector<int> c_;                // m*k distances
  std::vector<double> flow_;          // m*k, meaningful on basic cells
  std::vector<char> basic_;           // m*k
  std::vector<long long> u_, v_;      // integer duals
  std::vector<char> optimal_face_;    // zero reduced cost for phase-1 duals
  double cost_ = 0.0;
  Coupling coupling_;
};

double w1_cost(const Graph& g, const Measure& f0, const Measure& f1);
Coupling optimal_coupling(const Graph& g, const Measure& f0, const Measure& f1);
bool in_some_optimal_support(const Graph& g, const Measure& f0, const Measure& f1, int a, int b);

// Quantile (monotone) coupling of two measures on a Z-segment, the unique
// minimizer of sum (i-j)^2 pi(i,j); vertex index plays the role of the
// integer coordinate.
Coupling w2_monotone_coupling(const Measure& f0, const Measure& f1);

// Smallest value of (i2-i1)(j2-j1) over pairs of support points; >= 0 iff the
// support is co-monotone.
long long comonotonicity_certificate(const Coupling& c);

// sum_k |F0(k) - F1(k)| over a Z-segment; equals W1 on path graphs.
double w1_cdf_formula(const Measure& f0, const Measure& f1);

} // namespace w1plus
