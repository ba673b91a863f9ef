#pragma once

#include <array>
#include <vector>

#include "bb.hpp"
#include "geodesic.hpp"

namespace w1plus {

// sum f log f with 0 log 0 = 0.
double shannon_entropy(const std::vector<double>& f);
// -sum f^p for 0 < p < 1.
double renyi_entropy(const std::vector<double>& f, double p);
// sum f log(f/nu); nu must be positive on the support of f.
double relative_entropy(const std::vector<double>& f, const std::vector<double>& nu);

// Entropy and its second derivative along a curve. Hpp_analytic is the
// functional I at t; Hpp_fd a central difference of H with step fd_step.
// Values are NaN where undefined (endpoints, fd stencil out of range).
struct EntropyCurveReport {
  std::vector<double> grid;
  std::vector<double> H;
  std::vector<double> Hpp_analytic;
  std::vector<double> Hpp_fd;
  std::vector<double> lower_bound; // two-sided edge lower bound at t
  std::vector<double> w2;          // sum of h over oriented triples at t
  std::vector<double> renyi_orders;
  std::vector<std::vector<double>> renyi; // [order][grid point]
  double min_Hpp = 0.0;                   // over defined grid points
  bool convex = false;                    // refined-grid min of Hpp_analytic >= -1e-8
  std::vector<double> renyi_min_second_diff; // undivided, uniform internal grid
};

EntropyCurveReport entropy_along_curve(const GeodesicCurve& c, const std::vector<double>& grid,
                                       const std::vector<double>& renyi_orders = {},
                                       double fd_step = 1e-3);

// W^2 = sum over oriented triples of h; t-independent along a W1+-geodesic.
double w_squared(const BBTriple& t);
// v+ and v- on vertices: outgoing and incoming g mass over f.
std::pair<VertexFunc, VertexFunc> velocity_fields(const BBTriple& t);

// Reference potential V with discrete convexity constant K along oriented
// 2-paths: V(x0) - 2 V(x1) + V(x2) >= K.
struct Potential {
  std::vector<double> V;
  double K = 0.0;
};

// Oriented triples violating the K-convexity of V (empty means valid).
std::vector<std::array<int, 3>> potential_violations(const Orientation& o, const Potential& pot);

struct RelativeEntropyReport {
  std::vector<double> grid;
  std::vector<double> Hpp;
  std::vector<double> Hnupp;
  std::vector<double> w2;
  double K = 0.0;
  double max_violation = 0.0; // of Hnupp >= Hpp + K W^2
  bool satisfied = false;
};

RelativeEntropyReport relative_entropy_bound(const GeodesicCurve& c, const Potential& pot,
                                             const std::vector<double>& grid);

// psi(x) = (1-p)(x-1)^2 - (x^p-1)/(2-p) - x^(2-p)/(2-p) - (1-p)x^2/(2-p) + 2x - 1,
// non-negative for x >= 0, 0 < p < 1.
double psi(double x, double p);
// Right minus left side of h f^(p-1) <= h^(2-p) g^(2p-2)/(2-p) + (1-p) g^2 f^(p-2)/(2-p).
double holder_gap(double f, double g, double h, double p);

} // namespace w1plus
