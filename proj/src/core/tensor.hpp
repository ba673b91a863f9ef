#pragma once

#include <array>
#include <memory>

#include "bb.hpp"
#include "geodesic.hpp"

namespace w1plus {

// Two-block view of an orientation on a product graph: factors [0, split)
// form block 1, the rest block 2. Every oriented edge moves exactly one
// factor coordinate and is classified by its block.
struct ProductOrientation {
  std::shared_ptr<const Orientation> orientation;
  int split = 1;
  std::vector<int> edge_factor; // differing factor index, per oriented edge
  std::vector<int> edge_class;  // 1 or 2, per oriented edge
};

ProductOrientation product_orientation(std::shared_ptr<const Orientation> o, int split = -1);

// The product of the factor sizes in [from, to), extracted as a graph.
Graph factor_block(const Graph& product, int from, int to);

// Marginal of a measure on the product onto one block.
Measure block_marginal(const Graph& product, const Measure& f, int split, bool first);

// Oriented product squares (x0, m1, m2, x2): m1 = class-1 step, m2 = class-2
// step, with closing edges m1 -> x2 and m2 -> x2. Throws when a closing edge
// is missing.
struct SquareReport {
  std::vector<std::array<int, 4>> squares;
  long t12 = 0;           // triples with class pattern (1,2)
  long t21 = 0;           // triples with class pattern (2,1)
  long sum_f1f2 = 0;      // sum over vertices of |F1(x)| |F2(x)|
  bool bijections_ok = false;
};

SquareReport enumerate_squares(const ProductOrientation& po);

// (del1.g, del2.g); their sum is the full divergence.
std::pair<VertexFunc, VertexFunc> split_divergence(const ProductOrientation& po,
                                                   const EdgeFunc& g);

// Direct W1-orientation of the product versus the one composed from the
// marginal orientations of the factors (factor edges crossed with the other
// factor's active vertices).
struct DecompositionReport {
  bool equal = false;
  std::vector<std::pair<int, int>> only_direct;
  std::vector<std::pair<int, int>> only_composed;
};

DecompositionReport check_orientation_decomposition(const Graph& g1, const Graph& g2,
                                                    const Measure& f0, const Measure& f1);

// Restriction of a product BB-triple to one block with the complementary
// block coordinate fixed; a BB-triple on the block graph.
BBTriple project_triple(const BBTriple& tr, const ProductOrientation& po, int axis, int fixed);

// Restriction to a single factor line, all other coordinates fixed by the
// complement key (product vertex id with the factor coordinate zeroed).
BBTriple line_slice(const BBTriple& tr, int factor_index, int complement_key,
                    const Graph& factor_graph);

struct TensorizationRow {
  double t = 0.0;
  double Hpp = 0.0;
  double slice_sum_axis1 = 0.0;
  double slice_sum_axis2 = 0.0;
  double involutive_edge_bound = 0.0;
  double line_slice_sum = 0.0; // over all factors (iterated two-block split)
  bool satisfied = false;
};

struct TensorizationReport {
  std::vector<TensorizationRow> rows;
  bool all_satisfied = false;
  double max_split_violation = 0.0;      // slice1+slice2 over Hpp
  double max_line_violation = 0.0;       // line-slice sum over Hpp
  double max_involutive_violation = 0.0; // involutive bound over Hpp
};

// H''(t) = I(full triple) against the slice sums at each interior grid t.
// Requires a solver-produced (canonical) curve so that h is midpoint-free.
TensorizationReport tensorization_check(const GeodesicCurve& c, const std::vector<double>& grid,
                                        int split = -1);

} // namespace w1plus
