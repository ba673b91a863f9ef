#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace w1plus {

// One coordinate block of a product graph. A two-vertex factor is the
// Cayley graph of Z_2, whose generator is an involution.
struct Factor {
  int size = 0;
  bool involutive = false;
};

struct Curve {
  std::vector<int> points;
  int length() const { return static_cast<int>(points.size()) - 1; }
};

// Finite connected simple graph with dense vertex ids 0..n-1 and a
// precomputed all-pairs distance table. Immutable after construction;
// copies share the underlying data.
class Graph {
public:
  static constexpr int max_vertices = 4096;
  static constexpr long max_geodesics = 1000000;

  static Graph path(int n);
  static Graph cycle(int n); // n >= 3
  static Graph complete(int n);
  static Graph hypercube(int d);
  static Graph product(const Graph& a, const Graph& b);
  // One edge per line "u v"; '#' starts a comment; vertex set is the set of
  // integers mentioned (arbitrary labels are remapped to dense ids).
  static Graph from_edge_list_file(const std::string& path);
  static Graph from_edge_list_text(const std::string& text);
  // The sub-product spanned by factors [from, to) of a product graph.
  static Graph factor_block(const Graph& product, int from, int to);

  int vertex_count() const { return d_->n; }
  int edge_count() const { return static_cast<int>(d_->edges.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return d_->edges; }
  const std::vector<int>& neighbors(int v) const;
  bool adjacent(int u, int v) const { return d_->n > 0 && dist(u, v) == 1; }
  int dist(int u, int v) const;

  // External label of a vertex (identity for builtins and products).
  std::int64_t label(int v) const;
  int vertex_of_label(std::int64_t lbl) const; // -1 if unknown

  // Product structure. Non-product graphs expose themselves as one factor.
  const std::vector<Factor>& factors() const { return d_->factors; }
  // Number of leading factors contributed by the left operand of the
  // outermost product() call; 0 for non-products.
  int top_split() const { return d_->top_split; }
  std::vector<int> coords(int v) const;
  int vertex_at(const std::vector<int>& coords) const;

  bool is_geodesic(const Curve& c) const;
  // All geodesics from x to y (distance-filtered DFS). Throws past the
  // enumeration cap.
  std::vector<Curve> geodesics(int x, int y) const;
  long geodesic_count(int x, int y) const;

private:
  struct Data {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> adj;
    std::vector<std::int32_t> dist; // dense n*n
    std::vector<Factor> factors;
    int top_split = 0;
    std::vector<std::int64_t> labels; // empty = identity
  };

  static Graph build(int n, std::vector<std::pair<int, int>> edges,
                     std::vector<Factor> factors, int top_split,
                     std::vector<std::int64_t> labels);

  std::shared_ptr<const Data> d_;
};

} // namespace w1plus
