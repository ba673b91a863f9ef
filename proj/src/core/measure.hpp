#pragma once

#include <string>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace w1plus {

// Finitely supported probability mass function on the vertices of a graph,
// stored dense. Total mass 1 within 1e-12 after construction.
class Measure {
public:
  Measure() = default;
  explicit Measure(std::vector<double> mass);

  static Measure dirac(int n_vertices, int v);
  // Atoms (vertex, mass). Masses must be non-negative and sum to 1 within
  // 1e-6; they are renormalized exactly on load.
  static Measure from_atoms(int n_vertices, const std::vector<std::pair<int, double>>& atoms);
  // One atom per line: "vertex mass". '#' comments allowed. Vertices are
  // graph labels.
  static Measure from_file(const Graph& g, const std::string& path);
  static Measure from_text(const Graph& g, const std::string& text);

  int size() const { return static_cast<int>(mass_.size()); }
  double operator[](int v) const { return mass_[v]; }
  const std::vector<double>& values() const { return mass_; }
  std::vector<int> support(double eps = 0.0) const;
  double total() const;

  friend bool operator==(const Measure& a, const Measure& b) { return a.mass_ == b.mass_; }

private:
  std::vector<double> mass_;
};

} // namespace w1plus
