#include "measure.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace w1plus {

namespace {

void normalize_checked(std::vector<double>& mass) {
  double total = 0.0;
  bool any = false;
  for (double m : mass) {
    if (m < 0.0) fail(ErrorCode::invalid_argument, "negative mass");
    if (m > 0.0) any = true;
    total += m;
  }
  if (!any) fail(ErrorCode::invalid_argument, "measure has empty support");
  if (std::fabs(total - 1.0) > 1e-6)
    fail(ErrorCode::invalid_argument, "masses sum to " + std::to_string(total) + ", not 1");
  for (double& m : mass) m /= total;
}

} // namespace

Measure::Measure(std::vector<double> mass) : mass_(std::move(mass)) {
  normalize_checked(mass_);
}

Measure Measure::dirac(int n_vertices, int v) {
  std::vector<double> m(n_vertices, 0.0);
  if (v < 0 || v >= n_vertices) fail(ErrorCode::invalid_argument, "dirac vertex out of range");
  m[v] = 1.0;
  return Measure(std::move(m));
}

Measure Measure::from_atoms(int n_vertices, const std::vector<std::pair<int, double>>& atoms) {
  std::vector<double> m(n_vertices, 0.0);
  for (auto [v, w] : atoms) {
    if (v < 0 || v >= n_vertices) fail(ErrorCode::invalid_argument, "atom vertex out of range");
    m[v] += w;
  }
  return Measure(std::move(m));
}

Measure Measure::from_text(const Graph& g, const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::pair<int, double>> atoms;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    long long lbl;
    double mass;
    if (!(ls >> lbl)) continue;
    if (!(ls >> mass)) fail(ErrorCode::parse_error, "measure line " + std::to_string(lineno) + ": expected 'vertex mass'");
    int v = g.vertex_of_label(lbl);
    if (v < 0) fail(ErrorCode::parse_error, "measure line " + std::to_string(lineno) + ": unknown vertex");
    atoms.emplace_back(v, mass);
  }
  if (atoms.empty()) fail(ErrorCode::parse_error, "measure file has no atoms");
  return from_atoms(g.vertex_count(), atoms);
}

Measure Measure::from_file(const Graph& g, const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::parse_error, "cannot open measure file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return from_text(g, ss.str());
}

std::vector<int> Measure::support(double eps) const {
  std::vector<int> s;
  for (int v = 0; v < size(); ++v)
    if (mass_[v] > eps) s.push_back(v);
  return s;
}

double Measure::total() const {
  double t = 0.0;
  for (double m : mass_) t += m;
  return t;
}

} // namespace w1plus
