#include "transport.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

namespace w1plus {

double Coupling::mass_at(int a, int b) const {
  for (auto& [x, y, m] : entries)
    if (x == a && y == b) return m;
  return 0.0;
}

double Coupling::cost(const Graph& g) const {
  double acc = 0.0;
  for (auto& [x, y, m] : entries) acc += g.dist(x, y) * m;
  return acc;
}

OptimalTransport::OptimalTransport(const Graph& g, const Measure& f0, const Measure& f1) {
  if (f0.size() != g.vertex_count() || f1.size() != g.vertex_count())
    fail(ErrorCode::invalid_argument, "measure size does not match graph");
  rows_ = f0.support();
  cols_ = f1.support();
  m_ = static_cast<int>(rows_.size());
  k_ = static_cast<int>(cols_.size());
  row_of_.assign(g.vertex_count(), -1);
  col_of_.assign(g.vertex_count(), -1);
  for (int i = 0; i < m_; ++i) row_of_[rows_[i]] = i;
  for (int j = 0; j < k_; ++j) col_of_[cols_[j]] = j;
  supply_.resize(m_);
  demand_.resize(k_);
  for (int i = 0; i < m_; ++i) supply_[i] = f0[rows_[i]];
  for (int j = 0; j < k_; ++j) demand_[j] = f1[cols_[j]];
  c_.resize(static_cast<std::size_t>(m_) * k_);
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < k_; ++j) c_[i * k_ + j] = g.dist(rows_[i], cols_[j]);

  // Northwest-corner initial basis: m+k-1 cells forming a spanning tree.
  flow_.assign(c_.size(), 0.0);
  basic_.assign(c_.size(), 0);
  std::vector<double> ra = supply_, rb = demand_;
  int i = 0, j = 0;
  while (true) {
    basic_[i * k_ + j] = 1;
    double f = std::min(ra[i], rb[j]);
    flow_[i * k_ + j] = std::max(f, 0.0);
    if (i == m_ - 1 && j == k_ - 1) break;
    if (ra[i] <= rb[j]) {
      rb[j] -= ra[i];
      ra[i] = 0.0;
      if (i < m_ - 1) ++i; else ++j;
    } else {
      ra[i] -= rb[j];
      rb[j] = 0.0;
      if (j < k_ - 1) ++j; else ++i;
    }
  }

  run_simplex(c_, nullptr);

  cost_ = 0.0;
  for (std::size_t cell = 0; cell < c_.size(); ++cell)
    if (basic_[cell]) cost_ += c_[cell] * flow_[cell];

  optimal_face_.assign(c_.size(), 0);
  for (int a = 0; a < m_; ++a)
    for (int b = 0; b < k_; ++b)
      optimal_face_[a * k_ + b] = (c_[a * k_ + b] - u_[a] - v_[b] == 0);

  coupling_.left_marginal = f0;
  coupling_.right_marginal = f1;
  for (int a = 0; a < m_; ++a)
    for (int b = 0; b < k_; ++b)
      if (basic_[a * k_ + b] && flow_[a * k_ + b] > 1e-12)
        coupling_.entries.emplace_back(rows_[a], cols_[b], flow_[a * k_ + b]);
}

void OptimalTransport::compute_duals(const std::vector<int>& cost) {
  u_.assign(m_, 0);
  v_.assign(k_, 0);
  std::vector<char> seen(m_ + k_, 0); // nodes: rows then cols
  std::deque<int> queue{0};
  seen[0] = 1;
  while (!queue.empty()) {
    int node = queue.front();
    queue.pop_front();
    if (node < m_) {
      for (int b = 0; b < k_; ++b)
        if (basic_[node * k_ + b] && !seen[m_ + b]) {
          v_[b] = cost[node * k_ + b] - u_[node];
          seen[m_ + b] = 1;
          queue.push_back(m_ + b);
        }
    } else {
      int b = node - m_;
      for (int a = 0; a < m_; ++a)
        if (basic_[a * k_ + b] && !seen[a]) {
          u_[a] = cost[a * k_ + b] - v_[b];
          seen[a] = 1;
          queue.push_back(a);
        }
    }
  }
  for (char s : seen)
    if (!s) fail(ErrorCode::numerical_failure, "transport basis is not a spanning tree");
}

bool OptimalTransport::pivot_once(const std::vector<int>& cost, const std::vector<char>* allowed) {
  // Bland's rule: first cell (row-major) with negative reduced cost enters.
  int enter = -1;
  for (int a = 0; a < m_ && enter < 0; ++a)
    for (int b = 0; b < k_; ++b) {
      int cell = a * k_ + b;
      if (basic_[cell]) continue;
      if (allowed && !(*allowed)[cell]) continue;
      if (cost[cell] - u_[a] - v_[b] < 0) { enter = cell; break; }
    }
  if (enter < 0) return false;

  // Unique tree path from the entering cell's column node to its row node.
  int ei = enter / k_, ej = enter % k_;
  int nodes = m_ + k_;
  std::vector<int> parent(nodes, -1), parent_cell(nodes, -1);
  std::deque<int> queue{ei};
  parent[ei] = ei;
  while (!queue.empty()) {
    int node = queue.front();
    queue.pop_front();
    if (node == m_ + ej) break;
    if (node < m_) {
      for (int b = 0; b < k_; ++b)
        if (basic_[node * k_ + b] && parent[m_ + b] < 0) {
          parent[m_ + b] = node;
          parent_cell[m_ + b] = node * k_ + b;
          queue.push_back(m_ + b);
        }
    } else {
      int b = node - m_;
      for (int a = 0; a < m_; ++a)
        if (basic_[a * k_ + b] && parent[a] < 0) {
          parent[a] = node;
          parent_cell[a] = a * k_ + b;
          queue.push_back(a);
        }
    }
  }
  if (parent[m_ + ej] < 0) fail(ErrorCode::numerical_failure, "transport basis lost connectivity");

  // Entering cell is '+'; signs alternate along the cycle.
  std::vector<int> plus{enter}, minus;
  bool next_minus = true;
  for (int node = m_ + ej; node != ei; node = parent[node]) {
    (next_minus ? minus : plus).push_back(parent_cell[node]);
    next_minus = !next_minus;
  }

  double theta = std::numeric_limits<double>::infinity();
  int leave = -1;
  for (int cell : minus)
    if (flow_[cell] < theta || (flow_[cell] == theta && cell < leave)) {
      theta = flow_[cell];
      leave = cell;
    }
  if (leave < 0) fail(ErrorCode::numerical_failure, "transport pivot found no leaving cell");
  for (int cell : plus) flow_[cell] += theta;
  for (int cell : minus) flow_[cell] -= theta;
  flow_[leave] = 0.0;
  basic_[leave] = 0;
  basic_[enter] = 1;
  return true;
}

void OptimalTransport::run_simplex(const std::vector<int>& cost, const std::vector<char>* allowed) {
  compute_duals(cost);
  long guard = 0;
  long iter_cap = 1000 + 100L * m_ * k_;
  while (pivot_once(cost, allowed)) {
    compute_duals(cost);
    if (++guard > iter_cap) fail(ErrorCode::numerical_failure, "transport simplex did not terminate");
  }
}

bool OptimalTransport::pair_in_optimal_support(int a, int b) {
  int ra = (a >= 0 && a < static_cast<int>(row_of_.size())) ? row_of_[a] : -1;
  int cb = (b >= 0 && b < static_cast<int>(col_of_.size())) ? col_of_[b] : -1;
  if (ra < 0 || cb < 0)
    fail(ErrorCode::invalid_argument, "support test endpoints must carry mass");
  int target = ra * k_ + cb;
  if (!optimal_face_[target]) return false;
  // Maximize pi(a,b) over the optimal face: cost -1 on the target cell, 0 on
  // the other face cells, pivots confined to the face. The current basis is
  // feasible for this LP because basic cells always lie on the face.
  std::vector<int> cost2(c_.size(), 0);
  cost2[target] = -1;
  run_simplex(cost2, &optimal_face_);
  return flow_[target] > 1e-9;
}

double w1_cost(const Graph& g, const Measure& f0, const Measure& f1) {
  return OptimalTransport(g, f0, f1).cost();
}

Coupling optimal_coupling(const Graph& g, const Measure& f0, const Measure& f1) {
  return OptimalTransport(g, f0, f1).coupling();
}

bool in_some_optimal_support(const Graph& g, const Measure& f0, const Measure& f1, int a, int b) {
  OptimalTransport ot(g, f0, f1);
  return ot.pair_in_optimal_support(a, b);
}

Coupling w2_monotone_coupling(const Measure& f0, const Measure& f1) {
  if (f0.size() != f1.size()) fail(ErrorCode::invalid_argument, "measure sizes differ");
  Coupling out;
  out.left_marginal = f0;
  out.right_marginal = f1;
  std::vector<int> si = f0.support(), sj = f1.support();
  std::size_t i = 0, j = 0;
  double ri = f0[si[0]], rj = f1[sj[0]];
  while (i < si.size() && j < sj.size()) {
    double mass = std::min(ri, rj);
    if (mass > 0.0) out.entries.emplace_back(si[i], sj[j], mass);
    ri -= mass;
    rj -= mass;
    if (ri <= 0.0) {
      ++i;
      if (i < si.size()) ri = f0[si[i]];
    }
    if (rj <= 0.0) {
      ++j;
      if (j < sj.size()) rj = f1[sj[j]];
    }
  }
  return out;
}

long long comonotonicity_certificate(const Coupling& c) {
  long long best = std::numeric_limits<long long>::max();
  for (auto& [i1, j1, m1] : c.entries)
    for (auto& [i2, j2, m2] : c.entries) {
      long long v = static_cast<long long>(i2 - i1) * (j2 - j1);
      best = std::min(best, v);
    }
  return c.entries.empty() ? 0 : best;
}

double w1_cdf_formula(const Measure& f0, const Measure& f1) {
  if (f0.size() != f1.size()) fail(ErrorCode::invalid_argument, "measure sizes differ");
  double acc = 0.0, F0 = 0.0, F1 = 0.0;
  for (int kv = 0; kv + 1 < f0.size(); ++kv) {
    F0 += f0[kv];
    F1 += f1[kv];
    acc += std::fabs(F0 - F1);
  }
  return acc;
}

} // namespace w1plus
