#include "binomial_w2.hpp"

#include <cmath>
#include <limits>

#include "binom.hpp"
#include "entropy.hpp"

namespace w1plus {

bool stochastic_domination(const Measure& f0, const Measure& f1) {
  if (f0.size() != f1.size()) fail(ErrorCode::invalid_argument, "measure sizes differ");
  double F0 = 0.0, F1 = 0.0;
  for (int k = 0; k < f0.size(); ++k) {
    F0 += f0[k];
    F1 += f1[k];
    if (F0 < F1 - 1e-12) return false;
  }
  return true;
}

namespace {

Coupling monotone_coupling_checked(const Measure& f0, const Measure& f1) {
  if (!stochastic_domination(f0, f1))
    fail(ErrorCode::invalid_argument, "f0 does not stochastically dominate f1");
  Coupling pi = w2_monotone_coupling(f0, f1);
  for (auto& [i, j, m] : pi.entries)
    if (i > j) fail(ErrorCode::numerical_failure, "monotone coupling crossed under domination");
  return pi;
}

} // namespace

BinomialW2Eval eval_binomial_w2(const Measure& f0, const Measure& f1, double t) {
  Coupling pi = monotone_coupling_checked(f0, f1);
  int n = f0.size();
  BinomialW2Eval out;
  out.f.assign(n, 0.0);
  out.g.assign(std::max(n - 1, 0), 0.0);
  out.h.assign(std::max(n - 2, 0), 0.0);
  for (auto& [i, j, m] : pi.entries) {
    int d = j - i;
    for (int k = i; k <= j && k < n; ++k) out.f[k] += m * binomial_pmf(d, t, k - i);
    if (d >= 1)
      for (int k = i; k < j && k < n - 1; ++k) out.g[k] += m * d * binomial_pmf(d - 1, t, k - i);
    if (d >= 2)
      for (int k = i; k + 1 < j && k < n - 2; ++k)
        out.h[k] += m * d * (d - 1) * binomial_pmf(d - 2, t, k - i);
  }
  return out;
}

std::vector<double> binomial_w2_g_alt(const Measure& f0, const Measure& f1, double t) {
  if (t >= 1.0) fail(ErrorCode::invalid_argument, "alternative form needs t < 1");
  Coupling pi = monotone_coupling_checked(f0, f1);
  int n = f0.size();
  std::vector<double> g(std::max(n - 1, 0), 0.0);
  for (auto& [i, j, m] : pi.entries)
    for (int k = i; k <= j && k < n - 1; ++k)
      g[k] += m * binomial_pmf(j - i, t, k - i) * (j - k) / (1.0 - t);
  return g;
}

std::vector<double> h_tilde(const std::vector<double>& f, const std::vector<double>& g) {
  std::vector<double> ht(g.size() >= 1 ? g.size() - 1 : 0, 0.0);
  for (std::size_t k = 0; k < ht.size(); ++k) {
    double num = g[k] * g[k + 1];
    if (f[k + 1] > 0.0) {
      ht[k] = num / f[k + 1];
    } else if (num != 0.0) {
      fail(ErrorCode::invalid_argument, "h~ undefined: zero mass between positive fluxes");
    }
  }
  return ht;
}

CompareHReport compare_h(const Measure& f0, const Measure& f1, double t) {
  CompareHReport rep;
  BinomialW2Eval ev = eval_binomial_w2(f0, f1, t);
  std::vector<double> ht = h_tilde(ev.f, ev.g);
  // cells with f(k+1) = 0 have h~ only as a limit; they carry no comparison
  for (std::size_t k = 0; k < ev.h.size() && k < ht.size(); ++k)
    if (ev.f[k + 1] > 0.0)
      rep.max_h_minus_htilde = std::max(rep.max_h_minus_htilde, ev.h[k] - ht[k]);
  rep.certificate = comonotonicity_certificate(w2_monotone_coupling(f0, f1));
  rep.h_dominated = rep.max_h_minus_htilde <= 1e-10;
  return rep;
}

bool log_concavity(const std::vector<double>& f) {
  int lo = -1, hi = -1;
  for (int k = 0; k < static_cast<int>(f.size()); ++k)
    if (f[k] > 0.0) {
      if (lo < 0) lo = k;
      hi = k;
    }
  if (lo < 0) return false;
  for (int k = lo; k < hi; ++k)
    if (f[k] <= 0.0) return false; // support must be an interval
  for (int k = lo; k + 2 <= hi; ++k) {
    double lhs = f[k + 1] * f[k + 1];
    double rhs = f[k] * f[k + 2];
    if (lhs < rhs - 1e-12 - 1e-9 * rhs) return false;
  }
  return true;
}

bool log_concavity(const Measure& f) { return log_concavity(f.values()); }

BinW2Report entropy_convexity_report(const Measure& f0, const Measure& f1,
                                     const std::vector<double>& grid) {
  BinW2Report rep;
  rep.domination = stochastic_domination(f0, f1);
  if (!rep.domination) return rep;

  const double fd = 1e-3;
  auto H_at = [&](double t) { return shannon_entropy(eval_binomial_w2(f0, f1, t).f); };

  bool all_lc = true;
  for (double t : grid) {
    BinomialW2Eval ev = eval_binomial_w2(f0, f1, t);
    BinW2Row row;
    row.t = t;
    row.H = shannon_entropy(ev.f);
    if (t >= 2 * fd && t <= 1.0 - 2 * fd)
      row.Hpp_fd = (H_at(t + fd) - 2.0 * row.H + H_at(t - fd)) / (fd * fd);
    else
      row.Hpp_fd = std::numeric_limits<double>::quiet_NaN();
    row.log_concave = log_concavity(ev.f);
    all_lc = all_lc && row.log_concave;
    std::vector<double> ht = h_tilde(ev.f, ev.g);
    double viol = 0.0;
    for (std::size_t k = 0; k < ev.h.size() && k < ht.size(); ++k)
      if (ev.f[k + 1] > 0.0) viol = std::max(viol, ev.h[k] - ht[k]);
    rep.max_h_violation = std::max(rep.max_h_violation, viol);
    row.h_le_htilde = viol <= 1e-10;
    rep.rows.push_back(row);
  }
  rep.theorem_applies = rep.domination && all_lc;

  const int pts = 101;
  rep.min_second_diff = std::numeric_limits<double>::infinity();
  std::vector<double> vals(pts);
  for (int i = 0; i < pts; ++i) vals[i] = H_at(i / double(pts - 1));
  for (int i = 1; i + 1 < pts; ++i)
    rep.min_second_diff = std::min(rep.min_second_diff, vals[i + 1] - 2 * vals[i] + vals[i - 1]);
  rep.convex_observed = rep.min_second_diff >= -1e-6;
  return rep;
}

} // namespace w1plus
