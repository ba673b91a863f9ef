#pragma once

#include <cmath>

namespace w1plus {

inline double binomial_coefficient(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0.0;
  if (k > n - k) k = n - k;
  double r = 1.0;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

// C(n,k) t^k (1-t)^(n-k); zero outside 0 <= k <= n.
inline double binomial_pmf(int n, double t, int k) {
  if (k < 0 || n < 0 || k > n) return 0.0;
  return binomial_coefficient(n, k) * std::pow(t, k) * std::pow(1.0 - t, n - k);
}

} // namespace w1plus
