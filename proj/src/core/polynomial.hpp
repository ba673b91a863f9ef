#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

namespace w1plus {

// Dense univariate polynomial with double coefficients, low degree first.
// Degrees stay bounded by the longest oriented path, so dense storage is fine.
class Poly {
public:
  Poly() = default;
  explicit Poly(std::vector<double> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly constant(double v) { return Poly(std::vector<double>{v}); }

  const std::vector<double>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool zero() const { return c_.empty(); }

  double operator()(double t) const {
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0.0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }

  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0.0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.c_.empty() || b.c_.empty()) return Poly();
    std::vector<double> out(a.c_.size() + b.c_.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(out));
  }

  Poly& scale(double s) {
    for (double& v : c_) v *= s;
    trim();
    return *this;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<double> out(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * static_cast<double>(i);
    return Poly(std::move(out));
  }

  // Antiderivative with zero constant term.
  Poly antiderivative() const {
    if (c_.empty()) return Poly();
    std::vector<double> out(c_.size() + 1, 0.0);
    for (std::size_t i = 0; i < c_.size(); ++i) out[i + 1] = c_[i] / static_cast<double>(i + 1);
    return Poly(std::move(out));
  }

  double max_abs_coeff() const {
    double m = 0.0;
    for (double v : c_) m = std::max(m, std::fabs(v));
    return m;
  }

  // p(1 - t) as a polynomial in t.
  Poly substituted_one_minus_t() const {
    Poly acc, power = Poly::constant(1.0);
    Poly one_minus_t(std::vector<double>{1.0, -1.0});
    for (std::size_t j = 0; j < c_.size(); ++j) {
      Poly term = power;
      term.scale(c_[j]);
      acc += term;
      power = power * one_minus_t;
    }
    return acc;
  }

private:
  void trim() {
    while (!c_.empty() && c_.back() == 0.0) c_.pop_back();
  }
  std::vector<double> c_;
};

} // namespace w1plus
