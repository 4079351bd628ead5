#include "histop/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace histop {

namespace {

// Legendre polynomial P_m and its derivative at x via the three-term
// recurrence (n+1) P_{n+1} = (2n+1) x P_n - n P_{n-1}.
void legendre_pd(int m, double x, double* p, double* dp) {
  double p0 = 1.0, p1 = x;
  for (int n = 1; n < m; ++n) {
    const double p2 = ((2.0 * n + 1.0) * x * p1 - n * p0) / (n + 1.0);
    p0 = p1;
    p1 = p2;
  }
  *p = p1;
  *dp = m * (x * p1 - p0) / (x * x - 1.0);
}

Rule1D compute_gauss_legendre(int m) {
  Rule1D rule;
  rule.nodes.resize(m);
  rule.weights.resize(m);
  const double pi = std::acos(-1.0);
  // Only the lower half is iterated; the other half follows by symmetry,
  // which also makes the node set exactly symmetric in floating point.
  for (int i = 0; i < (m + 1) / 2; ++i) {
    double x = std::cos(pi * (i + 0.75) / (m + 0.5));
    double p = 0.0, dp = 1.0;
    for (int it = 0; it < 100; ++it) {
      legendre_pd(m, x, &p, &dp);
      const double dx = p / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-15) break;
    }
    legendre_pd(m, x, &p, &dp);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[m - 1 - i] = x;
    rule.weights[m - 1 - i] = w;
    rule.nodes[i] = -x;
    rule.weights[i] = w;
  }
  if (m % 2 == 1) rule.nodes[m / 2] = 0.0;
  return rule;
}

const Rule1D& cached_gauss_legendre(int m) {
  static std::mutex mtx;
  static std::map<int, Rule1D> cache;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(m);
  if (it == cache.end()) {
    it = cache.emplace(m, compute_gauss_legendre(m)).first;
  }
  return it->second;
}

}  // namespace

Rule1D gauss_legendre(int m) {
  if (m < 1) throw std::invalid_argument("gauss_legendre: order must be >= 1");
  return cached_gauss_legendre(m);
}

Rule1D composite_gauss_legendre(int m, int panels) {
  if (m < 1) throw std::invalid_argument("composite_gauss_legendre: order must be >= 1");
  if (panels < 1) throw std::invalid_argument("composite_gauss_legendre: panels must be >= 1");
  const Rule1D& base = cached_gauss_legendre(m);
  Rule1D rule;
  rule.nodes.reserve(static_cast<size_t>(m) * panels);
  rule.weights.reserve(static_cast<size_t>(m) * panels);
  const double h = 2.0 / panels;
  for (int k = 0; k < panels; ++k) {
    const double lo = -1.0 + k * h;
    const double mid = lo + 0.5 * h;
    for (int i = 0; i < m; ++i) {
      rule.nodes.push_back(mid + 0.5 * h * base.nodes[i]);
      rule.weights.push_back(0.5 * h * base.weights[i]);
    }
  }
  return rule;
}

const Rule1D& default_edge_rule() {
  static const Rule1D rule = compute_gauss_legendre(50);
  return rule;
}

const Rule1D& reference_edge_rule() {
  static const Rule1D rule = composite_gauss_legendre(50, 8);
  return rule;
}

TriRule duffy_rule(int m) {
  if (m < 1) throw std::invalid_argument("duffy_rule: order must be >= 1");
  const Rule1D& gl = cached_gauss_legendre(m);
  TriRule rule;
  rule.nodes.reserve(static_cast<size_t>(m) * m);
  rule.weights.reserve(static_cast<size_t>(m) * m);
  rule.degree = 2 * m - 2;
  // Map the square (u, v) in [0,1]^2 onto the reference triangle by
  // lambda = ((1-u)(1-v), u, v(1-u)); the Jacobian factor (1-u) folds into
  // the weights, which then sum to 1.
  for (int i = 0; i < m; ++i) {
    const double u = 0.5 * (gl.nodes[i] + 1.0);
    const double wu = 0.5 * gl.weights[i];
    for (int j = 0; j < m; ++j) {
      const double v = 0.5 * (gl.nodes[j] + 1.0);
      const double wv = 0.5 * gl.weights[j];
      rule.nodes.push_back({(1.0 - u) * (1.0 - v), u, v * (1.0 - u)});
      rule.weights.push_back(2.0 * wu * wv * (1.0 - u));
    }
  }
  return rule;
}

const TriRule& default_tri_rule() {
  static const TriRule rule = duffy_rule(20);
  return rule;
}

}  // namespace histop
