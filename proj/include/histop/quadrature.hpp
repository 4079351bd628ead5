#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "histop/geometry.hpp"

namespace histop {

// Quadrature rule on [-1, 1]: nodes in (-1, 1), positive weights summing to 2.
struct Rule1D {
  std::vector<double> nodes;
  std::vector<double> weights;
  int size() const { return static_cast<int>(nodes.size()); }
};

// m-node Gauss-Legendre rule, exact on polynomials of degree 2m - 1.
// Nodes are roots of the Legendre polynomial P_m found by Newton iteration
// on the three-term recurrence; rules are computed once per order and
// cached.  Throws std::invalid_argument for m < 1.
Rule1D gauss_legendre(int m);

// Composite rule: [-1, 1] split into `panels` equal panels, each carrying a
// scaled m-node Gauss-Legendre rule.  Used as a reference rule for density
// mass checks and moment validation, where a single panel cannot resolve
// sharply peaked integrands near the endpoints.
Rule1D composite_gauss_legendre(int m, int panels);

// 50-node Gauss-Legendre rule, the default for edge functionals.
const Rule1D& default_edge_rule();

// 8 panels x 50 nodes; reference rule for validation-grade integrals.
const Rule1D& reference_edge_rule();

// Integral of f over [-1, 1].  Throws std::runtime_error if f produces a
// non-finite value at a node.
template <class F>
double integrate_edge(F&& f, const Rule1D& rule) {
  double s = 0.0;
  for (int i = 0; i < rule.size(); ++i) {
    const double fi = f(rule.nodes[i]);
    if (!std::isfinite(fi)) {
      throw std::runtime_error("integrate_edge: non-finite integrand value at node t=" +
                               std::to_string(rule.nodes[i]));
    }
    s += rule.weights[i] * fi;
  }
  return s;
}

// Quadrature rule on the reference triangle in barycentric form; weights
// sum to 1 so that integrals scale by the physical triangle area.
struct TriRule {
  std::vector<std::array<double, 3>> nodes;
  std::vector<double> weights;
  int degree = 0;  // declared polynomial exactness
  int size() const { return static_cast<int>(nodes.size()); }
};

// Tensorized Gauss rule transplanted to the triangle through the collapsed
// square (Duffy) map; m x m points, exact on polynomials of degree 2m - 2.
TriRule duffy_rule(int m);

// 20 x 20 Duffy rule, the default for triangle integrals.
const TriRule& default_tri_rule();

// Integral of f over the triangle.  Throws std::runtime_error on
// non-finite integrand values.
template <class F>
double integrate_triangle(F&& f, const Triangle& tri, const TriRule& rule) {
  const Point2& a = tri.vertex(0);
  const Point2& b = tri.vertex(1);
  const Point2& c = tri.vertex(2);
  double s = 0.0;
  for (int i = 0; i < rule.size(); ++i) {
    const auto& l = rule.nodes[i];
    const Point2 p{l[0] * a.x + l[1] * b.x + l[2] * c.x,
                   l[0] * a.y + l[1] * b.y + l[2] * c.y};
    const double fi = f(p);
    if (!std::isfinite(fi)) {
      throw std::runtime_error("integrate_triangle: non-finite integrand value");
    }
    s += rule.weights[i] * fi;
  }
  return tri.area() * s;
}

}  // namespace histop
