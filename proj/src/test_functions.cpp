#include "histop/test_functions.hpp"

#include <cmath>
#include <stdexcept>

namespace histop {

namespace {

const double kPi = std::acos(-1.0);

double franke_blend(double x, double y, bool classic) {
  // Four-hump blend on the unit square scaled to [-1, 1]^2.
  const double X = 9.0 * (x + 1.0) / 2.0;
  const double Y = 9.0 * (y + 1.0) / 2.0;
  const double t1 = 0.75 * std::exp(-(X - 2.0) * (X - 2.0) / 4.0 - (Y - 2.0) * (Y - 2.0) / 4.0);
  const double yterm = classic ? (Y + 1.0) * (Y + 1.0) / 10.0 : (Y + 1.0) / 10.0;
  const double t2 = 0.75 * std::exp(-(X + 1.0) * (X + 1.0) / 49.0 - yterm);
  const double t3 = 0.5 * std::exp(-(X - 7.0) * (X - 7.0) / 4.0 - (Y - 3.0) * (Y - 3.0) / 4.0);
  const double t4 = 0.2 * std::exp(-(X - 4.0) * (X - 4.0) - (Y - 7.0) * (Y - 7.0));
  return t1 + t2 + t3 - t4;
}

}  // namespace

std::vector<TestFunction> benchmark_functions(bool franke_classic) {
  std::vector<TestFunction> fns;
  fns.push_back({"f1", [](const Point2& p) { return std::sqrt(p.x * p.x + p.y * p.y); }});
  fns.push_back({"f2", [](const Point2& p) {
                   return std::exp(-4.0 * (p.x * p.x + p.y * p.y)) *
                          std::sin(kPi * (p.x + p.y));
                 }});
  fns.push_back({"f3", [](const Point2& p) {
                   return std::sin(2.0 * kPi * p.x) * std::sin(2.0 * kPi * p.y);
                 }});
  fns.push_back({"f4", [](const Point2& p) { return std::sin(4.0 * kPi * (p.x + p.y)); }});
  fns.push_back({"f5", [](const Point2& p) {
                   return 1.0 / (25.0 * (p.x * p.x + p.y * p.y) + 1.0);
                 }});
  fns.push_back({"f6", [franke_classic](const Point2& p) {
                   return franke_blend(p.x, p.y, franke_classic);
                 }});
  return fns;
}

TestFunction benchmark_function(const std::string& id, bool franke_classic) {
  for (auto& f : benchmark_functions(franke_classic)) {
    if (f.id == id) return f;
  }
  throw std::invalid_argument("unknown benchmark function id: " + id);
}

}  // namespace histop
