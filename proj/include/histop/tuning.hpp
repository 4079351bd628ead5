#pragma once

#include <iosfwd>
#include <vector>

#include "histop/geometry.hpp"
#include "histop/histopolation.hpp"
#include "histop/quadrature.hpp"

namespace histop {

// Candidate parameter values for the enriched families; the search walks
// the cartesian product with mu as the outer loop, in the listed order.
struct ParameterGrid {
  std::vector<double> mu_values;
  std::vector<double> sigma_values;
};

struct SurfacePoint {
  double mu = 0.0;
  double sigma = 0.0;
  double error = 0.0;  // total L1 error over all validation pairs
};

struct TuningResult {
  double best_mu = 0.0;
  double best_sigma = 0.0;
  double best_total_error = 0.0;
  // One entry per grid candidate, mu-major, in grid order.
  std::vector<SurfacePoint> surface;
};

// Exhaustive search: for every (mu, sigma) candidate builds the enriched
// operator of the given family, reconstructs every validation function on
// every mesh, and accumulates L1 errors.  Only a strictly smaller total
// replaces the incumbent, so ties resolve to the earliest candidate in
// grid order and reruns are deterministic.  A reconstruction failure at
// any candidate aborts with a std::runtime_error naming the offending
// (mu, sigma).  family must be 1 or 2.
TuningResult grid_search(const std::vector<BivariateFn>& validation_fns,
                         const std::vector<Mesh>& meshes, const ParameterGrid& grid,
                         int family, const Rule1D& edge_rule = default_edge_rule(),
                         const TriRule& tri_rule = default_tri_rule());

// CSV rows "mu,sigma,total_l1_error" in grid order.
void write_surface(const TuningResult& result, std::ostream& os);

}  // namespace histop
