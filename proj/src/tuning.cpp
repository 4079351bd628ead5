#include "histop/tuning.hpp"

#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>

#include "histop/workflow.hpp"

namespace histop {

TuningResult grid_search(const std::vector<BivariateFn>& validation_fns,
                         const std::vector<Mesh>& meshes, const ParameterGrid& grid,
                         int family, const Rule1D& edge_rule, const TriRule& tri_rule) {
  if (family != 1 && family != 2) {
    throw std::invalid_argument("grid_search: family must be 1 or 2");
  }
  if (validation_fns.empty() || meshes.empty()) {
    throw std::invalid_argument("grid_search: need at least one validation function and mesh");
  }
  if (grid.mu_values.empty() || grid.sigma_values.empty()) {
    throw std::invalid_argument("grid_search: empty parameter grid");
  }

  TuningResult result;
  result.surface.reserve(grid.mu_values.size() * grid.sigma_values.size());
  bool have_best = false;

  for (double mu : grid.mu_values) {
    for (double sigma : grid.sigma_values) {
      double total = 0.0;
      try {
        const LocalOperatorSpec spec = (family == 1)
                                           ? LocalOperatorSpec::enriched_family1(sigma, mu)
                                           : LocalOperatorSpec::enriched_family2(sigma, mu);
        for (const Mesh& mesh : meshes) {
          for (const BivariateFn& f : validation_fns) {
            const GlobalReconstruction rec = reconstruct_global(f, mesh, spec, edge_rule);
            total += l1_error(f, rec, tri_rule);
          }
        }
      } catch (const std::exception& e) {
        throw std::runtime_error("grid_search: candidate mu=" + std::to_string(mu) +
                                 " sigma=" + std::to_string(sigma) + " failed: " + e.what());
      }
      result.surface.push_back({mu, sigma, total});
      // Strict comparison: ties keep the earlier candidate in grid order.
      if (!have_best || total < result.best_total_error) {
        have_best = true;
        result.best_mu = mu;
        result.best_sigma = sigma;
        result.best_total_error = total;
      }
    }
  }
  return result;
}

void write_surface(const TuningResult& result, std::ostream& os) {
  os << "mu,sigma,total_l1_error\n";
  char buf[64];
  for (const SurfacePoint& p : result.surface) {
    std::snprintf(buf, sizeof buf, "%.15g", p.mu);
    os << buf << ",";
    std::snprintf(buf, sizeof buf, "%.15g", p.sigma);
    os << buf << ",";
    std::snprintf(buf, sizeof buf, "%.15g", p.error);
    os << buf << "\n";
  }
}

}  // namespace histop
