#include "histop/workflow.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

namespace histop {

double l1_error(const BivariateFn& f, const GlobalReconstruction& recon,
                const TriRule& rule) {
  const Mesh& mesh = recon.mesh();
  double total = 0.0;
  for (int i = 0; i < mesh.n_triangles(); ++i) {
    const Triangle& tri = mesh.triangle(i);
    const LocalReconstruction& loc = recon.local(i);
    auto diff = [&](const Point2& p) { return std::fabs(f(p) - loc.evaluate(tri, p)); };

    const Point2 a = tri.vertex(0), b = tri.vertex(1), c = tri.vertex(2);
    const Point2 mab{0.5 * (a.x + b.x), 0.5 * (a.y + b.y)};
    const Point2 mbc{0.5 * (b.x + c.x), 0.5 * (b.y + c.y)};
    const Point2 mca{0.5 * (c.x + a.x), 0.5 * (c.y + a.y)};
    const Triangle sub[4] = {{a, mab, mca}, {mab, b, mbc}, {mca, mbc, c}, {mab, mbc, mca}};
    for (const Triangle& s : sub) total += integrate_triangle(diff, s, rule);
  }
  return total;
}

void ErrorReport::write_csv(std::ostream& os) const {
  os << "function,n,triangles,operator,l1_error\n";
  char buf[64];
  for (const ErrorRow& r : rows) {
    std::snprintf(buf, sizeof buf, "%.15g", r.l1_error);
    os << r.function << "," << r.level << "," << r.triangles << "," << r.op << "," << buf
       << "\n";
  }
}

ErrorReport run_workflow(const std::vector<TestFunction>& functions,
                         const std::vector<int>& levels,
                         const LocalOperatorSpec& enriched_spec,
                         const std::string& emit_path, const Rule1D& edge_rule,
                         const TriRule& tri_rule) {
  const LocalOperatorSpec classical = LocalOperatorSpec::classical();

  std::vector<Mesh> meshes;
  meshes.reserve(levels.size());
  for (int n : levels) meshes.push_back(friedrichs_keller(n));

  ErrorReport report;
  for (const TestFunction& f : functions) {
    for (size_t li = 0; li < levels.size(); ++li) {
      const Mesh& mesh = meshes[li];
      const int ntri = mesh.n_triangles();

      const GlobalReconstruction rc = reconstruct_global(f.fn, mesh, classical, edge_rule);
      report.rows.push_back(
          {f.id, levels[li], ntri, classical.name(), l1_error(f.fn, rc, tri_rule)});

      const GlobalReconstruction re = reconstruct_global(f.fn, mesh, enriched_spec, edge_rule);
      report.rows.push_back(
          {f.id, levels[li], ntri, enriched_spec.name(), l1_error(f.fn, re, tri_rule)});
    }
  }

  if (!emit_path.empty()) {
    std::ofstream out(emit_path);
    if (!out) throw std::runtime_error("run_workflow: cannot open " + emit_path);
    report.write_csv(out);
  }
  return report;
}

}  // namespace histop
