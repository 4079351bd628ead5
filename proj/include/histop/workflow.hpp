#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "histop/histopolation.hpp"
#include "histop/quadrature.hpp"
#include "histop/test_functions.hpp"

namespace histop {

// L1 distance between f and the reconstruction, integrated triangle by
// triangle so no point location is involved.  Each triangle is split once
// into its four midpoint subtriangles before applying the rule, which
// recovers the accuracy the plain rule loses at the kink of |f - p|.
double l1_error(const BivariateFn& f, const GlobalReconstruction& recon,
                const TriRule& rule = default_tri_rule());

struct ErrorRow {
  std::string function;
  int level = 0;       // mesh parameter n
  int triangles = 0;   // 2 (n+1)^2
  std::string op;      // operator name
  double l1_error = 0.0;
};

struct ErrorReport {
  std::vector<ErrorRow> rows;
  // Header "function,n,triangles,operator,l1_error"; values at 15
  // significant digits.  Reruns of the same configuration are
  // byte-identical.
  void write_csv(std::ostream& os) const;
};

// Benchmark sweep: for every function and every mesh level, reconstructs
// with the classical operator and with the given enriched spec and records
// both L1 errors.  Meshes are built once per level.  When emit_path is
// nonempty the report is also written there as CSV (std::runtime_error if
// the file cannot be opened).
ErrorReport run_workflow(const std::vector<TestFunction>& functions,
                         const std::vector<int>& levels,
                         const LocalOperatorSpec& enriched_spec,
                         const std::string& emit_path = "",
                         const Rule1D& edge_rule = default_edge_rule(),
                         const TriRule& tri_rule = default_tri_rule());

}  // namespace histop
