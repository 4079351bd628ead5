#pragma once

#include <array>
#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <vector>

#include "histop/densities.hpp"
#include "histop/geometry.hpp"
#include "histop/quadrature.hpp"

namespace histop {

using BivariateFn = std::function<double(const Point2&)>;

enum class OperatorKind { Classical, Enriched1, Enriched2, Generic };

// Everything a local reconstruction needs: which operator to apply, the
// edge density, the quadratic enrichment polynomial and the derived scalar
// data (second moment, quadratic response, dual coefficient).  Copyable;
// the density is shared.
class LocalOperatorSpec {
 public:
  // Averaged edge integrals only; reconstructs into affine functions.
  static LocalOperatorSpec classical();
  // Weighted edge integrals under one of the closed-form families plus the
  // matching quadratic enrichment; reconstructs into full quadratics.
  static LocalOperatorSpec enriched_family1(double sigma, double mu);
  static LocalOperatorSpec enriched_family2(double sigma, double mu);
  // Arbitrary density with a caller-chosen orthogonal quadratic.  The
  // closed-form dual basis below assumes an even density; unisolvency
  // itself does not, and can be checked with unisolvency_certificate.
  static LocalOperatorSpec generic(std::shared_ptr<const EdgeDensity> density,
                                   OrthoQuadratic q);

  OperatorKind kind() const { return kind_; }
  bool enriched() const { return kind_ != OperatorKind::Classical; }

  // Throw std::logic_error for the classical spec, which has no density
  // or enrichment data.
  const EdgeDensity& density() const;
  const OrthoQuadratic& q() const;
  double second_moment() const;
  double quad_response() const;
  // A = (1 + second_moment) / quad_response, the coefficient coupling the
  // affine and quadratic parts of the dual basis.
  double dual_coeff() const;

  bool density_even() const;
  // Short text used by error reports and the CLI ("classical",
  // "enriched-f1", "enriched-f2", "generic").
  const char* name() const;

 private:
  LocalOperatorSpec() = default;
  OperatorKind kind_ = OperatorKind::Classical;
  std::shared_ptr<const EdgeDensity> density_;
  OrthoQuadratic q_;
  double m2_ = 0.0;
};

// Weighted edge integral of f against the density along edge j:
// integral over [-1,1] of f(edge_point(j,t)) w(t) dt.
double functional_I(const BivariateFn& f, const Triangle& tri, int j,
                    const EdgeDensity& w, const Rule1D& rule = default_edge_rule());

// Enriched companion with the quadratic inserted:
// integral of q(t) f(edge_point(j,t)) w(t) dt.
double functional_L(const BivariateFn& f, const Triangle& tri, int j,
                    const EdgeDensity& w, const OrthoQuadratic& q,
                    const Rule1D& rule = default_edge_rule());

// Plain averaged edge integral (1/2) integral of f(edge_point(j,t)) dt,
// the classical functional.
double classical_functional(const BivariateFn& f, const Triangle& tri, int j,
                            const Rule1D& rule = default_edge_rule());

// Affine dual basis phi_i = 1 - 2 lambda_i, shared by all operators.
double basis_phi(int i, const std::array<double, 3>& lambda);

// Quadratic dual basis for an enriched spec,
// psi_i = -A phi_i + (2 / quad_response)(-lambda_i^2 + sum of the other two
// squares); throws std::logic_error for the classical spec.
double basis_psi(int i, const std::array<double, 3>& lambda, const LocalOperatorSpec& spec);

// Reconstruction on one triangle stored in barycentric-quadratic form
// sum_i a[i] lambda_i + sum_i b[i] lambda_i^2.
struct LocalReconstruction {
  std::array<double, 3> a{};
  std::array<double, 3> b{};
  double evaluate(const std::array<double, 3>& lambda) const;
  double evaluate(const Triangle& tri, const Point2& p) const;
};

// Builds the local reconstruction from the six (or three, classical)
// edge functionals of f.
LocalReconstruction reconstruct_local(const BivariateFn& f, const Triangle& tri,
                                      const LocalOperatorSpec& spec,
                                      const Rule1D& rule = default_edge_rule());

// Piecewise reconstruction over a mesh.  Holds a pointer to the mesh,
// which must outlive the reconstruction.  Point evaluation locates the
// containing triangle through a uniform bucket grid with an exhaustive
// fallback; points on shared edges resolve to the lowest triangle index,
// and points outside every triangle throw std::domain_error.
class GlobalReconstruction {
 public:
  GlobalReconstruction(const Mesh& mesh, std::vector<LocalReconstruction> locals);

  const Mesh& mesh() const { return *mesh_; }
  const LocalReconstruction& local(int tri) const { return locals_[tri]; }
  double evaluate(const Point2& p) const;
  int locate(const Point2& p) const;

  // Delimited text rows: triangle index, a[0..2], b[0..2].
  void write_text(std::ostream& os) const;

 private:
  const Mesh* mesh_;
  std::vector<LocalReconstruction> locals_;
  double x0_, y0_, cell_;
  int nx_, ny_;
  std::vector<std::vector<int>> buckets_;
};

// Applies the local operator on every triangle.  Edge functionals are
// computed once per mesh edge and reused by the second adjacent triangle
// when the density is even (the two traversal directions then integrate
// identically); otherwise every triangle integrates its own edges.
GlobalReconstruction reconstruct_global(const BivariateFn& f, const Mesh& mesh,
                                        const LocalOperatorSpec& spec,
                                        const Rule1D& rule = default_edge_rule());

// Scale-invariant unisolvency measure for an enriched or generic spec on a
// triangle: assemble the 6x6 matrix of the edge functionals applied to the
// quadratic monomial basis {lambda_i, lambda_i^2}, scale every row by its
// largest entry, and return |det|.  Values above roughly 1e-10 certify a
// solvable local problem; throws std::logic_error for the classical spec.
double unisolvency_certificate(const Triangle& tri, const LocalOperatorSpec& spec,
                               const Rule1D& rule = default_edge_rule());

}  // namespace histop
