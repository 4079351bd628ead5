#include "histop/histopolation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace histop {

LocalOperatorSpec LocalOperatorSpec::classical() {
  LocalOperatorSpec s;
  s.kind_ = OperatorKind::Classical;
  return s;
}

LocalOperatorSpec LocalOperatorSpec::enriched_family1(double sigma, double mu) {
  LocalOperatorSpec s;
  s.kind_ = OperatorKind::Enriched1;
  auto d = std::make_shared<Family1Density>(sigma, mu);
  s.q_ = ortho_quadratic_closed_form(*d);
  s.m2_ = d->moment(2);
  s.density_ = std::move(d);
  return s;
}

LocalOperatorSpec LocalOperatorSpec::enriched_family2(double sigma, double mu) {
  LocalOperatorSpec s;
  s.kind_ = OperatorKind::Enriched2;
  auto d = std::make_shared<Family2Density>(sigma, mu);
  s.q_ = ortho_quadratic_closed_form(*d);
  s.m2_ = d->moment(2);
  s.density_ = std::move(d);
  return s;
}

LocalOperatorSpec LocalOperatorSpec::generic(std::shared_ptr<const EdgeDensity> density,
                                             OrthoQuadratic q) {
  if (!density) throw std::invalid_argument("LocalOperatorSpec::generic: null density");
  if (!(std::fabs(q.quad_response) > 1e-14)) {
    throw std::invalid_argument(
        "LocalOperatorSpec::generic: quadratic has vanishing response to t^2");
  }
  LocalOperatorSpec s;
  s.kind_ = OperatorKind::Generic;
  s.q_ = q;
  s.m2_ = density->moment(2);
  s.density_ = std::move(density);
  return s;
}

const EdgeDensity& LocalOperatorSpec::density() const {
  if (!density_) throw std::logic_error("classical operator has no edge density");
  return *density_;
}

const OrthoQuadratic& LocalOperatorSpec::q() const {
  if (!enriched()) throw std::logic_error("classical operator has no enrichment quadratic");
  return q_;
}

double LocalOperatorSpec::second_moment() const {
  if (!enriched()) throw std::logic_error("classical operator has no density moments");
  return m2_;
}

double LocalOperatorSpec::quad_response() const { return q().quad_response; }

double LocalOperatorSpec::dual_coeff() const { return (1.0 + second_moment()) / quad_response(); }

bool LocalOperatorSpec::density_even() const {
  return kind_ == OperatorKind::Classical || density_->even();
}

const char* LocalOperatorSpec::name() const {
  switch (kind_) {
    case OperatorKind::Classical: return "classical";
    case OperatorKind::Enriched1: return "enriched-f1";
    case OperatorKind::Enriched2: return "enriched-f2";
    case OperatorKind::Generic: return "generic";
  }
  return "unknown";
}

double functional_I(const BivariateFn& f, const Triangle& tri, int j,
                    const EdgeDensity& w, const Rule1D& rule) {
  return integrate_edge([&](double t) { return f(tri.edge_point(j, t)) * w(t); }, rule);
}

double functional_L(const BivariateFn& f, const Triangle& tri, int j,
                    const EdgeDensity& w, const OrthoQuadratic& q, const Rule1D& rule) {
  return integrate_edge([&](double t) { return q(t) * f(tri.edge_point(j, t)) * w(t); },
                        rule);
}

double classical_functional(const BivariateFn& f, const Triangle& tri, int j,
                            const Rule1D& rule) {
  return 0.5 * integrate_edge([&](double t) { return f(tri.edge_point(j, t)); }, rule);
}

double basis_phi(int i, const std::array<double, 3>& lambda) {
  return 1.0 - 2.0 * lambda[i];
}

double basis_psi(int i, const std::array<double, 3>& lambda, const LocalOperatorSpec& spec) {
  const double A = spec.dual_coeff();
  const double l0 = lambda[i], l1 = lambda[(i + 1) % 3], l2 = lambda[(i + 2) % 3];
  return -A * (1.0 - 2.0 * l0) +
         (2.0 / spec.quad_response()) * (-l0 * l0 + l1 * l1 + l2 * l2);
}

double LocalReconstruction::evaluate(const std::array<double, 3>& lambda) const {
  double s = 0.0;
  for (int i = 0; i < 3; ++i) s += a[i] * lambda[i] + b[i] * lambda[i] * lambda[i];
  return s;
}

double LocalReconstruction::evaluate(const Triangle& tri, const Point2& p) const {
  return evaluate(tri.barycentric(p));
}

namespace {

// Coefficients of the reconstruction in barycentric-quadratic form from
// the three I values and, for enriched specs, the three L values:
// expanding the dual bases gives
//   a_i = (S_I - 2 I_i) - A (S_L - 2 L_i),  b_i = (2 / D)(S_L - 2 L_i),
// with S the respective sums, A the dual coefficient and D the quadratic
// response.
LocalReconstruction combine(const std::array<double, 3>& I,
                            const std::array<double, 3>* L,
                            const LocalOperatorSpec& spec) {
  LocalReconstruction r;
  const double SI = I[0] + I[1] + I[2];
  if (!L) {
    for (int i = 0; i < 3; ++i) r.a[i] = SI - 2.0 * I[i];
    return r;
  }
  const double SL = (*L)[0] + (*L)[1] + (*L)[2];
  const double A = spec.dual_coeff();
  const double D = spec.quad_response();
  for (int i = 0; i < 3; ++i) {
    const double li = SL - 2.0 * (*L)[i];
    r.a[i] = (SI - 2.0 * I[i]) - A * li;
    r.b[i] = 2.0 / D * li;
  }
  return r;
}

}  // namespace

LocalReconstruction reconstruct_local(const BivariateFn& f, const Triangle& tri,
                                      const LocalOperatorSpec& spec, const Rule1D& rule) {
  std::array<double, 3> I;
  if (!spec.enriched()) {
    for (int j = 0; j < 3; ++j) I[j] = classical_functional(f, tri, j, rule);
    return combine(I, nullptr, spec);
  }
  std::array<double, 3> L;
  const EdgeDensity& w = spec.density();
  const OrthoQuadratic& q = spec.q();
  for (int j = 0; j < 3; ++j) {
    I[j] = functional_I(f, tri, j, w, rule);
    L[j] = functional_L(f, tri, j, w, q, rule);
  }
  return combine(I, &L, spec);
}

GlobalReconstruction::GlobalReconstruction(const Mesh& mesh,
                                           std::vector<LocalReconstruction> locals)
    : mesh_(&mesh), locals_(std::move(locals)) {
  if (static_cast<int>(locals_.size()) != mesh.n_triangles()) {
    throw std::invalid_argument("GlobalReconstruction: one local reconstruction per triangle");
  }
  double x1 = mesh.vertex(0).x, y1 = mesh.vertex(0).y;
  double x2 = x1, y2 = y1;
  for (int i = 1; i < mesh.n_vertices(); ++i) {
    const Point2& p = mesh.vertex(i);
    x1 = std::min(x1, p.x);
    x2 = std::max(x2, p.x);
    y1 = std::min(y1, p.y);
    y2 = std::max(y2, p.y);
  }
  const int target = std::max(1, static_cast<int>(std::sqrt(mesh.n_triangles() / 2.0)));
  nx_ = ny_ = target;
  x0_ = x1;
  y0_ = y1;
  cell_ = std::max((x2 - x1) / nx_, (y2 - y1) / ny_);
  if (!(cell_ > 0.0)) cell_ = 1.0;
  buckets_.assign(static_cast<size_t>(nx_) * ny_, {});
  for (int i = 0; i < mesh.n_triangles(); ++i) {
    const Triangle& t = mesh.triangle(i);
    double bx1 = t.vertex(0).x, bx2 = bx1, by1 = t.vertex(0).y, by2 = by1;
    for (int k = 1; k < 3; ++k) {
      bx1 = std::min(bx1, t.vertex(k).x);
      bx2 = std::max(bx2, t.vertex(k).x);
      by1 = std::min(by1, t.vertex(k).y);
      by2 = std::max(by2, t.vertex(k).y);
    }
    const int cx1 = std::clamp(static_cast<int>((bx1 - x0_) / cell_), 0, nx_ - 1);
    const int cx2 = std::clamp(static_cast<int>((bx2 - x0_) / cell_), 0, nx_ - 1);
    const int cy1 = std::clamp(static_cast<int>((by1 - y0_) / cell_), 0, ny_ - 1);
    const int cy2 = std::clamp(static_cast<int>((by2 - y0_) / cell_), 0, ny_ - 1);
    for (int cy = cy1; cy <= cy2; ++cy) {
      for (int cx = cx1; cx <= cx2; ++cx) {
        buckets_[static_cast<size_t>(cy) * nx_ + cx].push_back(i);
      }
    }
  }
}

int GlobalReconstruction::locate(const Point2& p) const {
  const int cx = std::clamp(static_cast<int>((p.x - x0_) / cell_), 0, nx_ - 1);
  const int cy = std::clamp(static_cast<int>((p.y - y0_) / cell_), 0, ny_ - 1);
  // Bucket lists are filled in ascending triangle order, so the first hit
  // is the lowest index, which settles shared-edge ties deterministically.
  for (int i : buckets_[static_cast<size_t>(cy) * nx_ + cx]) {
    if (mesh_->triangle(i).contains(p, 1e-12)) return i;
  }
  for (int i = 0; i < mesh_->n_triangles(); ++i) {
    if (mesh_->triangle(i).contains(p, 1e-9)) return i;
  }
  throw std::domain_error("GlobalReconstruction: point (" + std::to_string(p.x) + ", " +
                          std::to_string(p.y) + ") lies outside the mesh");
}

double GlobalReconstruction::evaluate(const Point2& p) const {
  const int i = locate(p);
  return locals_[i].evaluate(mesh_->triangle(i), p);
}

void GlobalReconstruction::write_text(std::ostream& os) const {
  char buf[160];
  os << "triangles " << mesh_->n_triangles() << "\n";
  for (int i = 0; i < mesh_->n_triangles(); ++i) {
    const LocalReconstruction& r = locals_[i];
    std::snprintf(buf, sizeof buf, "%d %.17g %.17g %.17g %.17g %.17g %.17g\n", i,
                  r.a[0], r.a[1], r.a[2], r.b[0], r.b[1], r.b[2]);
    os << buf;
  }
}

GlobalReconstruction reconstruct_global(const BivariateFn& f, const Mesh& mesh,
                                        const LocalOperatorSpec& spec, const Rule1D& rule) {
  std::vector<LocalReconstruction> locals(mesh.n_triangles());
  const bool share = spec.density_even();
  // (I, L) per mesh edge; L stays zero for the classical operator.
  std::vector<std::optional<std::array<double, 2>>> cache;
  if (share) cache.resize(mesh.n_edges());

  for (int i = 0; i < mesh.n_triangles(); ++i) {
    const Triangle& tri = mesh.triangle(i);
    std::array<double, 3> I{}, L{};
    for (int j = 0; j < 3; ++j) {
      const int e = share ? mesh.edge_id(i, j) : -1;
      if (share && cache[e]) {
        I[j] = (*cache[e])[0];
        L[j] = (*cache[e])[1];
        continue;
      }
      if (spec.enriched()) {
        I[j] = functional_I(f, tri, j, spec.density(), rule);
        L[j] = functional_L(f, tri, j, spec.density(), spec.q(), rule);
      } else {
        I[j] = classical_functional(f, tri, j, rule);
      }
      if (share) cache[e] = {I[j], L[j]};
    }
    locals[i] = spec.enriched() ? combine(I, &L, spec) : combine(I, nullptr, spec);
  }
  return GlobalReconstruction(mesh, std::move(locals));
}

double unisolvency_certificate(const Triangle& tri, const LocalOperatorSpec& spec,
                               const Rule1D& rule) {
  if (!spec.enriched()) {
    throw std::logic_error("unisolvency_certificate: defined for enriched and generic specs");
  }
  const EdgeDensity& w = spec.density();
  const OrthoQuadratic& q = spec.q();

  // Rows: I_0..I_2 then L_0..L_2; columns: lambda_0..lambda_2 then squares.
  double M[6][6];
  for (int c = 0; c < 6; ++c) {
    const int k = c % 3;
    const bool square = c >= 3;
    BivariateFn mono = [&tri, k, square](const Point2& p) {
      const double l = tri.barycentric(p)[k];
      return square ? l * l : l;
    };
    for (int j = 0; j < 3; ++j) {
      M[j][c] = functional_I(mono, tri, j, w, rule);
      M[j + 3][c] = functional_L(mono, tri, j, w, q, rule);
    }
  }

  // Scale rows to unit max magnitude so the determinant measures angle,
  // not the size of the functionals.
  for (int r = 0; r < 6; ++r) {
    double mx = 0.0;
    for (int c = 0; c < 6; ++c) mx = std::max(mx, std::fabs(M[r][c]));
    if (mx == 0.0) return 0.0;
    for (int c = 0; c < 6; ++c) M[r][c] /= mx;
  }

  // |det| by Gaussian elimination with partial pivoting.
  double det = 1.0;
  for (int c = 0; c < 6; ++c) {
    int piv = c;
    for (int r = c + 1; r < 6; ++r) {
      if (std::fabs(M[r][c]) > std::fabs(M[piv][c])) piv = r;
    }
    if (M[piv][c] == 0.0) return 0.0;
    if (piv != c) std::swap(M[piv], M[c]);
    det *= M[c][c];
    for (int r = c + 1; r < 6; ++r) {
      const double fctr = M[r][c] / M[c][c];
      for (int cc = c; cc < 6; ++cc) M[r][cc] -= fctr * M[c][cc];
    }
  }
  return std::fabs(det);
}

}  // namespace histop
