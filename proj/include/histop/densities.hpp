#pragma once

#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "histop/geometry.hpp"
#include "histop/quadrature.hpp"

namespace histop {

// Probability density on [-1, 1] exposing its raw moments.  Moments feed
// the orthogonal-quadratic construction and the reconstruction operators,
// so implementations must keep them consistent with operator() to high
// accuracy.
class EdgeDensity {
 public:
  virtual ~EdgeDensity() = default;
  virtual double operator()(double t) const = 0;
  // Raw moment of order m >= 0; throws std::invalid_argument for m < 0.
  virtual double moment(int m) const = 0;
  virtual bool even() const = 0;
};

// First two-parameter family of generalized truncated normal densities,
//
//   k(t) = a * (t^2)^(2 mu - 2) * exp(-(t^2 / sigma^2)^mu / 2),
//
// with normalization a = mu / g(z), g = modified lower incomplete gamma at
// s = (4 mu - 3) / (2 mu), z = 1 / (2 sigma^(2 mu)).  At mu = 1 this is the
// truncated normal.  Even moments come in closed form as ratios of modified
// incomplete gamma values; odd moments vanish.  Requires sigma > 0 and
// mu >= 1 (std::domain_error otherwise).
class Family1Density final : public EdgeDensity {
 public:
  Family1Density(double sigma, double mu);
  double operator()(double t) const override;
  double moment(int m) const override;
  bool even() const override { return true; }
  double sigma() const { return sigma_; }
  double mu() const { return mu_; }
  double normalization() const { return norm_; }

 private:
  double sigma_, mu_, z_, gden_, norm_;
};

// Second family,
//
//   g(t) = c * (t^2)^(mu - 1) * exp(-(t^2 / sigma^2)^(2 mu - 1) / 2),
//
// with c = (2 mu - 1) / g(z), g the modified lower incomplete gamma at
// s = 1/2, z = 1 / (2 sigma^(4 mu - 2)).  Coincides with the first family
// at mu = 1.  Same parameter domain and moment structure.
class Family2Density final : public EdgeDensity {
 public:
  Family2Density(double sigma, double mu);
  double operator()(double t) const override;
  double moment(int m) const override;
  bool even() const override { return true; }
  double sigma() const { return sigma_; }
  double mu() const { return mu_; }
  double normalization() const { return norm_; }

 private:
  double sigma_, mu_, z_, gden_, norm_;
};

// sigma -> infinity limit of either family: a pure even power density
// c * (t^2)^p with
//   family 1:  c = (4 mu - 3) / 2,  p = 2 mu - 2,
//   family 2:  c = (2 mu - 1) / 2,  p = mu - 1,
// and closed-form moments.  family must be 1 or 2; mu >= 1.  At mu = 1 both
// reduce to the uniform density 1/2.
class LimitBetaDensity final : public EdgeDensity {
 public:
  LimitBetaDensity(double mu, int family);
  double operator()(double t) const override;
  double moment(int m) const override;
  bool even() const override { return true; }
  double mu() const { return mu_; }
  int family() const { return family_; }

 private:
  double mu_, c_, p_;
  int family_;
};

// Density given by an arbitrary evaluator.  Construction integrates the
// evaluator with the supplied rule, caches moments 0..max_cached_moment,
// and validates: nonnegativity at all nodes, unit mass to 1e-8, and a
// nondegenerate variance (moment(2) - moment(1)^2 > 1e-12).  Violations
// throw std::invalid_argument.  Evenness is detected by comparing values
// at mirrored nodes.  Cached moments are not refreshed automatically;
// call recompute_moments() after changing anything the evaluator depends
// on.
class GeneralDensity final : public EdgeDensity {
 public:
  static constexpr int max_cached_moment = 12;

  explicit GeneralDensity(std::function<double(double)> pdf);
  GeneralDensity(std::function<double(double)> pdf, Rule1D rule);

  // Loads "t value" pairs (whitespace or comma separated, '#' comments)
  // from a text file, builds a piecewise-linear density that is zero
  // outside the sampled range, and rescales it to unit mass under the
  // rule.  The applied scale factor is written to *renormalization when
  // given.  Throws std::runtime_error on I/O or format problems and
  // std::invalid_argument when the samples cannot form a density.
  static GeneralDensity from_file(const std::string& path,
                                  double* renormalization = nullptr);
  static GeneralDensity from_samples(std::vector<std::pair<double, double>> samples,
                                     double* renormalization = nullptr);

  double operator()(double t) const override;
  double moment(int m) const override;
  bool even() const override { return even_; }
  const Rule1D& rule() const { return rule_; }
  void recompute_moments();

 private:
  void validate_and_cache();

  std::function<double(double)> pdf_;
  Rule1D rule_;
  std::vector<double> moments_;
  bool even_ = false;
};

// q(t) = c2 t^2 + c1 t + c0, orthogonal to constants and linears under
// some density w.  norm_sq is the w-weighted integral of q^2 and
// quad_response the w-weighted integral of t^2 q; the two coincide when
// q is monic, and quad_response is the quantity the enriched operators
// divide by.
struct OrthoQuadratic {
  double c0 = 0.0;
  double c1 = 0.0;
  double c2 = 1.0;
  double norm_sq = 0.0;
  double quad_response = 0.0;
  double operator()(double t) const { return (c2 * t + c1) * t + c0; }
};

// For an even density: q = t^2 - moment(2), with norm_sq = quad_response
// = moment(4) - moment(2)^2, all in terms of the density's own moments.
// Throws std::invalid_argument when the density is not even.
OrthoQuadratic ortho_quadratic_closed_form(const EdgeDensity& w);

// Moment-matching construction valid for any density with nondegenerate
// variance: q = t^2 - a - b t with b and a solved from orthogonality to
// t and 1.  With normalize set, q is divided by quad_response so that the
// scaled quad_response is exactly 1.
OrthoQuadratic ortho_quadratic_canonical(const EdgeDensity& w, bool normalize = false);

// Same monic polynomial obtained by Gram-Schmidt on {1, t, t^2} under the
// density's inner product; an independent route used for cross-checks.
OrthoQuadratic ortho_quadratic_gram_schmidt(const EdgeDensity& w);

struct QValidation {
  double r_const = 0.0;     // integral of q w
  double r_linear = 0.0;    // integral of t q w
  double t2_response = 0.0; // integral of t^2 q w
  bool accepted = false;
};

// Checks a user-supplied polynomial (coefficients in ascending order,
// degree >= 2) against a density by quadrature: accepted when
// |r_const| <= 1e-8, |r_linear| <= 1e-8 and |t2_response| > 1e-10.
QValidation validate_user_q(const EdgeDensity& w, const std::vector<double>& coeffs,
                            const Rule1D& rule = default_edge_rule());

// Bivariate extensions of the family densities to a triangle through
// h_function.  Evaluation-only helpers: the reconstruction operators use
// only the edge restrictions, where h = t^2.  Away from the edges h is
// negative on part of the triangle, so family1_weight needs an
// integer-valued mu to stay defined there and family2_weight can change
// sign; both are well defined on the edges for every admissible mu.
double family1_weight(const Family1Density& d, const Triangle& tri, const Point2& p);
double family2_weight(const Family2Density& d, const Triangle& tri, const Point2& p);

}  // namespace histop
