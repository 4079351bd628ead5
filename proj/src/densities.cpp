#include "histop/densities.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "histop/special_functions.hpp"

namespace histop {

namespace {

void check_family_params(const char* name, double sigma, double mu) {
  if (!(sigma > 0.0)) {
    throw std::domain_error(std::string(name) + ": sigma must be positive, got " +
                            std::to_string(sigma));
  }
  if (!(mu >= 1.0)) {
    throw std::domain_error(std::string(name) + ": mu must be >= 1, got " +
                            std::to_string(mu));
  }
}

void check_moment_order(int m) {
  if (m < 0) throw std::invalid_argument("moment order must be nonnegative");
}

}  // namespace

Family1Density::Family1Density(double sigma, double mu) : sigma_(sigma), mu_(mu) {
  check_family_params("Family1Density", sigma, mu);
  z_ = 1.0 / (2.0 * std::pow(sigma_, 2.0 * mu_));
  gden_ = modified_incomplete_gamma((4.0 * mu_ - 3.0) / (2.0 * mu_), z_);
  norm_ = mu_ / gden_;
}

double Family1Density::operator()(double t) const {
  const double t2 = t * t;
  return norm_ * std::pow(t2, 2.0 * mu_ - 2.0) *
         std::exp(-0.5 * std::pow(t2 / (sigma_ * sigma_), mu_));
}

double Family1Density::moment(int m) const {
  check_moment_order(m);
  if (m % 2 == 1) return 0.0;
  const double k = m / 2;
  const double s = (2.0 * k + 4.0 * mu_ - 3.0) / (2.0 * mu_);
  return modified_incomplete_gamma(s, z_) / gden_;
}

Family2Density::Family2Density(double sigma, double mu) : sigma_(sigma), mu_(mu) {
  check_family_params("Family2Density", sigma, mu);
  z_ = 1.0 / (2.0 * std::pow(sigma_, 4.0 * mu_ - 2.0));
  gden_ = modified_incomplete_gamma(0.5, z_);
  norm_ = (2.0 * mu_ - 1.0) / gden_;
}

double Family2Density::operator()(double t) const {
  const double t2 = t * t;
  return norm_ * std::pow(t2, mu_ - 1.0) *
         std::exp(-0.5 * std::pow(t2 / (sigma_ * sigma_), 2.0 * mu_ - 1.0));
}

double Family2Density::moment(int m) const {
  check_moment_order(m);
  if (m % 2 == 1) return 0.0;
  const double k = m / 2;
  const double s = (2.0 * k + 2.0 * mu_ - 1.0) / (2.0 * (2.0 * mu_ - 1.0));
  return modified_incomplete_gamma(s, z_) / gden_;
}

LimitBetaDensity::LimitBetaDensity(double mu, int family) : mu_(mu), family_(family) {
  if (!(mu >= 1.0)) {
    throw std::domain_error("LimitBetaDensity: mu must be >= 1, got " + std::to_string(mu));
  }
  if (family != 1 && family != 2) {
    throw std::invalid_argument("LimitBetaDensity: family must be 1 or 2");
  }
  p_ = (family == 1) ? 2.0 * mu - 2.0 : mu - 1.0;
  c_ = (2.0 * p_ + 1.0) / 2.0;
}

double LimitBetaDensity::operator()(double t) const {
  return c_ * std::pow(t * t, p_);
}

double LimitBetaDensity::moment(int m) const {
  check_moment_order(m);
  if (m % 2 == 1) return 0.0;
  return (2.0 * p_ + 1.0) / (m + 2.0 * p_ + 1.0);
}

GeneralDensity::GeneralDensity(std::function<double(double)> pdf)
    : GeneralDensity(std::move(pdf), default_edge_rule()) {}

GeneralDensity::GeneralDensity(std::function<double(double)> pdf, Rule1D rule)
    : pdf_(std::move(pdf)), rule_(std::move(rule)) {
  validate_and_cache();
}

void GeneralDensity::validate_and_cache() {
  const int n = rule_.size();
  std::vector<double> vals(n);
  for (int i = 0; i < n; ++i) {
    const double v = pdf_(rule_.nodes[i]);
    if (!std::isfinite(v)) {
      throw std::invalid_argument("GeneralDensity: non-finite value at t=" +
                                  std::to_string(rule_.nodes[i]));
    }
    if (v < -1e-12) {
      throw std::invalid_argument("GeneralDensity: negative value " + std::to_string(v) +
                                  " at t=" + std::to_string(rule_.nodes[i]));
    }
    vals[i] = v;
  }

  moments_.assign(max_cached_moment + 1, 0.0);
  for (int i = 0; i < n; ++i) {
    double tp = 1.0;
    for (int m = 0; m <= max_cached_moment; ++m) {
      moments_[m] += rule_.weights[i] * vals[i] * tp;
      tp *= rule_.nodes[i];
    }
  }

  if (std::fabs(moments_[0] - 1.0) > 1e-8) {
    throw std::invalid_argument("GeneralDensity: mass " + std::to_string(moments_[0]) +
                                " differs from 1 beyond 1e-8; renormalize first");
  }
  if (moments_[2] - moments_[1] * moments_[1] <= 1e-12) {
    throw std::invalid_argument("GeneralDensity: degenerate variance");
  }

  double scale = 0.0, asym = 0.0;
  for (int i = 0; i < n; ++i) {
    scale = std::max(scale, std::fabs(vals[i]));
    asym = std::max(asym, std::fabs(vals[i] - pdf_(-rule_.nodes[i])));
  }
  even_ = asym <= 1e-12 * (1.0 + scale);
}

void GeneralDensity::recompute_moments() { validate_and_cache(); }

double GeneralDensity::operator()(double t) const { return pdf_(t); }

double GeneralDensity::moment(int m) const {
  check_moment_order(m);
  if (m <= max_cached_moment) return moments_[m];
  return integrate_edge([&](double t) { return pdf_(t) * std::pow(t, m); }, rule_);
}

GeneralDensity GeneralDensity::from_samples(std::vector<std::pair<double, double>> samples,
                                            double* renormalization) {
  if (samples.size() < 2) {
    throw std::invalid_argument("density samples: need at least two points");
  }
  std::sort(samples.begin(), samples.end());
  for (size_t i = 0; i < samples.size(); ++i) {
    if (!std::isfinite(samples[i].first) || !std::isfinite(samples[i].second)) {
      throw std::invalid_argument("density samples: non-finite entry");
    }
    if (samples[i].second < 0.0) {
      throw std::invalid_argument("density samples: negative value at t=" +
                                  std::to_string(samples[i].first));
    }
    if (i > 0 && samples[i].first <= samples[i - 1].first) {
      throw std::invalid_argument("density samples: abscissae must be distinct");
    }
  }

  auto table = std::make_shared<std::vector<std::pair<double, double>>>(std::move(samples));
  auto interp = [table](double t) -> double {
    const auto& s = *table;
    if (t < s.front().first || t > s.back().first) return 0.0;
    auto it = std::lower_bound(s.begin(), s.end(), t,
                               [](const auto& a, double v) { return a.first < v; });
    if (it == s.begin()) return it->second;
    const auto& hi = *it;
    const auto& lo = *(it - 1);
    const double u = (t - lo.first) / (hi.first - lo.first);
    return lo.second + u * (hi.second - lo.second);
  };

  const Rule1D& rule = default_edge_rule();
  const double mass = integrate_edge(interp, rule);
  if (!(mass > 1e-12)) {
    throw std::invalid_argument("density samples: mass " + std::to_string(mass) +
                                " too small to renormalize");
  }
  const double scale = 1.0 / mass;
  if (renormalization) *renormalization = scale;
  return GeneralDensity([interp, scale](double t) { return scale * interp(t); }, rule);
}

GeneralDensity GeneralDensity::from_file(const std::string& path, double* renormalization) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("density file: cannot open " + path);
  std::vector<std::pair<double, double>> samples;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ls(line);
    double t, v;
    if (!(ls >> t)) continue;  // blank or comment-only line
    if (!(ls >> v)) {
      throw std::runtime_error("density file: line " + std::to_string(lineno) +
                               " of " + path + " is not a 't value' pair");
    }
    samples.emplace_back(t, v);
  }
  return from_samples(std::move(samples), renormalization);
}

OrthoQuadratic ortho_quadratic_closed_form(const EdgeDensity& w) {
  if (!w.even()) {
    throw std::invalid_argument(
        "ortho_quadratic_closed_form: density must be even; use the canonical construction");
  }
  const double m2 = w.moment(2);
  const double m4 = w.moment(4);
  OrthoQuadratic q;
  q.c0 = -m2;
  q.c1 = 0.0;
  q.c2 = 1.0;
  q.norm_sq = m4 - m2 * m2;
  q.quad_response = q.norm_sq;
  if (!(q.norm_sq > 1e-14)) {
    throw std::invalid_argument("ortho_quadratic_closed_form: degenerate density moments");
  }
  return q;
}

OrthoQuadratic ortho_quadratic_canonical(const EdgeDensity& w, bool normalize) {
  const double m1 = w.moment(1);
  const double m2 = w.moment(2);
  const double m3 = w.moment(3);
  const double m4 = w.moment(4);
  const double var = m2 - m1 * m1;
  if (!(var > 1e-12)) {
    throw std::invalid_argument("ortho_quadratic_canonical: degenerate variance");
  }
  const double b = (m1 * m2 - m3) / (m1 * m1 - m2);
  const double a = m2 - b * m1;
  const double nu = m4 - a * m2 - b * m3;
  if (!(std::fabs(nu) > 1e-14)) {
    throw std::invalid_argument("ortho_quadratic_canonical: vanishing quadratic response");
  }
  OrthoQuadratic q;
  q.c0 = -a;
  q.c1 = -b;
  q.c2 = 1.0;
  q.norm_sq = nu;
  q.quad_response = nu;
  if (normalize) {
    q.c0 /= nu;
    q.c1 /= nu;
    q.c2 /= nu;
    q.norm_sq = 1.0 / nu;
    q.quad_response = 1.0;
  }
  return q;
}

OrthoQuadratic ortho_quadratic_gram_schmidt(const EdgeDensity& w) {
  const double m1 = w.moment(1);
  const double m2 = w.moment(2);
  const double m3 = w.moment(3);
  const double m4 = w.moment(4);
  const double var = m2 - m1 * m1;
  if (!(var > 1e-12)) {
    throw std::invalid_argument("ortho_quadratic_gram_schmidt: degenerate variance");
  }
  // Orthogonalize t^2 against e1 = t - m1 and e0 = 1 under the w inner
  // product; all inner products reduce to raw moments.
  const double beta = (m3 - m1 * m2) / var;
  OrthoQuadratic q;
  q.c2 = 1.0;
  q.c1 = -beta;
  q.c0 = beta * m1 - m2;
  q.norm_sq = m4 + 2.0 * q.c1 * m3 + (q.c1 * q.c1 + 2.0 * q.c0) * m2 +
              2.0 * q.c0 * q.c1 * m1 + q.c0 * q.c0;
  q.quad_response = m4 + q.c1 * m3 + q.c0 * m2;
  return q;
}

QValidation validate_user_q(const EdgeDensity& w, const std::vector<double>& coeffs,
                            const Rule1D& rule) {
  if (coeffs.size() < 3) {
    throw std::invalid_argument("validate_user_q: polynomial degree must be >= 2");
  }
  if (coeffs.back() == 0.0) {
    throw std::invalid_argument("validate_user_q: leading coefficient is zero");
  }
  auto qeval = [&coeffs](double t) {
    double v = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * t + *it;
    return v;
  };
  QValidation r;
  r.r_const = integrate_edge([&](double t) { return qeval(t) * w(t); }, rule);
  r.r_linear = integrate_edge([&](double t) { return t * qeval(t) * w(t); }, rule);
  r.t2_response = integrate_edge([&](double t) { return t * t * qeval(t) * w(t); }, rule);
  r.accepted = std::fabs(r.r_const) <= 1e-8 && std::fabs(r.r_linear) <= 1e-8 &&
               std::fabs(r.t2_response) > 1e-10;
  return r;
}

double family1_weight(const Family1Density& d, const Triangle& tri, const Point2& p) {
  const double h = h_function(tri, p);
  const double s2 = d.sigma() * d.sigma();
  return d.normalization() * std::pow(h * h, d.mu() - 1.0) *
         std::exp(-0.5 * std::pow(h / s2, d.mu()));
}

double family2_weight(const Family2Density& d, const Triangle& tri, const Point2& p) {
  const double h = h_function(tri, p);
  const double s2 = d.sigma() * d.sigma();
  return d.normalization() * std::pow(h, d.mu() - 1.0) *
         std::exp(-0.5 * std::pow(h / s2, 2.0 * d.mu() - 1.0));
}

}  // namespace histop
