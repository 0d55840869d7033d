#ifndef LOGCONF_OPERATORS_HPP
#define LOGCONF_OPERATORS_HPP

#include <cmath>
#include <stdexcept>
#include <vector>

#include "logconf/constants.hpp"
#include "logconf/geometry.hpp"
#include "logconf/harmonics.hpp"
#include "logconf/quadrature.hpp"
#include "logconf/report.hpp"

// Pointwise evaluation of the conformal fractional and logarithmic
// Laplacians on S^N and of the logarithmic Laplacian on R^N, plus the
// derived residual checks (intertwining, conformal law, s->0 limit).

namespace logconf {

struct OperatorSample {
  double value = 0.0;
  double error_estimate = 0.0;
};

struct OperatorConfig {
  ToleranceConfig tol{};
  int panels = 12;
  int pts_per_panel = 12;
  int angular = 0;  // 0 picks the per-dimension default
  double grading = 0.5;
  // Adaptive refinement gives an error estimate but costs 2-3 evaluations;
  // nested form integrals switch it off and use the fixed base rule.
  bool adaptive = true;

  SphereRule sphere_rule(int N) const {
    return SphereRule::make(N, panels, pts_per_panel, angular, grading);
  }
  RadialAngularRule plane_rule(int N) const {
    return RadialAngularRule::make(N, panels, pts_per_panel, angular, grading);
  }
};

namespace detail {

// Polar integral of comb(u(z), u(zeta)) / |z-zeta|^{N+2s} over S^N after
// rotating z to the north pole. The substitution theta = sigma^{1/(1-2s)}
// absorbs the theta^{-2s} endpoint behaviour, so graded Gauss panels
// converge fast. comb is the kernel numerator, e.g. uz - uzeta.
template <typename Combine>
double sphere_kernel_integral_raw(const SphereField& u, double uz, const PoleRotation& R,
                                  int N, double s, const SphereRule& rule, Combine&& comb) {
  const double q = 1.0 / (1.0 - 2.0 * s);
  const double sigma_max = std::pow(M_PI, 1.0 / q);
  const auto polar = graded_rule(0.0, sigma_max, rule.panels, rule.pts_per_panel, rule.grading);
  double total = 0.0;
  for (const auto& nd : polar) {
    const double sigma = nd.x;
    const double theta = std::pow(sigma, q);
    // below this the O(eps) cancellation error in comb is amplified by the
    // kernel; the skipped true contribution is O(theta^{2-2s}) <= 1e-12
    if (theta < 1e-8) continue;
    const double jac = q * std::pow(sigma, q - 1.0);
    const double kernel = std::pow(2.0 * std::sin(0.5 * theta), N + 2.0 * s);
    const double sfac = std::pow(std::sin(theta), N - 1);
    double slice = 0.0;
    for (const auto& a : rule.angular.nodes) {
      const SpherePoint zeta = R.apply_inverse(rule.point(theta, a.first));
      slice += a.second * comb(uz, u(zeta));
    }
    total += nd.w * jac * sfac / kernel * slice;
  }
  return total;
}

inline double sphere_diff_integral_raw(const SphereField& u, double uz, const PoleRotation& R,
                                       int N, double s, const SphereRule& rule) {
  return sphere_kernel_integral_raw(u, uz, R, N, s, rule,
                                    [](double a, double b) { return a - b; });
}

inline double sphere_diff_integral(const SphereField& u, double uz, const PoleRotation& R,
                                   int N, double s, SphereRule rule, const ToleranceConfig& cfg,
                                   bool adaptive, double* error_estimate) {
  double prev = sphere_diff_integral_raw(u, uz, R, N, s, rule);
  if (!adaptive) {
    if (error_estimate) *error_estimate = 0.0;
    return prev;
  }
  for (int level = 0; level < cfg.max_refinement_level; ++level) {
    rule = rule.refined();
    const double cur = sphere_diff_integral_raw(u, uz, R, N, s, rule);
    const double diff = std::abs(cur - prev);
    if (diff <= cfg.target_abs_tol) {
      if (error_estimate) *error_estimate = diff;
      return cur;
    }
    prev = cur;
  }
  throw QuadratureError("sphere_diff_integral: no convergence within max_refinement_level");
}

}  // namespace detail

/// Conformal logarithmic Laplacian at z:
/// c_N * int (u(z)-u(zeta))/|z-zeta|^N dV + A_N u(z).
inline OperatorSample p_log_sphere(const SphereField& u, const SpherePoint& z,
                                   const OperatorConfig& cfg = {}) {
  const int N = u.dim;
  const LogConstants k = log_constants(N);
  const double uz = u(z);
  const PoleRotation R(z);
  OperatorSample out;
  const double integral =
      detail::sphere_diff_integral(u, uz, R, N, 0.0, cfg.sphere_rule(N), cfg.tol,
                                   cfg.adaptive, &out.error_estimate);
  out.value = k.c_N * integral + k.A_N * uz;
  return out;
}

/// Conformal fractional Laplacian at z for s in (0, 0.25].
inline OperatorSample p_s_sphere(const SphereField& u, const SpherePoint& z, double s,
                                 const OperatorConfig& cfg = {}) {
  if (!(s > 0.0 && s <= 0.25)) {
    throw std::domain_error("p_s_sphere: order s must lie in (0, 0.25]");
  }
  const int N = u.dim;
  const FracConstants k = frac_constants(N, s);
  const double uz = u(z);
  const PoleRotation R(z);
  OperatorSample out;
  const double integral =
      detail::sphere_diff_integral(u, uz, R, N, s, cfg.sphere_rule(N), cfg.tol,
                                   cfg.adaptive, &out.error_estimate);
  out.value = k.c_Ns * integral + k.A_Ns * uz;
  return out;
}

/// Logarithmic Laplacian on R^N at x: ball term - tail term + rho_N v(x).
inline OperatorSample log_laplacian_point(const PlaneField& v, const EuclideanPoint& x,
                                          const OperatorConfig& cfg = {}) {
  const int N = v.dim;
  const LogConstants k = log_constants(N);
  const RadialAngularRule rule = cfg.plane_rule(N);
  if (!cfg.adaptive) {
    const double ball = k.c_N * detail::ball_diff_raw(v.eval, x, rule);
    const double tail = k.c_N * detail::tail_raw(v.eval, x, rule);
    return {ball - tail + k.rho_N * v(x), 0.0};
  }
  double e1 = 0.0, e2 = 0.0;
  const double ball = integrate_ball_diff(v, x, rule, cfg.tol, &e1);
  const double tail = integrate_tail(v, x, rule, cfg.tol, &e2);
  return {ball - tail + k.rho_N * v(x), e1 + e2};
}

/// Logarithmic Q-curvature of the round metric: P^log applied to 1.
inline double q_curvature(int N) { return log_constants(N).A_N; }

/// Residual of the stereographic intertwining identity at x:
/// phi^{N/2} (P^log u)(sigma^{-1} x)  vs  L v - 2 v ln(phi), v = iota(u).
inline double intertwining_residual(const SphereField& u, const EuclideanPoint& x,
                                    const OperatorConfig& cfg = {}) {
  const int N = u.dim;
  const double phi = conformal_factor(x);
  const SpherePoint z = stereo_inv(x);
  const double lhs = std::pow(phi, 0.5 * N) * p_log_sphere(u, z, cfg).value;
  const PlaneField v = iota_push(u);
  const double rhs = log_laplacian_point(v, x, cfg).value - 2.0 * v(x) * std::log(phi);
  return std::abs(lhs - rhs);
}

/// Right-hand side of the conformal law: eta^{-N/4} P^log(eta^{N/4} phi) - phi ln(eta).
/// This is the defining evaluation of the operator in the metric eta g.
inline double conformal_apply(const SphereField& eta, const SphereField& phi_test,
                              const SpherePoint& z, const OperatorConfig& cfg = {}) {
  const int N = eta.dim;
  const double ez = eta(z);
  if (!(ez > 0.0)) throw std::domain_error("conformal_apply: eta must be positive");
  SphereField scaled;
  scaled.dim = N;
  scaled.smoothness = phi_test.smoothness;
  scaled.eval = [&eta, &phi_test, N](const SpherePoint& p) {
    return std::pow(eta(p), 0.25 * N) * phi_test(p);
  };
  return std::pow(ez, -0.25 * N) * p_log_sphere(scaled, z, cfg).value -
         phi_test(z) * std::log(ez);
}

/// Cocycle consistency of the conformal law for the factorization
/// eta = eta1 * eta2: one application with the product against the law
/// applied in two nested steps.
inline double conformal_law_residual(const SphereField& eta1, const SphereField& eta2,
                                     const SphereField& phi_test, const SpherePoint& z,
                                     const OperatorConfig& cfg = {}) {
  const int N = eta1.dim;
  SphereField product;
  product.dim = N;
  product.eval = [&eta1, &eta2](const SpherePoint& p) { return eta1(p) * eta2(p); };
  const double direct = conformal_apply(product, phi_test, z, cfg);

  // Nested route: first change g -> eta2 g, then eta2 g -> eta1 (eta2 g).
  SphereField inner_arg;
  inner_arg.dim = N;
  inner_arg.eval = [&eta1, &phi_test, N](const SpherePoint& p) {
    return std::pow(eta1(p), 0.25 * N) * phi_test(p);
  };
  const double e1z = eta1(z);
  const double inner = conformal_apply(eta2, inner_arg, z, cfg);
  const double nested = std::pow(e1z, -0.25 * N) * inner - phi_test(z) * std::log(e1z);
  return std::abs(direct - nested);
}

struct SLimitEntry {
  double s = 0.0;
  double max_error = 0.0;  // max over points of |(P^s u - u)/s - P^log u|
};

struct SLimitReport {
  std::vector<SLimitEntry> entries;
  std::vector<double> ratios;       // successive error ratios
  std::vector<double> step_ratios;  // successive s ratios (expected rate)
  bool first_order = false;         // every error ratio within 1.5x of the s ratio
};

/// First-order convergence check of (P^s u - u)/s toward P^log u.
inline SLimitReport slimit_convergence(const SphereField& u,
                                       const std::vector<double>& s_list,
                                       const std::vector<SpherePoint>& points,
                                       const OperatorConfig& cfg = {}) {
  SLimitReport rep;
  std::vector<double> plog(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    plog[i] = p_log_sphere(u, points[i], cfg).value;
  }
  for (double s : s_list) {
    SLimitEntry e;
    e.s = s;
    for (std::size_t i = 0; i < points.size(); ++i) {
      const double ps = p_s_sphere(u, points[i], s, cfg).value;
      const double err = std::abs((ps - u(points[i])) / s - plog[i]);
      e.max_error = std::max(e.max_error, err);
    }
    rep.entries.push_back(e);
  }
  rep.first_order = rep.entries.size() >= 2;
  for (std::size_t i = 1; i < rep.entries.size(); ++i) {
    const double r = rep.entries[i].max_error / rep.entries[i - 1].max_error;
    const double sr = rep.entries[i].s / rep.entries[i - 1].s;
    rep.ratios.push_back(r);
    rep.step_ratios.push_back(sr);
    if (!(r <= 1.5 * sr && r >= sr / 1.5)) rep.first_order = false;
  }
  return rep;
}

}  // namespace logconf

#endif  // LOGCONF_OPERATORS_HPP
