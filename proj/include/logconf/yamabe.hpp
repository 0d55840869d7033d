#ifndef LOGCONF_YAMABE_HPP
#define LOGCONF_YAMABE_HPP

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "logconf/constants.hpp"
#include "logconf/geometry.hpp"
#include "logconf/operators.hpp"
#include "logconf/report.hpp"

// Closed-form solution families of the logarithmic Yamabe equations
//   (Y1)  P^log_g u = (4/N) u ln|u| + mu u   on S^N,
//   (Y2)  L v       = (4/N) v ln|v| + mu v   on R^N,
// and pointwise residual verification on them.

namespace logconf {

struct BubbleParams {
  double t = 1.0;       // scale, > 0
  Coords a;             // center in R^N
  double mu = 0.0;      // Yamabe constant
};

struct FrankParams {
  Coords theta;  // length N+1, |theta| < 1
};

/// Plane bubble v(x) = e^{(N/4)(A_N - mu)} (2t / (t^2 + |x-a|^2))^{N/2}.
inline PlaneField bubble_field(const BubbleParams& p, int N) {
  if (!(p.t > 0.0)) throw std::domain_error("bubble_field: scale t must be positive");
  Coords a = p.a;
  if (a.empty()) a.assign(N, 0.0);
  if (static_cast<int>(a.size()) != N) {
    throw std::domain_error("bubble_field: center has wrong dimension");
  }
  const double pref = std::exp(0.25 * N * (log_constants(N).A_N - p.mu));
  PlaneField v;
  v.dim = N;
  v.decay = N;
  v.smoothness = Smoothness::Smooth;
  v.eval = [pref, t = p.t, a = std::move(a), N](const EuclideanPoint& x) {
    double d2 = 0.0;
    for (int i = 0; i < N; ++i) {
      const double d = x.x[i] - a[i];
      d2 += d * d;
    }
    return pref * std::pow(2.0 * t / (t * t + d2), 0.5 * N);
  };
  return v;
}

/// Sphere optimizer u_theta(z) = (sqrt(1-|theta|^2) / (1 - theta.z))^{N/2}.
inline SphereField frank_field(const FrankParams& p, int N) {
  if (static_cast<int>(p.theta.size()) != N + 1) {
    throw std::domain_error("frank_field: theta must have length N+1");
  }
  const double t2 = norm2(p.theta);
  if (!(t2 < 1.0)) throw std::domain_error("frank_field: |theta| must be < 1");
  const double root = std::sqrt(1.0 - t2);
  SphereField u;
  u.dim = N;
  u.smoothness = Smoothness::Smooth;
  u.eval = [root, theta = p.theta, N](const SpherePoint& z) {
    return std::pow(root / (1.0 - dot(theta, z.z)), 0.5 * N);
  };
  return u;
}

/// Parameter map theta -> (a, t): the bubble obtained by pushing u_theta
/// through iota has center a = theta' / (1 + theta_{N+1}) and scale
/// t = sqrt(1 - |theta|^2) / (1 + theta_{N+1}).
inline std::pair<Coords, double> bubble_params_from_theta(const Coords& theta) {
  const int N = static_cast<int>(theta.size()) - 1;
  const double denom = 1.0 + theta[N];
  if (!(denom > 0.0)) throw std::domain_error("bubble_params_from_theta: theta at south pole");
  Coords a(N);
  for (int i = 0; i < N; ++i) a[i] = theta[i] / denom;
  const double t = std::sqrt(std::max(0.0, 1.0 - norm2(theta))) / denom;
  return {std::move(a), t};
}

/// Inverse map (a, t) -> theta with D = 2 / (t^2 + 1 + |a|^2):
/// theta' = D a, theta_{N+1} = D - 1.
inline Coords theta_from_bubble_params(const Coords& a, double t) {
  if (!(t > 0.0)) throw std::domain_error("theta_from_bubble_params: t must be positive");
  const int N = static_cast<int>(a.size());
  const double D = 2.0 / (t * t + 1.0 + norm2(a));
  Coords theta(N + 1);
  for (int i = 0; i < N; ++i) theta[i] = D * a[i];
  theta[N] = D - 1.0;
  return theta;
}

/// Chen-Zhou solution of (Y2) at mu = 0: gamma_N (2t/(t^2+|x-c|^2))^{N/2}.
inline PlaneField chen_zhou_field(int N, double t = 1.0, Coords center = {}) {
  return bubble_field(BubbleParams{t, std::move(center), 0.0}, N);
}

// Sample points with |u| < this bound are excluded from residual reports:
// the u ln|u| term is not Lipschitz through zero.
inline constexpr double yamabe_zero_guard = 1e-8;

/// Pointwise residual of (Y1) at the given sphere points.
inline ResidualReport residual_y1(const SphereField& u, double mu,
                                  const std::vector<SpherePoint>& points,
                                  const OperatorConfig& cfg = {}, double tol = 1e-5) {
  const int N = u.dim;
  ResidualReport rep;
  rep.name = "yamabe_sphere";
  for (const auto& z : points) {
    const double uz = u(z);
    if (std::abs(uz) < yamabe_zero_guard) continue;
    const double lhs = p_log_sphere(u, z, cfg).value;
    const double rhs = (4.0 / N) * uz * std::log(std::abs(uz)) + mu * uz;
    rep.add(z.z, lhs - rhs);
  }
  rep.finalize(tol);
  return rep;
}

/// Pointwise residual of (Y2) at the given plane points.
inline ResidualReport residual_y2(const PlaneField& v, double mu,
                                  const std::vector<EuclideanPoint>& points,
                                  const OperatorConfig& cfg = {}, double tol = 1e-5) {
  const int N = v.dim;
  ResidualReport rep;
  rep.name = "yamabe_plane";
  for (const auto& x : points) {
    const double vx = v(x);
    if (std::abs(vx) < yamabe_zero_guard) continue;
    const double lhs = log_laplacian_point(v, x, cfg).value;
    const double rhs = (4.0 / N) * vx * std::log(std::abs(vx)) + mu * vx;
    rep.add(x.x, lhs - rhs);
  }
  rep.finalize(tol);
  return rep;
}

/// Double-route check: the (Y1) residual of u pushed through iota must equal
/// the (Y2) residual of iota(u) at corresponding points, solution or not.
inline ResidualReport equivalence_check(const SphereField& u, double mu,
                                        const std::vector<EuclideanPoint>& points,
                                        const OperatorConfig& cfg = {}, double tol = 1e-5) {
  const int N = u.dim;
  const PlaneField v = iota_push(u);
  ResidualReport rep;
  rep.name = "yamabe_equivalence";
  for (const auto& x : points) {
    const SpherePoint z = stereo_inv(x);
    const double uz = u(z);
    const double vx = v(x);
    if (std::abs(uz) < yamabe_zero_guard || std::abs(vx) < yamabe_zero_guard) continue;
    const double phi = conformal_factor(x);
    const double r1 = p_log_sphere(u, z, cfg).value -
                      (4.0 / N) * uz * std::log(std::abs(uz)) - mu * uz;
    const double r2 = log_laplacian_point(v, x, cfg).value -
                      (4.0 / N) * vx * std::log(std::abs(vx)) - mu * vx;
    rep.add(x.x, std::pow(phi, 0.5 * N) * r1 - r2);
  }
  rep.finalize(tol);
  return rep;
}

}  // namespace logconf

#endif  // LOGCONF_YAMABE_HPP
