#ifndef LOGCONF_CONSTANTS_HPP
#define LOGCONF_CONSTANTS_HPP

#include <cmath>
#include <stdexcept>

#include "logconf/specfun.hpp"

// Single home for every named dimensional constant, exposed as pure
// functions of the dimension N (and the order s for the fractional family).

namespace logconf {

inline constexpr int max_constants_dim = 50;

inline void check_dimension(int N, int max_dim = max_constants_dim) {
  if (N < 1 || N > max_dim) {
    throw std::domain_error("dimension N out of supported range");
  }
}

struct LogConstants {
  double c_N;        // kernel constant pi^{-N/2} Gamma(N/2)
  double A_N;        // zero-order constant 2 psi(N/2)
  double rho_N;      // zero-order term of the plane operator: 2 ln 2 + psi(N/2) - gamma
  double a_N;        // sharp Pitt constant 2 psi(N/4) + 2 ln 2
  double gamma_N;    // Chen-Zhou normalization e^{(N/2) psi(N/2)}
  double C_N_frank;  // 4 pi^{N/2} / (N Gamma(N/2))
  double kappa;      // norm shift, fixed as |2 psi(N/4)| + 1
};

struct FracConstants {
  double s;
  double c_Ns;  // 4^s pi^{-N/2} Gamma(N/2+s) s(1-s) / Gamma(2-s)
  double A_Ns;  // Gamma(N/2+s) / Gamma(N/2-s)
};

inline LogConstants log_constants(int N) {
  check_dimension(N);
  const double half = 0.5 * N;
  const double quarter = 0.25 * N;
  LogConstants k{};
  k.c_N = std::pow(M_PI, -half) * gamma_fn(half);
  k.A_N = 2.0 * digamma(half);
  k.rho_N = 2.0 * std::log(2.0) + digamma(half) - euler_gamma;
  k.a_N = 2.0 * digamma(quarter) + 2.0 * std::log(2.0);
  k.gamma_N = std::exp(half * digamma(half));
  k.C_N_frank = 4.0 * std::pow(M_PI, half) / (N * gamma_fn(half));
  k.kappa = std::abs(2.0 * digamma(quarter)) + 1.0;
  return k;
}

inline FracConstants frac_constants(int N, double s) {
  check_dimension(N);
  if (!(s > 0.0 && s < 1.0)) {
    throw std::domain_error("frac_constants: order s must lie in (0,1)");
  }
  const double half = 0.5 * N;
  FracConstants k{};
  k.s = s;
  k.A_Ns = std::exp(log_gamma(half + s) - log_gamma(half - s));
  k.c_Ns = std::pow(4.0, s) * std::pow(M_PI, -half) * s * (1.0 - s) *
           std::exp(log_gamma(half + s) - log_gamma(2.0 - s));
  return k;
}

/// Returns C_N * N * c_N, which must equal 4 up to roundoff.
inline double frank_consistency(int N) {
  const LogConstants k = log_constants(N);
  return k.C_N_frank * N * k.c_N;
}

/// Surface measure of the unit sphere S^N in R^{N+1}.
inline double sphere_surface(int N) {
  return 2.0 * std::pow(M_PI, 0.5 * (N + 1)) / gamma_fn(0.5 * (N + 1));
}

/// Volume of the unit ball in R^N.
inline double ball_volume(int N) {
  return std::pow(M_PI, 0.5 * N) / gamma_fn(0.5 * N + 1.0);
}

}  // namespace logconf

#endif  // LOGCONF_CONSTANTS_HPP
