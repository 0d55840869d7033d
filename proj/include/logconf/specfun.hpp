#ifndef LOGCONF_SPECFUN_HPP
#define LOGCONF_SPECFUN_HPP

#include <cmath>
#include <stdexcept>
#include <string>

// Special functions underlying the constants and eigenvalue maps:
// log-gamma, gamma, digamma and trigamma on the positive half line.
// All of them use upward recurrence to shift the argument above a
// fixed threshold followed by the Stirling-type asymptotic expansion.

namespace logconf {

inline constexpr double euler_gamma = 0.57721566490153286060651209;

namespace detail {

inline void require_positive(double x, const char* fn) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw std::domain_error(std::string(fn) + ": argument must be positive and finite, got " +
                            std::to_string(x));
  }
}

}  // namespace detail

/// ln Gamma(x) for x > 0.
inline double log_gamma(double x) {
  detail::require_positive(x, "log_gamma");
  // Shift x above 12, where 7 Bernoulli terms reach full double precision.
  double shift = 0.0;
  while (x < 12.0) {
    shift -= std::log(x);
    x += 1.0;
  }
  // Stirling series: coefficients B_{2n} / (2n(2n-1)).
  static constexpr double c[] = {
      1.0 / 12.0,     -1.0 / 360.0,      1.0 / 1260.0, -1.0 / 1680.0,
      1.0 / 1188.0,   -691.0 / 360360.0, 1.0 / 156.0,
  };
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double series = 0.0;
  double p = inv;
  for (double ck : c) {
    series += ck * p;
    p *= inv2;
  }
  constexpr double half_log_two_pi = 0.91893853320467274178032974;
  return (x - 0.5) * std::log(x) - x + half_log_two_pi + series + shift;
}

/// Digamma psi(x) = Gamma'(x)/Gamma(x) for x > 0.
inline double digamma(double x) {
  detail::require_positive(x, "digamma");
  double acc = 0.0;
  while (x < 10.0) {
    acc -= 1.0 / x;
    x += 1.0;
  }
  // psi(x) ~ ln x - 1/(2x) - sum B_{2n} / (2n x^{2n}).
  static constexpr double c[] = {
      1.0 / 12.0,  -1.0 / 120.0,      1.0 / 252.0, -1.0 / 240.0,
      1.0 / 132.0, -691.0 / 32760.0,  1.0 / 12.0,
  };
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double series = 0.0;
  double p = inv2;
  for (double ck : c) {
    series += ck * p;
    p *= inv2;
  }
  return acc + std::log(x) - 0.5 * inv - series;
}

/// Trigamma psi'(x) for x > 0; strictly positive.
inline double trigamma(double x) {
  detail::require_positive(x, "trigamma");
  double acc = 0.0;
  while (x < 10.0) {
    acc += 1.0 / (x * x);
    x += 1.0;
  }
  // psi'(x) ~ 1/x + 1/(2x^2) + sum B_{2n} / x^{2n+1}.
  static constexpr double c[] = {
      1.0 / 6.0,  -1.0 / 30.0,       1.0 / 42.0, -1.0 / 30.0,
      5.0 / 66.0, -691.0 / 2730.0,   7.0 / 6.0,
  };
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double series = 0.0;
  double p = inv * inv2;
  for (double ck : c) {
    series += ck * p;
    p *= inv2;
  }
  return acc + inv + 0.5 * inv2 + series;
}

/// Gamma(x) for x > 0.
inline double gamma_fn(double x) {
  return std::exp(log_gamma(x));
}

}  // namespace logconf

#endif  // LOGCONF_SPECFUN_HPP
