#ifndef LOGCONF_HARMONICS_HPP
#define LOGCONF_HARMONICS_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "logconf/constants.hpp"
#include "logconf/geometry.hpp"
#include "logconf/specfun.hpp"

// Zonal spherical harmonics via the Gegenbauer three-term recurrence,
// Laplace-Beltrami eigenvalues b_i = i(i+N-1) with their multiplicities,
// and the eigenvalue symbols of the conformal operators.

namespace logconf {

/// Gegenbauer polynomial C_i^{alpha}(t) by the three-term recurrence.
inline double gegenbauer(int i, double alpha, double t) {
  if (i == 0) return 1.0;
  double prev = 1.0;
  double cur = 2.0 * alpha * t;
  for (int k = 2; k <= i; ++k) {
    const double next = (2.0 * t * (k + alpha - 1.0) * cur - (k + 2.0 * alpha - 2.0) * prev) / k;
    prev = cur;
    cur = next;
  }
  return cur;
}

/// Zonal harmonic of degree i on S^N with pole p: a polynomial in t = z.p.
/// For N = 1 the Gegenbauer parameter degenerates and cos(i theta) is used.
struct ZonalHarmonic {
  int degree = 0;
  int dim = 0;  // N
  SpherePoint pole;

  double operator()(const SpherePoint& z) const {
    const double t = std::clamp(dot(z.z, pole.z), -1.0, 1.0);
    if (dim == 1) return std::cos(degree * std::acos(t));
    return gegenbauer(degree, 0.5 * (dim - 1), t);
  }

  SphereField as_field() const {
    SphereField f;
    f.dim = dim;
    f.smoothness = Smoothness::Smooth;
    f.eval = [h = *this](const SpherePoint& z) { return h(z); };
    return f;
  }
};

inline ZonalHarmonic zonal_harmonic(int N, int degree, SpherePoint pole) {
  if (degree < 0) throw std::domain_error("zonal_harmonic: degree must be >= 0");
  return ZonalHarmonic{degree, N, std::move(pole)};
}

inline ZonalHarmonic zonal_harmonic(int N, int degree) {
  return zonal_harmonic(N, degree, north_pole(N));
}

inline std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

struct EigenvalueRecord {
  int degree;
  double b;                  // Laplace-Beltrami eigenvalue i(i+N-1)
  std::int64_t multiplicity;
  double phi_log;            // symbol of the conformal logarithmic operator
};

/// Symbol phi_N(lambda) = 2 psi( sqrt((N-1)^2/4 + lambda) + 1/2 ).
inline double phi_log_symbol(int N, double lambda) {
  if (lambda < 0.0) throw std::domain_error("phi_log_symbol: lambda must be >= 0");
  const double half_nm1 = 0.5 * (N - 1);
  return 2.0 * digamma(std::sqrt(half_nm1 * half_nm1 + lambda) + 0.5);
}

/// Fractional symbol phi_{N,s}(lambda); requires s in (0, 1/2).
inline double phi_s_symbol(int N, double s, double lambda) {
  if (lambda < 0.0) throw std::domain_error("phi_s_symbol: lambda must be >= 0");
  if (!(s > 0.0 && s < 0.5)) throw std::domain_error("phi_s_symbol: s must lie in (0, 1/2)");
  const double half_nm1 = 0.5 * (N - 1);
  const double root = std::sqrt(half_nm1 * half_nm1 + lambda);
  return std::exp(log_gamma(0.5 + s + root) - log_gamma(0.5 - s + root));
}

inline EigenvalueRecord lb_eigenvalue(int N, int i) {
  if (i < 0) throw std::domain_error("lb_eigenvalue: degree must be >= 0");
  EigenvalueRecord rec{};
  rec.degree = i;
  rec.b = static_cast<double>(i) * (i + N - 1);
  if (i == 0) {
    rec.multiplicity = 1;
  } else if (i == 1) {
    rec.multiplicity = N + 1;
  } else {
    rec.multiplicity = binomial(N + i, N) - binomial(N + i - 2, N);
  }
  rec.phi_log = phi_log_symbol(N, rec.b);
  return rec;
}

}  // namespace logconf

#endif  // LOGCONF_HARMONICS_HPP
