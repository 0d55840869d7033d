#ifndef LOGCONF_FORMS_HPP
#define LOGCONF_FORMS_HPP

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "logconf/constants.hpp"
#include "logconf/geometry.hpp"
#include "logconf/operators.hpp"
#include "logconf/quadrature.hpp"
#include "logconf/specfun.hpp"

// Quadratic forms and norms: the bilinear form E_L of the logarithmic
// Laplacian (operator pairing + direct double-integral cross check), the
// sphere norm, the two plane norms, the Pitt and Beckner inequality margins,
// and the A2 weight profile.

namespace logconf {

struct FormValue {
  std::string name;
  double value = 0.0;
  std::string method;  // "pairing" or "direct"
  double error_estimate = 0.0;
};

struct NormReport {
  std::string item;
  double h_sphere_norm = 0.0;
  double d_norm = 0.0;
  double dlog_norm = 0.0;
  double kappa = 0.0;
};

namespace detail {

// Fill in the dimension-dependent angular default so refinement can scale it.
inline OperatorConfig resolve(OperatorConfig cfg, int N) {
  if (cfg.angular <= 0) cfg.angular = (N == 2 ? 48 : 20);
  return cfg;
}

inline OperatorConfig bump(OperatorConfig cfg) {
  cfg.panels += 4;
  cfg.pts_per_panel += 4;
  cfg.angular = static_cast<int>(std::ceil(1.4 * cfg.angular));
  return cfg;
}

// Evaluates f at the base rule and, when cfg.adaptive, once more at a bumped
// rule; the difference serves as the error estimate. Nested form integrals
// are too costly for a full refinement loop.
template <typename F>
double with_estimate(F&& f, OperatorConfig cfg, int N, double* err) {
  cfg = resolve(cfg, N);
  const bool adaptive = cfg.adaptive;
  cfg.adaptive = false;
  const double base = f(cfg);
  if (!adaptive) {
    if (err) *err = 0.0;
    return base;
  }
  const double fine = f(bump(cfg));
  if (err) *err = std::abs(fine - base);
  return fine;
}

// integral over B_1(x) of (v1(x)-v1(y))(v2(x)-v2(y)) / |x-y|^N dy.
inline double ball_product_raw(const PlaneField& v1, const PlaneField& v2,
                               const EuclideanPoint& x, const RadialAngularRule& rule) {
  const double a1 = v1(x), a2 = v2(x);
  double total = 0.0;
  for (const auto& rn : rule.radial) {
    double slice = 0.0;
    for (const auto& a : rule.angular.nodes) {
      const EuclideanPoint y = offset_point(x, a.first, rn.x);
      slice += a.second * (a1 - v1(y)) * (a2 - v2(y));
    }
    total += rn.w * slice / rn.x;
  }
  return total;
}

// Symmetrized double integral over |x-y| >= 1 of v1(x) v2(y) / |x-y|^N
// at a fixed rule (no c_N factor here).
inline double double_tail_product_raw(const PlaneField& v1, const PlaneField& v2,
                                      const RadialAngularRule& rule) {
  auto one_order = [&](const PlaneField& a, const PlaneField& b) {
    PlaneField outer;
    outer.dim = rule.dim;
    outer.decay = a.decay;
    outer.eval = [&](const EuclideanPoint& x) { return a(x) * tail_raw(b, x, rule); };
    return integrate_plane_raw(outer, rule);
  };
  return 0.5 * (one_order(v1, v2) + one_order(v2, v1));
}

inline PlaneField plane_integrand(int N, double decay,
                                  std::function<double(const EuclideanPoint&)> eval) {
  PlaneField f;
  f.dim = N;
  f.decay = decay;
  f.smoothness = Smoothness::Smooth;
  f.eval = std::move(eval);
  return f;
}

}  // namespace detail

/// E_L(v1, v2) by the operator pairing: integral of v2 * (L v1).
inline FormValue form_EL_pairing(const PlaneField& v1, const PlaneField& v2,
                                 const OperatorConfig& cfg = {}) {
  const int N = v1.dim;
  if (N != v2.dim) throw std::domain_error("form_EL_pairing: dimension mismatch");
  FormValue out;
  out.name = "E_L";
  out.method = "pairing";
  out.value = detail::with_estimate(
      [&](const OperatorConfig& c) {
        auto f = detail::plane_integrand(N, v1.decay + v2.decay, [&](const EuclideanPoint& x) {
          return v2(x) * log_laplacian_point(v1, x, c).value;
        });
        return integrate_plane_raw(f, c.plane_rule(N));
      },
      cfg, N, &out.error_estimate);
  return out;
}

/// E(v1, v2): the |x-y| < 1 part of the form, (c_N/2) double integral of
/// (v1(x)-v1(y))(v2(x)-v2(y)) / |x-y|^N.
inline FormValue form_E(const PlaneField& v1, const PlaneField& v2,
                        const OperatorConfig& cfg = {}) {
  const int N = v1.dim;
  const double cN = log_constants(N).c_N;
  FormValue out;
  out.name = "E";
  out.method = "direct";
  out.value = detail::with_estimate(
      [&](const OperatorConfig& c) {
        const RadialAngularRule rule = c.plane_rule(N);
        auto f = detail::plane_integrand(N, v1.decay + v2.decay, [&](const EuclideanPoint& x) {
          return detail::ball_product_raw(v1, v2, x, rule);
        });
        return 0.5 * cN * integrate_plane_raw(f, rule);
      },
      cfg, N, &out.error_estimate);
  return out;
}

/// E_L(v1, v2) by the direct tensor-quadrature route:
/// E - c_N (double tail) + rho_N * L2 pairing. The 2N-dimensional integrals
/// make this the expensive cross check; intended for N <= 2.
inline FormValue form_EL_direct(const PlaneField& v1, const PlaneField& v2,
                                const OperatorConfig& cfg = {}) {
  const int N = v1.dim;
  if (N > 2) throw std::domain_error("form_EL_direct: cross check supported for N <= 2 only");
  const LogConstants k = log_constants(N);
  FormValue out;
  out.name = "E_L";
  out.method = "direct";
  out.value = detail::with_estimate(
      [&](const OperatorConfig& c) {
        const RadialAngularRule rule = c.plane_rule(N);
        auto near = detail::plane_integrand(N, v1.decay + v2.decay, [&](const EuclideanPoint& x) {
          return detail::ball_product_raw(v1, v2, x, rule);
        });
        const double e_part = 0.5 * k.c_N * integrate_plane_raw(near, rule);
        const double far_part = k.c_N * detail::double_tail_product_raw(v1, v2, rule);
        auto prod = detail::plane_integrand(N, v1.decay + v2.decay, [&](const EuclideanPoint& x) {
          return v1(x) * v2(x);
        });
        const double l2_part = integrate_plane_raw(prod, rule);
        return e_part - far_part + k.rho_N * l2_part;
      },
      cfg, N, &out.error_estimate);
  return out;
}

/// Sphere norm: ( int u P^log u dV + (kappa - A_N) int u^2 dV )^{1/2}.
inline double norm_h_sphere(const SphereField& u, const OperatorConfig& cfg = {}) {
  const int N = u.dim;
  const LogConstants k = log_constants(N);
  double err = 0.0;
  const double sq = detail::with_estimate(
      [&](const OperatorConfig& c) {
        const SphereRule rule = c.sphere_rule(N);
        double pairing = 0.0, l2 = 0.0;
        for (const auto& p : rule.polar) {
          for (const auto& a : rule.angular.nodes) {
            const double w = p.w * a.second;
            const SpherePoint z = rule.point(p.x, a.first);
            const double uz = u(z);
            pairing += w * uz * p_log_sphere(u, z, c).value;
            l2 += w * uz * uz;
          }
        }
        return pairing + (k.kappa - k.A_N) * l2;
      },
      cfg, N, &err);
  if (sq < -1e-8) throw std::domain_error("norm_h_sphere: negative radicand, kappa too small");
  return std::sqrt(std::max(sq, 0.0));
}

/// Plane norm ( E(v,v) + int v^2 ln(e + |x|^2) )^{1/2}.
inline double norm_dlog(const PlaneField& v, const OperatorConfig& cfg = {}) {
  const int N = v.dim;
  const double cN = log_constants(N).c_N;
  double err = 0.0;
  const double sq = detail::with_estimate(
      [&](const OperatorConfig& c) {
        const RadialAngularRule rule = c.plane_rule(N);
        auto near = detail::plane_integrand(N, 2.0 * v.decay, [&](const EuclideanPoint& x) {
          return detail::ball_product_raw(v, v, x, rule);
        });
        const double e_part = 0.5 * cN * integrate_plane_raw(near, rule);
        auto weighted = detail::plane_integrand(N, 2.0 * v.decay, [&](const EuclideanPoint& x) {
          const double vx = v(x);
          return vx * vx * std::log(M_E + norm2(x.x));
        });
        return e_part + integrate_plane_raw(weighted, rule);
      },
      cfg, N, &err);
  if (sq < 0.0) throw QuadratureError("norm_dlog: negative radicand");
  return std::sqrt(sq);
}

/// Isometric plane norm: ( E_L(v,v) + int v^2 (kappa - A_N + ln phi^{-2}) )^{1/2},
/// the weight of the inner-product formula; it is the assembly consistent
/// with norm_h_sphere under iota.
inline double norm_d(const PlaneField& v, const OperatorConfig& cfg = {}) {
  const int N = v.dim;
  const LogConstants k = log_constants(N);
  double err = 0.0;
  const double sq = detail::with_estimate(
      [&](const OperatorConfig& c) {
        auto f = detail::plane_integrand(N, 2.0 * v.decay, [&](const EuclideanPoint& x) {
          const double vx = v(x);
          const double lnphi = std::log(conformal_factor(x));
          return vx * (log_laplacian_point(v, x, c).value +
                       vx * (k.kappa - k.A_N - 2.0 * lnphi));
        });
        return integrate_plane_raw(f, c.plane_rule(N));
      },
      cfg, N, &err);
  if (sq < -1e-8) throw std::domain_error("norm_d: negative radicand beyond tolerance");
  return std::sqrt(std::max(sq, 0.0));
}

/// D-inner-product, the bilinear form polarizing norm_d.
inline double d_inner(const PlaneField& v1, const PlaneField& v2,
                      const OperatorConfig& cfg = {}) {
  const int N = v1.dim;
  const LogConstants k = log_constants(N);
  double err = 0.0;
  return detail::with_estimate(
      [&](const OperatorConfig& c) {
        auto f = detail::plane_integrand(N, v1.decay + v2.decay, [&](const EuclideanPoint& x) {
          const double a = v1(x), b = v2(x);
          const double lnphi = std::log(conformal_factor(x));
          return b * log_laplacian_point(v1, x, c).value +
                 a * b * (k.kappa - k.A_N - 2.0 * lnphi);
        });
        return integrate_plane_raw(f, c.plane_rule(N));
      },
      cfg, N, &err);
}

struct PittResult {
  double lhs = 0.0;        // E_L(v,v) + int ln(|x|^2) v^2
  double a_N = 0.0;        // sharp constant 2 psi(N/4) + 2 ln 2
  double l2_sq = 0.0;
  double d_norm_sq = 0.0;  // E_L(v,v) + int v^2 (kappa - A_N + ln phi^{-2})
  double margin = 0.0;     // lhs - a_N * l2_sq
  bool pass = false;
};

/// Pitt inequality margin; pass when margin >= -1e-6. All weighted integrals
/// share one sweep, so the D-norm comes out for free.
inline PittResult pitt_check(const PlaneField& v, const OperatorConfig& cfg = {}) {
  const int N = v.dim;
  const LogConstants k = log_constants(N);
  struct Sums {
    double pairing = 0.0, logw = 0.0, l2 = 0.0, phiw = 0.0;
  };
  const OperatorConfig rc = detail::resolve(cfg, N);
  auto sweep = [&](OperatorConfig c) {
    c.adaptive = false;
    const RadialAngularRule rule = c.plane_rule(N);
    const EuclideanPoint origin{Coords(N, 0.0)};
    Sums s;
    auto accum = [&](const EuclideanPoint& x, double w) {
      const double vx = v(x);
      const double lv = log_laplacian_point(v, x, c).value;
      const double r2 = norm2(x.x);
      s.pairing += w * vx * lv;
      // ln(|x|^2) is integrable at 0; the radial rule is graded there.
      s.logw += w * vx * vx * (r2 > 0.0 ? std::log(r2) : 0.0);
      s.l2 += w * vx * vx;
      s.phiw += w * vx * vx * 2.0 * std::log(0.5 * (1.0 + r2));  // ln phi^{-2}
    };
    for (const auto& rn : rule.radial) {
      for (const auto& a : rule.angular.nodes) {
        accum(detail::offset_point(origin, a.first, rn.x),
              rn.w * a.second * std::pow(rn.x, N - 1));
      }
    }
    for (const auto& tn : rule.tail) {
      for (const auto& a : rule.angular.nodes) {
        accum(detail::offset_point(origin, a.first, 1.0 / tn.x),
              tn.w * a.second * std::pow(tn.x, -(N + 1)));
      }
    }
    return s;
  };
  const Sums s = sweep(rc.adaptive ? detail::bump(rc) : rc);
  PittResult out;
  out.a_N = k.a_N;
  out.l2_sq = s.l2;
  out.lhs = s.pairing + s.logw;
  out.d_norm_sq = s.pairing + s.phiw + (k.kappa - k.A_N) * s.l2;
  out.margin = out.lhs - out.a_N * out.l2_sq;
  out.pass = out.margin >= -1e-6;
  return out;
}

struct BecknerResult {
  double lhs = 0.0;           // double integral of (u(z)-u(zeta))^2 / |z-zeta|^N
  double rhs = 0.0;           // C_N * entropy term
  double margin = 0.0;        // lhs - rhs
  double relative_gap = 0.0;  // |margin| / max(|lhs|, |rhs|, eps)
  bool pass = false;
};

/// Beckner logarithmic Sobolev inequality margin; pass when margin >= -1e-6.
inline BecknerResult beckner_check(const SphereField& u, const OperatorConfig& cfg = {}) {
  const int N = u.dim;
  const LogConstants k = log_constants(N);
  const double surface = sphere_surface(N);
  BecknerResult out;
  double err = 0.0;
  out.lhs = detail::with_estimate(
      [&](const OperatorConfig& c) {
        const SphereRule rule = c.sphere_rule(N);
        double total = 0.0;
        for (const auto& p : rule.polar) {
          for (const auto& a : rule.angular.nodes) {
            const SpherePoint z = rule.point(p.x, a.first);
            const PoleRotation R(z);
            const double inner = detail::sphere_kernel_integral_raw(
                u, u(z), R, N, 0.0, rule,
                [](double lhs_v, double rhs_v) {
                  const double d = lhs_v - rhs_v;
                  return d * d;
                });
            total += p.w * a.second * inner;
          }
        }
        return total;
      },
      cfg, N, &err);
  const OperatorConfig rc = detail::resolve(cfg, N);
  const SphereRule rule = rc.sphere_rule(N);
  const double l2 = rule.integrate_raw([&](double theta, const Coords& omega) {
    const double uz = u(rule.point(theta, omega));
    return uz * uz;
  });
  if (!(l2 > 0.0)) throw std::domain_error("beckner_check: field is identically zero");
  const double entropy = rule.integrate_raw([&](double theta, const Coords& omega) {
    const double uz = u(rule.point(theta, omega));
    const double sq = uz * uz;
    if (sq < 1e-300) return 0.0;  // x ln x -> 0
    return sq * std::log(sq * surface / l2);
  });
  out.rhs = k.C_N_frank * entropy;
  out.margin = out.lhs - out.rhs;
  // Constants make both sides vanish; report the absolute gap there instead
  // of a 0/0 ratio.
  const double scale = std::max(std::abs(out.lhs), std::abs(out.rhs));
  out.relative_gap = scale < 1e-8 ? std::abs(out.margin) : std::abs(out.margin) / scale;
  out.pass = out.margin >= -1e-6;
  return out;
}

struct A2Row {
  double r = 0.0;
  double H = 0.0;
  double NH = 0.0;
};

/// Muckenhoupt A2 profile of the weight ln(e + t^2):
/// H(r) = (r^{-N} int_0^r t^{N-1} ln(e+t^2) dt)(r^{-N} int_0^r t^{N-1}/ln(e+t^2) dt).
inline std::vector<A2Row> a2_profile(int N, const std::vector<double>& r_grid,
                                     int panels = 16, int pts = 16) {
  check_dimension(N);
  std::vector<A2Row> rows;
  rows.reserve(r_grid.size());
  for (double r : r_grid) {
    if (!(r > 0.0)) throw std::domain_error("a2_profile: grid values must be positive");
    const auto rule = graded_rule(0.0, r, panels, pts, 0.5);
    double up = 0.0, down = 0.0;
    for (const auto& nd : rule) {
      const double t = nd.x;
      const double w = std::log(M_E + t * t);
      const double tp = std::pow(t, N - 1);
      up += nd.w * tp * w;
      down += nd.w * tp / w;
    }
    const double rn = std::pow(r, -N);
    A2Row row;
    row.r = r;
    row.H = (rn * up) * (rn * down);
    row.NH = N * row.H;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace logconf

#endif  // LOGCONF_FORMS_HPP
