#ifndef LOGCONF_QUADRATURE_HPP
#define LOGCONF_QUADRATURE_HPP

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "logconf/constants.hpp"
#include "logconf/geometry.hpp"

// Singularity-adapted numerical integration: pole-graded rules on S^N,
// ball+tail rules on R^N (the tail compactified by r = 1/t), and the
// tensor rule for the double tail integral. Supported operator dimensions
// are N in {1,2,3}; the cross-section rules on S^{N-1} are the two-point
// rule on S^0, the trapezoid on S^1, and Gauss x trapezoid on S^2.

namespace logconf {

struct QuadratureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Node1D {
  double x;
  double w;
};

/// Gauss-Legendre nodes and weights on [-1,1], cached per order.
inline const std::vector<Node1D>& gauss_legendre(int n) {
  static std::map<int, std::vector<Node1D>> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  std::vector<Node1D> nodes(n);
  for (int i = 0; i < n; ++i) {
    // Newton iteration from the Chebyshev estimate.
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it2 = 0; it2 < 100; ++it2) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[i].x = x;
    nodes[i].w = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return cache.emplace(n, std::move(nodes)).first->second;
}

/// Composite Gauss-Legendre rule on (a,b) with `panels` panels graded
/// geometrically toward a (ratio in (0,1); ratio 1 means uniform panels).
inline std::vector<Node1D> graded_rule(double a, double b, int panels, int pts_per_panel,
                                       double ratio) {
  std::vector<double> brk(panels + 1);
  brk[0] = a;
  brk[panels] = b;
  if (ratio < 1.0) {
    double len = b - a;
    for (int k = 1; k < panels; ++k) {
      len *= ratio;
      brk[panels - k] = a + len;
    }
  } else {
    for (int k = 1; k < panels; ++k) brk[k] = a + (b - a) * k / panels;
  }
  const auto& gl = gauss_legendre(pts_per_panel);
  std::vector<Node1D> out;
  out.reserve(static_cast<std::size_t>(panels) * pts_per_panel);
  for (int k = 0; k < panels; ++k) {
    const double lo = brk[k], hi = brk[k + 1];
    const double mid = 0.5 * (lo + hi), halfw = 0.5 * (hi - lo);
    for (const auto& nd : gl) {
      out.push_back({mid + halfw * nd.x, halfw * nd.w});
    }
  }
  return out;
}

/// Quadrature rule on the cross-section sphere S^{N-1} in R^N.
struct AngularRule {
  int dim = 0;  // N, the ambient dimension of the directions
  std::vector<std::pair<Coords, double>> nodes;

  static AngularRule make(int N, int resolution) {
    AngularRule r;
    r.dim = N;
    if (N == 1) {
      r.nodes.push_back({Coords{1.0}, 1.0});
      r.nodes.push_back({Coords{-1.0}, 1.0});
    } else if (N == 2) {
      const int m = resolution;
      for (int j = 0; j < m; ++j) {
        const double a = 2.0 * M_PI * j / m;
        r.nodes.push_back({Coords{std::cos(a), std::sin(a)}, 2.0 * M_PI / m});
      }
    } else if (N == 3) {
      const int np = resolution;
      const int na = 2 * resolution;
      const auto& gl = gauss_legendre(np);
      for (const auto& nd : gl) {
        const double ct = nd.x;
        const double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
        for (int j = 0; j < na; ++j) {
          const double a = 2.0 * M_PI * j / na;
          r.nodes.push_back({Coords{st * std::cos(a), st * std::sin(a), ct},
                             nd.w * 2.0 * M_PI / na});
        }
      }
    } else {
      throw std::domain_error("AngularRule: quadrature-backed operators support N <= 3 only");
    }
    return r;
  }
};

struct ToleranceConfig {
  double target_abs_tol = 1e-8;
  int max_refinement_level = 10;
};

/// Pole-adapted rule on S^N: polar panels graded toward theta = 0 with the
/// sin^{N-1} factor folded into the weights, tensored with a cross-section
/// rule on S^{N-1}.
struct SphereRule {
  int dim = 0;  // N
  int panels = 12;
  int pts_per_panel = 12;
  double grading = 0.5;
  int angular_resolution = 48;  // trapezoid size for N=2, polar order for N=3

  std::vector<Node1D> polar;  // theta nodes, weights include sin^{N-1}(theta)
  AngularRule angular;

  static SphereRule make(int N, int panels = 12, int pts = 12, int ang = 0,
                         double grading = 0.5) {
    SphereRule r;
    r.dim = N;
    r.panels = panels;
    r.pts_per_panel = pts;
    r.grading = grading;
    r.angular_resolution = ang > 0 ? ang : (N == 2 ? 48 : 20);
    r.rebuild();
    return r;
  }

  void rebuild() {
    polar = graded_rule(0.0, M_PI, panels, pts_per_panel, grading);
    for (auto& nd : polar) nd.w *= std::pow(std::sin(nd.x), dim - 1);
    angular = AngularRule::make(dim, angular_resolution);
  }

  SphereRule refined() const {
    SphereRule r = *this;
    r.panels += 4;
    r.pts_per_panel += 4;
    r.angular_resolution = dim == 1 ? r.angular_resolution
                                    : static_cast<int>(std::ceil(1.4 * r.angular_resolution));
    r.rebuild();
    return r;
  }

  /// Sphere point for a polar/angular node pair: (sin(theta) omega, cos(theta)).
  SpherePoint point(double theta, const Coords& omega) const {
    Coords z(dim + 1);
    const double st = std::sin(theta), ct = std::cos(theta);
    for (int i = 0; i < dim; ++i) z[i] = st * omega[i];
    z.back() = ct;
    return SpherePoint::normalized(std::move(z));
  }

  template <typename F>
  double integrate_raw(F&& f) const {
    double total = 0.0;
    for (const auto& p : polar) {
      double slice = 0.0;
      for (const auto& a : angular.nodes) {
        slice += a.second * f(p.x, a.first);
      }
      total += p.w * slice;
    }
    return total;
  }
};

/// Integrates f over S^N with refinement until two successive levels agree.
template <typename F>
inline double integrate_sphere(F&& f, SphereRule rule, const ToleranceConfig& cfg = {},
                               double* error_estimate = nullptr) {
  auto eval = [&](const SphereRule& r) {
    return r.integrate_raw([&](double theta, const Coords& omega) {
      return f(r.point(theta, omega));
    });
  };
  double prev = eval(rule);
  for (int level = 0; level < cfg.max_refinement_level; ++level) {
    rule = rule.refined();
    const double cur = eval(rule);
    const double diff = std::abs(cur - prev);
    if (diff <= cfg.target_abs_tol) {
      if (error_estimate) *error_estimate = diff;
      return cur;
    }
    prev = cur;
  }
  throw QuadratureError("integrate_sphere: no convergence within max_refinement_level");
}

/// Radial-angular rule on R^N: a graded rule on (0,1] for the unit ball and
/// a graded rule in t in (0,1) for the tail via the substitution r = 1/t.
struct RadialAngularRule {
  int dim = 0;
  int panels = 10;
  int pts_per_panel = 12;
  double grading = 0.5;
  int angular_resolution = 48;

  std::vector<Node1D> radial;  // r in (0,1)
  std::vector<Node1D> tail;    // t in (0,1), r = 1/t
  AngularRule angular;

  static RadialAngularRule make(int N, int panels = 10, int pts = 12, int ang = 0,
                                double grading = 0.5) {
    RadialAngularRule r;
    r.dim = N;
    r.panels = panels;
    r.pts_per_panel = pts;
    r.grading = grading;
    r.angular_resolution = ang > 0 ? ang : (N == 2 ? 48 : 20);
    r.rebuild();
    return r;
  }

  void rebuild() {
    radial = graded_rule(0.0, 1.0, panels, pts_per_panel, grading);
    tail = graded_rule(0.0, 1.0, panels, pts_per_panel, grading);
    angular = AngularRule::make(dim, angular_resolution);
  }

  RadialAngularRule refined() const {
    RadialAngularRule r = *this;
    r.panels += 4;
    r.pts_per_panel += 4;
    r.angular_resolution = dim == 1 ? r.angular_resolution
                                    : static_cast<int>(std::ceil(1.4 * r.angular_resolution));
    r.rebuild();
    return r;
  }
};

namespace detail {

inline EuclideanPoint offset_point(const EuclideanPoint& x, const Coords& omega, double r) {
  Coords y = x.x;
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += r * omega[i];
  return EuclideanPoint(std::move(y));
}

template <typename F>
double ball_diff_raw(F&& v, const EuclideanPoint& x, const RadialAngularRule& rule) {
  const double vx = v(x);
  double total = 0.0;
  for (const auto& rn : rule.radial) {
    double slice = 0.0;
    for (const auto& a : rule.angular.nodes) {
      slice += a.second * (vx - v(offset_point(x, a.first, rn.x)));
    }
    total += rn.w * slice / rn.x;
  }
  return total;
}

template <typename F>
double tail_raw(F&& v, const EuclideanPoint& x, const RadialAngularRule& rule) {
  const int N = rule.dim;
  const double d = norm(x.x);
  auto slice_at = [&](double r) {
    double s = 0.0;
    for (const auto& a : rule.angular.nodes) {
      s += a.second * v(offset_point(x, a.first, r));
    }
    return s;
  };
  auto sum_t = [&](const std::vector<Node1D>& nodes) {
    double s = 0.0;
    for (const auto& tn : nodes) s += tn.w * slice_at(1.0 / tn.x) / tn.x;
    return s;
  };
  if (d <= 4.0) return sum_t(rule.tail);
  // Far base point. The mass of v near the origin subtends an angular width
  // ~1/d on circles centred at x, which the uniform angular rule cannot
  // resolve, so split by distance from x with a C^infinity partition:
  // psi = 0 for |x-y| <= d/4, 1 for |x-y| >= 3d/4. The near piece stays in
  // x-centred coordinates (its circles keep |y| >= d/4, where v is angularly
  // smooth); the far piece switches to origin-centred coordinates, where the
  // partition and the kernel both vary on O(1) angular scales.
  const double lo = 0.25 * d, hi = 0.75 * d;
  auto psi = [&](double r) {
    if (r <= lo) return 0.0;
    if (r >= hi) return 1.0;
    const double u = (r - lo) / (hi - lo);
    const double fa = std::exp(-1.0 / u);
    const double fb = std::exp(-1.0 / (1.0 - u));
    return fa / (fa + fb);
  };
  double total = 0.0;
  for (const auto& rn : graded_rule(1.0, hi, rule.panels, rule.pts_per_panel, 1.0)) {
    const double w = 1.0 - psi(rn.x);
    if (w > 0.0) total += rn.w * w * slice_at(rn.x) / rn.x;
  }
  const EuclideanPoint origin(Coords(static_cast<std::size_t>(N), 0.0));
  auto far_slice = [&](double s) {
    double acc = 0.0;
    for (const auto& a : rule.angular.nodes) {
      const EuclideanPoint y = offset_point(origin, a.first, s);
      double dist2 = 0.0;
      for (int i = 0; i < N; ++i) {
        const double dd = x.x[i] - y.x[i];
        dist2 += dd * dd;
      }
      const double dist = std::sqrt(dist2);
      const double w = psi(dist);
      if (w > 0.0) acc += a.second * w * v(y) / std::pow(dist, N);
    }
    return acc;
  };
  auto far_direct = [&](const std::vector<Node1D>& nodes) {
    double acc = 0.0;
    for (const auto& sn : nodes) {
      acc += sn.w * std::pow(sn.x, N - 1) * far_slice(sn.x);
    }
    return acc;
  };
  auto far_subst = [&](const std::vector<Node1D>& nodes) {
    // s = 1/t on the unbounded blocks
    double acc = 0.0;
    for (const auto& tn : nodes) {
      acc += tn.w * far_slice(1.0 / tn.x) / std::pow(tn.x, N + 1);
    }
    return acc;
  };
  // radial blocks: [0,1], [1,d/2] and [2d,inf) via s = 1/t, and the window
  // [d/2,2d] (where the partition boundary lives) directly in s
  total += far_direct(graded_rule(0.0, 1.0, rule.panels, rule.pts_per_panel, rule.grading));
  total += far_subst(graded_rule(2.0 / d, 1.0, rule.panels, rule.pts_per_panel, rule.grading));
  total += far_direct(graded_rule(0.5 * d, 2.0 * d, rule.panels, rule.pts_per_panel, 1.0));
  total += far_subst(graded_rule(0.0, 0.5 / d, rule.panels, rule.pts_per_panel, 1.0));
  return total;
}

template <typename Eval>
double refine_to_tolerance(Eval&& eval, RadialAngularRule rule, const ToleranceConfig& cfg,
                           double* error_estimate, const char* what) {
  double prev = eval(rule);
  for (int level = 0; level < cfg.max_refinement_level; ++level) {
    rule = rule.refined();
    const double cur = eval(rule);
    const double diff = std::abs(cur - prev);
    if (diff <= cfg.target_abs_tol) {
      if (error_estimate) *error_estimate = diff;
      return cur;
    }
    prev = cur;
  }
  throw QuadratureError(std::string(what) + ": no convergence within max_refinement_level");
}

}  // namespace detail

/// c_N * integral over B_1(x) of (v(x)-v(y)) / |x-y|^N dy.
inline double integrate_ball_diff(const PlaneField& v, const EuclideanPoint& x,
                                  RadialAngularRule rule, const ToleranceConfig& cfg = {},
                                  double* error_estimate = nullptr) {
  const double cN = log_constants(rule.dim).c_N;
  return cN * detail::refine_to_tolerance(
                  [&](const RadialAngularRule& r) { return detail::ball_diff_raw(v, x, r); },
                  std::move(rule), cfg, error_estimate, "integrate_ball_diff");
}

/// c_N * integral over R^N \ B_1(x) of v(y) / |x-y|^N dy.
inline double integrate_tail(const PlaneField& v, const EuclideanPoint& x,
                             RadialAngularRule rule, const ToleranceConfig& cfg = {},
                             double* error_estimate = nullptr) {
  if (v.decay <= 0.0) {
    throw QuadratureError("integrate_tail: field with zero decay, tail integral may diverge");
  }
  const double cN = log_constants(rule.dim).c_N;
  return cN * detail::refine_to_tolerance(
                  [&](const RadialAngularRule& r) { return detail::tail_raw(v, x, r); },
                  std::move(rule), cfg, error_estimate, "integrate_tail");
}

/// Integral of f over all of R^N (unit ball + compactified tail).
/// f is any integrand with enough decay; decay metadata is taken from f.
inline double integrate_plane_raw(const PlaneField& f, const RadialAngularRule& rule) {
  const int N = rule.dim;
  const EuclideanPoint origin{Coords(N, 0.0)};
  double total = 0.0;
  for (const auto& rn : rule.radial) {
    double slice = 0.0;
    for (const auto& a : rule.angular.nodes) {
      slice += a.second * f(detail::offset_point(origin, a.first, rn.x));
    }
    total += rn.w * slice * std::pow(rn.x, N - 1);
  }
  for (const auto& tn : rule.tail) {
    const double r = 1.0 / tn.x;
    double slice = 0.0;
    for (const auto& a : rule.angular.nodes) {
      slice += a.second * f(detail::offset_point(origin, a.first, r));
    }
    total += tn.w * slice * std::pow(tn.x, -(N + 1));
  }
  return total;
}

inline double integrate_plane(const PlaneField& f, RadialAngularRule rule,
                              const ToleranceConfig& cfg = {},
                              double* error_estimate = nullptr) {
  return detail::refine_to_tolerance(
      [&](const RadialAngularRule& r) { return integrate_plane_raw(f, r); }, std::move(rule),
      cfg, error_estimate, "integrate_plane");
}

/// c_N * double integral over |x-y| >= 1 of v1(x) v2(y) / |x-y|^N.
/// Symmetrized over the two evaluation orders, so swapping arguments is exact.
inline double integrate_double_tail(const PlaneField& v1, const PlaneField& v2,
                                    RadialAngularRule rule, const ToleranceConfig& cfg = {},
                                    double* error_estimate = nullptr) {
  if (rule.dim > 3) throw std::domain_error("integrate_double_tail: N <= 3 only");
  auto one_order = [&](const PlaneField& a, const PlaneField& b, const RadialAngularRule& r) {
    const double cN = log_constants(r.dim).c_N;
    PlaneField outer;
    outer.dim = r.dim;
    outer.decay = a.decay + std::min(b.decay, static_cast<double>(r.dim));
    outer.eval = [&a, &b, &r, cN](const EuclideanPoint& x) {
      return a(x) * cN * detail::tail_raw(b, x, r);
    };
    return integrate_plane_raw(outer, r);
  };
  return detail::refine_to_tolerance(
      [&](const RadialAngularRule& r) {
        return 0.5 * (one_order(v1, v2, r) + one_order(v2, v1, r));
      },
      std::move(rule), cfg, error_estimate, "integrate_double_tail");
}

}  // namespace logconf

#endif  // LOGCONF_QUADRATURE_HPP
