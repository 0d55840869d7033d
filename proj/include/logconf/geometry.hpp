#ifndef LOGCONF_GEOMETRY_HPP
#define LOGCONF_GEOMETRY_HPP

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <vector>

// Sphere/plane point types, stereographic projection (with respect to the
// south pole), the conformal factor, the pushforward iota and its inverse,
// and Householder rotations that move a sphere point to the north pole.

namespace logconf {

using Coords = std::vector<double>;

inline double dot(const Coords& a, const Coords& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double norm2(const Coords& a) { return dot(a, a); }
inline double norm(const Coords& a) { return std::sqrt(norm2(a)); }

struct EuclideanPoint {
  Coords x;

  EuclideanPoint() = default;
  explicit EuclideanPoint(Coords c) : x(std::move(c)) {
    for (double v : x) {
      if (!std::isfinite(v)) throw std::domain_error("EuclideanPoint: non-finite entry");
    }
  }
  int dim() const { return static_cast<int>(x.size()); }
};

/// Point on S^N, stored with its N+1 ambient coordinates.
struct SpherePoint {
  Coords z;

  SpherePoint() = default;
  explicit SpherePoint(Coords c) : z(std::move(c)) {
    const double r = norm(z);
    if (std::abs(r - 1.0) > 1e-12) {
      throw std::domain_error("SpherePoint: coordinates not on the unit sphere");
    }
  }
  static SpherePoint normalized(Coords c) {
    const double r = norm(c);
    if (!(r > 0.0)) throw std::domain_error("SpherePoint: cannot normalize zero vector");
    for (double& v : c) v /= r;
    return SpherePoint(std::move(c));
  }
  int ambient_dim() const { return static_cast<int>(z.size()); }
  int sphere_dim() const { return static_cast<int>(z.size()) - 1; }
  double last() const { return z.back(); }
};

inline SpherePoint north_pole(int N) {
  Coords c(N + 1, 0.0);
  c.back() = 1.0;
  return SpherePoint(std::move(c));
}

inline SpherePoint south_pole(int N) {
  Coords c(N + 1, 0.0);
  c.back() = -1.0;
  return SpherePoint(std::move(c));
}

enum class Smoothness { Lipschitz, Smooth };

/// Scalar field on S^N. Evaluation must be deterministic and reentrant.
struct SphereField {
  int dim = 0;  // N
  std::function<double(const SpherePoint&)> eval;
  Smoothness smoothness = Smoothness::Smooth;

  double operator()(const SpherePoint& z) const { return eval(z); }
};

/// Scalar field on R^N with polynomial decay metadata:
/// |v(x)| <= C (1+|x|)^{-decay}. Infinity marks super-polynomial decay.
struct PlaneField {
  int dim = 0;  // N
  std::function<double(const EuclideanPoint&)> eval;
  double decay = 0.0;
  Smoothness smoothness = Smoothness::Smooth;

  double operator()(const EuclideanPoint& x) const { return eval(x); }
};

/// Stereographic projection sigma(z) = z' / (1 + z_{N+1}).
inline EuclideanPoint stereo(const SpherePoint& z) {
  const double d = 1.0 + z.last();
  if (d < 1e-15) {
    throw std::domain_error("stereo: undefined at the south pole");
  }
  Coords x(z.z.begin(), z.z.end() - 1);
  for (double& v : x) v /= d;
  return EuclideanPoint(std::move(x));
}

/// Inverse projection sigma^{-1}(x) = (2x, 1-|x|^2) / (1+|x|^2).
inline SpherePoint stereo_inv(const EuclideanPoint& x) {
  const double r2 = norm2(x.x);
  const double d = 1.0 + r2;
  Coords z(x.x.size() + 1);
  for (std::size_t i = 0; i < x.x.size(); ++i) z[i] = 2.0 * x.x[i] / d;
  z.back() = (1.0 - r2) / d;
  return SpherePoint::normalized(std::move(z));
}

/// Conformal factor phi(x) = 2 / (1 + |x|^2), with values in (0, 2].
inline double conformal_factor(const EuclideanPoint& x) {
  return 2.0 / (1.0 + norm2(x.x));
}

/// Pushforward iota(u)(x) = phi(x)^{N/2} u(sigma^{-1}(x)).
inline PlaneField iota_push(const SphereField& u) {
  PlaneField v;
  v.dim = u.dim;
  v.decay = static_cast<double>(u.dim);
  v.smoothness = u.smoothness;
  const int N = u.dim;
  v.eval = [u, N](const EuclideanPoint& x) {
    return std::pow(conformal_factor(x), 0.5 * N) * u(stereo_inv(x));
  };
  return v;
}

/// Inverse of iota. At points within 1e-9 of the south pole the evaluation
/// uses a clamped proxy point; the limit exists only when decay >= N.
inline SphereField iota_pull(const PlaneField& v) {
  SphereField u;
  u.dim = v.dim;
  u.smoothness = v.smoothness;
  const int N = v.dim;
  const double decay = v.decay;
  u.eval = [v, N, decay](const SpherePoint& z) {
    SpherePoint p = z;
    if (1.0 + p.last() < 1e-9) {
      if (decay < static_cast<double>(N)) {
        throw std::domain_error("iota_pull: field decay too weak, undefined at the south pole");
      }
      Coords c = p.z;
      c.back() = -(1.0 - 1e-9);
      double tang = 0.0;
      for (std::size_t i = 0; i + 1 < c.size(); ++i) tang += c[i] * c[i];
      const double want = 1.0 - c.back() * c.back();
      if (tang > 0.0) {
        const double scale = std::sqrt(want / tang);
        for (std::size_t i = 0; i + 1 < c.size(); ++i) c[i] *= scale;
      } else {
        c[0] = std::sqrt(want);
      }
      p = SpherePoint::normalized(std::move(c));
    }
    const EuclideanPoint x = stereo(p);
    return std::pow(conformal_factor(x), -0.5 * N) * v(x);
  };
  return u;
}

/// Orthogonal (Householder) map R with R z = north pole; R is symmetric,
/// so it is its own inverse.
class PoleRotation {
 public:
  explicit PoleRotation(const SpherePoint& z) : n_(z.ambient_dim()), w_(n_, 0.0) {
    Coords diff = z.z;
    diff.back() -= 1.0;
    const double len = norm(diff);
    if (len < 1e-12) {
      identity_ = true;
      return;
    }
    for (int i = 0; i < n_; ++i) w_[i] = diff[i] / len;
  }

  Coords apply(const Coords& v) const {
    if (identity_) return v;
    const double c = 2.0 * dot(w_, v);
    Coords out = v;
    for (int i = 0; i < n_; ++i) out[i] -= c * w_[i];
    return out;
  }

  SpherePoint apply(const SpherePoint& p) const {
    return SpherePoint::normalized(apply(p.z));
  }

  // Householder reflections are involutive.
  SpherePoint apply_inverse(const SpherePoint& p) const { return apply(p); }
  Coords apply_inverse(const Coords& v) const { return apply(v); }

  bool is_identity() const { return identity_; }

 private:
  int n_;
  Coords w_;
  bool identity_ = false;
};

inline PoleRotation rotate_to_pole(const SpherePoint& z) { return PoleRotation(z); }

}  // namespace logconf

#endif  // LOGCONF_GEOMETRY_HPP
