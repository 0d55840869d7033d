#ifndef LOGCONF_CORPUS_HPP
#define LOGCONF_CORPUS_HPP

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "logconf/geometry.hpp"
#include "logconf/harmonics.hpp"
#include "logconf/report.hpp"
#include "logconf/yamabe.hpp"

// Fixed seeded test families shared by the inequality suites and the CLI:
// iota-pushed zonal harmonics and Gaussian bumps on the plane side, zonal
// harmonics and the optimizer family on the sphere side.

namespace logconf {

struct CorpusItem {
  std::string id;
  PlaneField field;
};

struct SphereCorpusItem {
  std::string id;
  SphereField field;
};

/// phi^{N/2}, the push-forward of u == 1; the base bubble.
inline PlaneField phi_power_field(int N) {
  PlaneField v;
  v.dim = N;
  v.decay = N;
  v.smoothness = Smoothness::Smooth;
  v.eval = [N](const EuclideanPoint& x) {
    return std::pow(conformal_factor(x), 0.5 * N);
  };
  return v;
}

inline PlaneField gaussian_bump(int N, Coords center, double scale) {
  PlaneField v;
  v.dim = N;
  v.decay = std::numeric_limits<double>::infinity();
  v.smoothness = Smoothness::Smooth;
  v.eval = [center = std::move(center), scale, N](const EuclideanPoint& x) {
    double d2 = 0.0;
    for (int i = 0; i < N; ++i) {
      const double d = x.x[i] - center[i];
      d2 += d * d;
    }
    return std::exp(-d2 / (2.0 * scale * scale));
  };
  return v;
}

/// Plane corpus: iota-pushed zonal harmonics of degree 0..4 plus Gaussian
/// bumps at three seeded centers and scales.
inline std::vector<CorpusItem> plane_corpus(int N, std::uint64_t seed = 2026) {
  std::vector<CorpusItem> items;
  for (int deg = 0; deg <= 4; ++deg) {
    SphereField u = zonal_harmonic(N, deg).as_field();
    items.push_back({"iota_zonal_deg" + std::to_string(deg), iota_push(u)});
  }
  SeededGenerator gen(seed);
  for (int k = 0; k < 3; ++k) {
    Coords c(N);
    for (double& ci : c) ci = 2.0 * gen.next_double() - 1.0;
    const double scale = 0.5 + gen.next_double();
    items.push_back({"bump" + std::to_string(k), gaussian_bump(N, std::move(c), scale)});
  }
  return items;
}

/// Sphere corpus: zonal harmonics 0..4, an off-center optimizer u_theta,
/// and 1 plus a small degree-2 perturbation.
inline std::vector<SphereCorpusItem> sphere_corpus(int N) {
  std::vector<SphereCorpusItem> items;
  for (int deg = 0; deg <= 4; ++deg) {
    items.push_back({"zonal_deg" + std::to_string(deg), zonal_harmonic(N, deg).as_field()});
  }
  Coords theta(N + 1, 0.0);
  theta[0] = 0.3;
  items.push_back({"frank_theta_0.3", frank_field(FrankParams{std::move(theta)}, N)});
  SphereField pert;
  pert.dim = N;
  pert.smoothness = Smoothness::Smooth;
  pert.eval = [h = zonal_harmonic(N, 2)](const SpherePoint& z) { return 1.0 + 0.1 * h(z); };
  items.push_back({"one_plus_zonal2", pert});
  return items;
}

}  // namespace logconf

#endif  // LOGCONF_CORPUS_HPP
