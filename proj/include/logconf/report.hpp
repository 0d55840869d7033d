#ifndef LOGCONF_REPORT_HPP
#define LOGCONF_REPORT_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

// Residual/verification report types shared by the operator suites and the
// CLI, plus the seeded counter-based point generator used to make every
// report reproducible across platforms.

namespace logconf {

struct PointResidual {
  std::vector<double> point;
  double residual = 0.0;
};

struct ResidualReport {
  std::string name;
  std::vector<PointResidual> points;
  double max_abs = 0.0;
  double tolerance = 0.0;
  bool pass = false;

  void add(std::vector<double> point, double residual) {
    points.push_back({std::move(point), residual});
    max_abs = std::max(max_abs, std::abs(residual));
  }
  void finalize(double tol) {
    tolerance = tol;
    pass = max_abs <= tol;
  }
};

/// 17-significant-digit, locale-independent number formatting.
inline std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// splitmix64: a splittable counter-based generator; identical streams on
// every platform for a given (seed, counter).
class SeededGenerator {
 public:
  explicit SeededGenerator(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0,1).
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller on two uniforms.
  double next_normal() {
    double u1 = next_double();
    while (u1 <= 0.0) u1 = next_double();
    const double u2 = next_double();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

 private:
  std::uint64_t state_;
};

/// Seeded quasi-uniform points on S^N (normalized Gaussians).
inline std::vector<std::vector<double>> seeded_sphere_points(int N, int count,
                                                             std::uint64_t seed) {
  SeededGenerator gen(seed);
  std::vector<std::vector<double>> pts;
  pts.reserve(count);
  while (static_cast<int>(pts.size()) < count) {
    std::vector<double> v(N + 1);
    double r2 = 0.0;
    for (double& c : v) {
      c = gen.next_normal();
      r2 += c * c;
    }
    if (r2 < 1e-12) continue;
    const double r = std::sqrt(r2);
    for (double& c : v) c /= r;
    // Stay away from the south pole so stereographic charts remain usable.
    if (1.0 + v.back() < 1e-3) continue;
    pts.push_back(std::move(v));
  }
  return pts;
}

/// Seeded points in the ball of radius `radius` in R^N.
inline std::vector<std::vector<double>> seeded_plane_points(int N, int count, double radius,
                                                            std::uint64_t seed) {
  SeededGenerator gen(seed ^ 0x5bf03635ULL);
  std::vector<std::vector<double>> pts;
  pts.reserve(count);
  while (static_cast<int>(pts.size()) < count) {
    std::vector<double> v(N);
    double r2 = 0.0;
    for (double& c : v) {
      c = 2.0 * gen.next_double() - 1.0;
      r2 += c * c;
    }
    if (r2 > 1.0) continue;
    for (double& c : v) c *= radius;
    pts.push_back(std::move(v));
  }
  return pts;
}

}  // namespace logconf

#endif  // LOGCONF_REPORT_HPP
