#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "logconf/corpus.hpp"
#include "logconf/report.hpp"
#include "logconf/yamabe.hpp"

using namespace logconf;

namespace {

std::vector<SpherePoint> sample_sphere(int N, int count, std::uint64_t seed) {
  std::vector<SpherePoint> pts;
  for (auto& c : seeded_sphere_points(N, count, seed)) {
    pts.push_back(SpherePoint::normalized(std::move(c)));
  }
  return pts;
}

std::vector<EuclideanPoint> sample_plane(int N, int count, double radius,
                                         std::uint64_t seed) {
  std::vector<EuclideanPoint> pts;
  for (auto& c : seeded_plane_points(N, count, radius, seed)) {
    pts.push_back(EuclideanPoint(std::move(c)));
  }
  return pts;
}

}  // namespace

TEST_CASE("constant solutions on the sphere") {
  // u = exp((N/4)(A_N - mu)) solves the sphere equation for every mu.
  for (int N : {1, 2, 3}) {
    for (double mu : {0.0, 0.7, log_constants(N).A_N}) {
      const double c = std::exp(0.25 * N * (log_constants(N).A_N - mu));
      SphereField u;
      u.dim = N;
      u.smoothness = Smoothness::Smooth;
      u.eval = [c](const SpherePoint&) { return c; };
      const auto rep = residual_y1(u, mu, sample_sphere(N, 6, 2), {}, 1e-8);
      CHECK(rep.pass);
    }
  }
}

TEST_CASE("optimizer family solves the sphere equation with mu = A_N") {
  for (int N : {1, 2}) {
    for (double t : {0.0, 0.3, 0.6}) {
      Coords theta(N + 1, 0.0);
      theta[0] = t;
      const SphereField u = frank_field(FrankParams{theta}, N);
      const auto rep =
          residual_y1(u, log_constants(N).A_N, sample_sphere(N, 8, 4), {}, 1e-5);
      CHECK(rep.pass);
    }
  }
}

TEST_CASE("bubbles solve the plane equation") {
  for (int N : {1, 2}) {
    for (double mu : {0.0, 0.5}) {
      BubbleParams p;
      p.t = 1.3;
      p.a = Coords(N, 0.0);
      p.a[0] = 0.4;
      p.mu = mu;
      const PlaneField v = bubble_field(p, N);
      auto pts = sample_plane(N, 8, 5.0, 6);
      const auto rep = residual_y2(v, mu, pts, {}, 1e-5);
      CHECK(rep.pass);
    }
  }
}

TEST_CASE("Chen-Zhou solution is the mu = 0 bubble with the gamma_N prefactor") {
  const int N = 2;
  const PlaneField v = chen_zhou_field(N, 0.8);
  const auto k = log_constants(N);
  const EuclideanPoint x(Coords{0.3, -0.2});
  const double d2 = norm2(Coords{0.3, -0.2});
  const double want = k.gamma_N * std::pow(2.0 * 0.8 / (0.64 + d2), 0.5 * N);
  CHECK(v(x) == doctest::Approx(want).epsilon(1e-13));
  const auto rep = residual_y2(v, 0.0, sample_plane(N, 6, 3.0, 8), {}, 1e-5);
  CHECK(rep.pass);
}

TEST_CASE("bubble scaling: shifting mu rescales the solution exactly") {
  // v_mu = e^{-(N/4) mu} v_0, so v_mu / v_0 = e^{-(N/4) mu} pointwise.
  const int N = 2;
  const double mu = 0.6;
  const PlaneField v0 = bubble_field(BubbleParams{1.0, Coords(N, 0.0), 0.0}, N);
  const PlaneField vmu = bubble_field(BubbleParams{1.0, Coords(N, 0.0), mu}, N);
  const double K = std::exp(0.25 * N * mu);
  for (const auto& x : sample_plane(N, 10, 4.0, 10)) {
    CHECK(std::abs(v0(x) - K * vmu(x)) < 1e-12 * std::abs(v0(x)));
  }
}

TEST_CASE("parameter maps between theta and (center, scale) are inverse") {
  const int N = 2;
  for (double t : {0.1, 0.45}) {
    Coords theta{t, -0.2, 0.3};
    const auto [a, scale] = bubble_params_from_theta(theta);
    const Coords back = theta_from_bubble_params(a, scale);
    for (int i = 0; i <= N; ++i) CHECK(std::abs(back[i] - theta[i]) < 1e-13);
  }
  // round trip starting from (a, t)
  Coords a{0.7, -1.1};
  const double scale = 0.55;
  const Coords theta = theta_from_bubble_params(a, scale);
  CHECK(norm(theta) < 1.0);
  const auto [a2, t2] = bubble_params_from_theta(theta);
  CHECK(std::abs(t2 - scale) < 1e-13);
  for (int i = 0; i < N; ++i) CHECK(std::abs(a2[i] - a[i]) < 1e-13);
}

TEST_CASE("pushing the optimizer through iota gives the matching bubble") {
  const int N = 1;
  Coords theta{0.3, 0.2};
  const SphereField u = frank_field(FrankParams{theta}, N);
  const PlaneField v = iota_push(u);
  const auto [a, t] = bubble_params_from_theta(theta);
  const PlaneField w = bubble_field(BubbleParams{t, a, log_constants(N).A_N}, N);
  for (const auto& x : sample_plane(N, 12, 5.0, 14)) {
    CHECK(std::abs(v(x) - w(x)) < 1e-12 * std::max(1.0, std::abs(v(x))));
  }
}

TEST_CASE("residual equivalence between the two sides holds for non-solutions") {
  const int N = 1;
  SphereField u;
  u.dim = N;
  u.smoothness = Smoothness::Smooth;
  const auto h = zonal_harmonic(N, 2);
  u.eval = [&](const SpherePoint& z) { return 1.5 + 0.4 * h(z); };
  const auto rep = equivalence_check(u, 0.3, sample_plane(N, 8, 3.0, 19), {}, 1e-4);
  CHECK(rep.pass);
}

TEST_CASE("residuals detect non-solutions") {
  const int N = 1;
  // a perturbed optimizer is not a solution: residual clearly above tolerance
  SphereField u;
  u.dim = N;
  u.smoothness = Smoothness::Smooth;
  const auto h = zonal_harmonic(N, 2);
  u.eval = [&](const SpherePoint& z) { return 1.0 + 0.2 * h(z); };
  const auto rep =
      residual_y1(u, log_constants(N).A_N, sample_sphere(N, 8, 23), {}, 1e-5);
  CHECK_FALSE(rep.pass);
  CHECK(rep.max_abs > 1e-2);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS(bubble_field(BubbleParams{0.0, Coords{0.0}, 0.0}, 1));
  CHECK_THROWS(bubble_field(BubbleParams{1.0, Coords{0.0, 0.0}, 0.0}, 1));
  CHECK_THROWS(frank_field(FrankParams{Coords{1.0, 0.0}}, 1));
  CHECK_THROWS(frank_field(FrankParams{Coords{0.5}}, 1));
  CHECK_THROWS(theta_from_bubble_params(Coords{0.0}, 0.0));
}
