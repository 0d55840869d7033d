#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "logconf/constants.hpp"

using namespace logconf;

namespace {
const double pi = 4.0 * std::atan(1.0);
}

TEST_CASE("kernel constant in low dimensions") {
  // c_1 = Gamma(1/2)/sqrt(pi) = 1
  CHECK(log_constants(1).c_N == doctest::Approx(1.0).epsilon(1e-13));
  // c_2 = 1/pi, c_3 = Gamma(3/2) pi^{-3/2} = 1/(2 pi)
  CHECK(log_constants(2).c_N == doctest::Approx(1.0 / pi).epsilon(1e-13));
  CHECK(log_constants(3).c_N == doctest::Approx(0.5 / pi).epsilon(1e-13));
}

TEST_CASE("zero-order constant A_N") {
  // A_2 = 2 psi(1) = -2 gamma
  CHECK(log_constants(2).A_N ==
        doctest::Approx(-2.0 * euler_gamma).epsilon(1e-13));
  // reference value at N = 2 (mpmath)
  CHECK(log_constants(2).A_N ==
        doctest::Approx(-1.154431329803065721213024).epsilon(1e-14));
  // A_3 = 2 psi(3/2) = 2(2 - gamma - 2 ln 2) > 0
  CHECK(log_constants(3).A_N ==
        doctest::Approx(2.0 * 0.03648997397857652055902367).epsilon(1e-12));
  CHECK(log_constants(3).A_N > 0.0);
  // monotone in N, negative at N <= 2, positive from N = 3 on
  double prev = log_constants(1).A_N;
  for (int N = 2; N <= 10; ++N) {
    const double cur = log_constants(N).A_N;
    CHECK(cur > prev);
    prev = cur;
  }
  CHECK(log_constants(1).A_N < 0.0);
  CHECK(log_constants(2).A_N < 0.0);
}

TEST_CASE("rho_N ties to A_N") {
  // rho_N = 2 ln 2 + psi(N/2) - gamma = 2 ln 2 + A_N/2 - gamma
  for (int N = 1; N <= 6; ++N) {
    const auto k = log_constants(N);
    CHECK(k.rho_N ==
          doctest::Approx(2.0 * std::log(2.0) + 0.5 * k.A_N - euler_gamma)
              .epsilon(1e-13));
  }
}

TEST_CASE("Chen-Zhou normalization gamma_N = e^{(N/4) A_N}") {
  for (int N = 1; N <= 6; ++N) {
    const auto k = log_constants(N);
    CHECK(std::abs(std::log(k.gamma_N) - 0.25 * N * k.A_N) < 1e-13);
  }
}

TEST_CASE("frank constant consistency C_N * N * c_N = 4") {
  for (int N = 1; N <= 10; ++N) {
    CHECK(frank_consistency(N) == doctest::Approx(4.0).epsilon(1e-14));
  }
}

TEST_CASE("sharp Pitt constant and kappa") {
  for (int N = 1; N <= 6; ++N) {
    const auto k = log_constants(N);
    CHECK(k.a_N ==
          doctest::Approx(2.0 * digamma(0.25 * N) + 2.0 * std::log(2.0))
              .epsilon(1e-13));
    CHECK(k.kappa ==
          doctest::Approx(std::abs(2.0 * digamma(0.25 * N)) + 1.0).epsilon(1e-13));
    CHECK(k.kappa >= 1.0);
  }
}

TEST_CASE("surface areas and ball volumes") {
  CHECK(sphere_surface(1) == doctest::Approx(2.0 * pi).epsilon(1e-13));
  CHECK(sphere_surface(2) == doctest::Approx(4.0 * pi).epsilon(1e-13));
  CHECK(sphere_surface(3) == doctest::Approx(2.0 * pi * pi).epsilon(1e-13));
  CHECK(ball_volume(1) == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(ball_volume(2) == doctest::Approx(pi).epsilon(1e-13));
  CHECK(ball_volume(3) == doctest::Approx(4.0 * pi / 3.0).epsilon(1e-13));
  // |S^{N-1}| = N |B_1| in R^N
  for (int N = 1; N <= 8; ++N) {
    CHECK(sphere_surface(N - 1) == doctest::Approx(N * ball_volume(N)).epsilon(1e-14));
  }
}

TEST_CASE("fractional constants") {
  for (int N : {1, 2, 3}) {
    for (double s : {0.05, 0.1, 0.2, 0.25}) {
      const auto f = frac_constants(N, s);
      CHECK(f.s == s);
      CHECK(f.c_Ns > 0.0);
      CHECK(f.A_Ns > 0.0);
    }
    // first-order limits: c_Ns/s -> c_N and (A_Ns-1)/s -> A_N as s -> 0,
    // with errors shrinking linearly in s
    const auto k = log_constants(N);
    auto c_err = [&](double s) {
      return std::abs(frac_constants(N, s).c_Ns / s - k.c_N);
    };
    auto a_err = [&](double s) {
      return std::abs((frac_constants(N, s).A_Ns - 1.0) / s - k.A_N);
    };
    for (double s : {0.2, 0.1, 0.05}) {
      CHECK(c_err(0.5 * s) < 0.75 * c_err(s));
      CHECK(a_err(0.5 * s) < 0.75 * a_err(s));
    }
    CHECK_THROWS(frac_constants(N, 0.0));
    CHECK_THROWS(frac_constants(N, 1.0));
    CHECK_THROWS(frac_constants(N, -0.2));
  }
}

TEST_CASE("dimension validation") {
  CHECK_THROWS(log_constants(0));
  CHECK_THROWS(log_constants(-2));
  CHECK_THROWS(log_constants(max_constants_dim + 1));
}
