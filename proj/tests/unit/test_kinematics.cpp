#include <cmath>
#include <random>

#include <doctest.h>

#include "udw/errors.hpp"
#include "udw/kinematics.hpp"

using namespace udw;

TEST_CASE("closed-form inversion at a=R=1") {
  const CircularKinematics k = derive_circular(1.0, 1.0, 1.0);
  CHECK(k.speed == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
  CHECK(k.gamma == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  CHECK(k.omega == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
  CHECK(k.alpha == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("R -> 0 limit at fixed a") {
  double prev_omega = 0;
  double prev_v = 1;
  for (double r : {1e-1, 1e-2, 1e-3, 1e-4, 1e-5}) {
    const CircularKinematics k = derive_circular(1.0, r, 1.0);
    CHECK(k.speed < prev_v);       // v -> 0 monotonically
    CHECK(k.omega > prev_omega);   // omega -> infinity monotonically
    prev_v = k.speed;
    prev_omega = k.omega;
  }
  CHECK(derive_circular(1.0, 1e-5, 1.0).gamma == doctest::Approx(1.0).epsilon(1e-4));
}

TEST_CASE("nonpositive parameters are rejected") {
  CHECK_THROWS_AS(derive_circular(0.0, 1.0, 1.0), NonPositiveParameter);
  CHECK_THROWS_AS(derive_circular(1.0, -1.0, 1.0), NonPositiveParameter);
  CHECK_THROWS_AS(derive_circular(1.0, 1.0, 0.0), NonPositiveParameter);
  CHECK_THROWS_AS(derive_uniform(-2.0, 1.0), NonPositiveParameter);
  CHECK_THROWS_AS(circular_from_omega(0.9, 1.2, 0.5), NonPositiveParameter);  // v >= 1
}

TEST_CASE("alpha computed two ways agrees") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> da(0.05, 30.0), dr(0.02, 10.0);
  for (int i = 0; i < 1000; ++i) {
    const CircularKinematics k = derive_circular(da(rng), dr(rng), 0.3);
    const double alt = 1.0 / (k.omega * k.omega * k.gamma * k.gamma);
    CHECK(std::fabs(k.alpha - alt) <= 1e-12 * std::fabs(k.alpha));
  }
}

TEST_CASE("round trip a = gamma^2 v^2 / R and 0 < v < 1") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> da(1e-3, 50.0), dr(1e-3, 20.0);
  for (int i = 0; i < 10000; ++i) {
    const double a = da(rng), r = dr(rng);
    const CircularKinematics k = derive_circular(a, r, 1.0);
    CHECK(k.speed > 0.0);
    CHECK(k.speed < 1.0);
    const double back = k.gamma * k.gamma * k.speed * k.speed / k.radius;
    CHECK(std::fabs(back - a) <= 1e-12 * a);
    CHECK(std::fabs(k.gamma * k.gamma - (1.0 + a * r)) <= 1e-12 * (1.0 + a * r));
  }
}

TEST_CASE("light-cone equation is strictly increasing") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> dv(0.0, 1.0), dx(1e-6, 50.0);
  for (int i = 0; i < 10000; ++i) {
    const double v = dv(rng), x = dx(rng);
    CHECK(2 * x - v * v * std::sin(2 * x) > 0.0);
  }
}

TEST_CASE("degenerate v=0 root") {
  CHECK(light_cone_root(0.0, 2.0) == doctest::Approx(2.0).epsilon(1e-13));
}

TEST_CASE("root against a dense-scan bisection") {
  const double v = 0.9, c = 1.0;
  const double s = light_cone_root(v, c);
  auto g = [&](double x) { return x * x - v * v * std::sin(x) * std::sin(x) - c * c; };
  CHECK(std::fabs(g(s)) < 1e-12 * std::fmax(1.0, c * c));
  CHECK(s > c);  // the sin^2 term pushes the root right
  // oracle: scan then bisect on [c, c+1]
  double lo = c, hi = c + 1.0;
  const int n = 20000;
  for (int i = 0; i < n; ++i) {
    const double x0 = c + i * 1.0 / n, x1 = c + (i + 1) * 1.0 / n;
    if (g(x0) <= 0 && g(x1) > 0) {
      lo = x0;
      hi = x1;
      break;
    }
  }
  for (int it = 0; it < 80; ++it) {
    const double mid = 0.5 * (lo + hi);
    (g(mid) < 0 ? lo : hi) = mid;
  }
  CHECK(s == doctest::Approx(0.5 * (lo + hi)).epsilon(1e-10));
}

TEST_CASE("root is continuous at small omega*dz and monotone in dz") {
  double prev = light_cone_root(0.5, 1e-9);
  CHECK(prev < 1e-8);
  for (double c : {0.01, 0.1, 0.5, 1.0, 2.0, 10.0}) {
    const double s = light_cone_root(0.5, c);
    CHECK(s > prev);
    prev = s;
  }
}
