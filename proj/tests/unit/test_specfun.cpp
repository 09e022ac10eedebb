#include <cmath>
#include <random>

#include <doctest.h>

#include "support/reference.hpp"
#include "udw/specfun.hpp"

TEST_CASE("erfc at zero") { CHECK(udw::erfc(0.0) == doctest::Approx(1.0).epsilon(1e-15)); }

TEST_CASE("erfc reflection") {
  for (double x : {0.3, 1.7, 4.2}) {
    CHECK(udw::erfc(-x) + udw::erfc(x) == doctest::Approx(2.0).epsilon(1e-15));
  }
}

TEST_CASE("erfc(1) against the long-double series") {
  const double ref = static_cast<double>(testref::erfc_ref(1.0L));
  CHECK(ref == doctest::Approx(0.15729920705).epsilon(1e-10));
  CHECK(udw::erfc(1.0) == doctest::Approx(ref).epsilon(1e-14));
}

TEST_CASE("erfc matches the reference on random points in [-8, 8]") {
  std::mt19937_64 rng(20240817);
  std::uniform_real_distribution<double> dist(-8.0, 8.0);
  double worst = 0;
  for (int i = 0; i < 1000; ++i) {
    const double x = dist(rng);
    const double err = std::fabs(udw::erfc(x) - static_cast<double>(testref::erfc_ref(x)));
    worst = std::fmax(worst, err);
  }
  CHECK(worst < 1e-13);
}

TEST_CASE("erfc stays in (0, 2) and total") {
  for (double x : {-10.0, -3.0, 0.5, 9.9, 30.0}) {
    const double v = udw::erfc(x);
    CHECK(v >= 0.0);
    CHECK(v <= 2.0);
  }
}

TEST_CASE("vacuum term at zero gap is 1/(4 pi)") {
  CHECK(udw::vacuum_static_term(0.0) == doctest::Approx(0.07957747154594767).epsilon(1e-14));
}

TEST_CASE("vacuum term decays at large gap") {
  // asymptotically e^{-w^2}/(8 pi w^2); compare in long double
  const long double w = 5.0L;
  const long double asym = expl(-w * w) / (8.0L * 3.14159265358979323846L * w * w);
  const double v = udw::vacuum_static_term(5.0);
  CHECK(v < 1e-6);
  CHECK(v == doctest::Approx(static_cast<double>(asym)).epsilon(0.2));
}

TEST_CASE("excited detector (negative gap) emits more than the gapless one") {
  CHECK(udw::vacuum_static_term(-2.0) > udw::vacuum_static_term(0.0));
}

TEST_CASE("vacuum term is strictly decreasing in the gap") {
  double prev = udw::vacuum_static_term(-5.0);
  for (int i = 1; i < 1000; ++i) {
    const double w = -5.0 + 10.0 * i / 999;
    const double cur = udw::vacuum_static_term(w);
    CHECK(cur < prev);
    prev = cur;
  }
}
