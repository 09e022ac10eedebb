#include <cmath>
#include <random>

#include <doctest.h>

#include "support/reference.hpp"
#include "udw/errors.hpp"
#include "udw/quadrature.hpp"

using namespace udw;

namespace {
const QuadratureBudget kBudget{};
constexpr double kSqrtPi = 1.7724538509055160;
}  // namespace

TEST_CASE("plain Gaussian") {
  auto r = integrate_damped([](double x) { return std::exp(-x * x); }, 1.0, kBudget);
  CHECK(r.value == doctest::Approx(0.5 * kSqrtPi).epsilon(1e-12));
  CHECK(r.err_est < 1e-9);
}

TEST_CASE("damped cosine") {
  auto r = integrate_damped([](double x) { return std::exp(-x * x) * std::cos(2 * x); }, 1.0,
                            kBudget);
  CHECK(r.value == doctest::Approx(0.5 * kSqrtPi * std::exp(-1.0)).epsilon(1e-12));
}

TEST_CASE("rotational-type integrand against a 1e6-point trapezoid") {
  auto f = [](double x) {
    const double s = std::sin(x);
    if (x < 1e-6) return std::exp(-0.25 * x * x) * (1.0 / 3.0) / (1.0 - 0.5);
    return std::exp(-0.25 * x * x) * (x * x - s * s) / (x * x * (x * x - 0.5 * s * s));
  };
  const double oracle = testref::trapezoid(f, 0.0, 40.0, 1000000);
  auto r = integrate_damped(f, 0.25, kBudget);
  CHECK(r.value == doctest::Approx(oracle).epsilon(1e-8));
}

TEST_CASE("tolerance halving is self-consistent") {
  auto f = [](double x) {
    const double s = std::sin(x);
    if (x < 1e-6) return std::exp(-0.25 * x * x) * (1.0 / 3.0) / (1.0 - 0.5);
    return std::exp(-0.25 * x * x) * (x * x - s * s) / (x * x * (x * x - 0.5 * s * s));
  };
  for (double tol : {1e-8, 1e-9, 1e-10}) {
    QuadratureBudget loose = kBudget;
    loose.abs_tol = tol;
    loose.rel_tol = 1e-6;
    QuadratureBudget tight = loose;
    tight.abs_tol /= 2;
    tight.rel_tol /= 2;
    auto r1 = integrate_damped(f, 0.25, loose);
    auto r2 = integrate_damped(f, 0.25, tight);
    CHECK(std::fabs(r2.value - r1.value) < std::fmax(r1.err_est, 1e-15));
  }
}

TEST_CASE("PV with a single pole against the shrinking-window reference") {
  auto fnum = [](double x) { return std::exp(-x * x); };
  auto gden = [](double x) { return x - 1.0; };
  PoleSet p{{1.0}, {1.0}};
  auto r = integrate_pv(fnum, gden, p, 1.0, kBudget);
  const double ref = testref::pv_window_ref(
      [&](double x) { return fnum(x) / gden(x); }, {1.0},
      1.2 * std::sqrt(std::log(1e10)));
  CHECK(r.value == doctest::Approx(ref).epsilon(1e-7));
}

TEST_CASE("symmetric window of the subtracted pole term vanishes identically") {
  // f_num(x) = (x - 1) + c has PV of c/(x-1) equal to zero over any
  // symmetric window; the machinery must reproduce plain integration of 1.
  const double c = 3.0;
  auto fnum = [&](double x) { return (x - 1.0) + c; };
  auto gden = [](double x) { return x - 1.0; };
  PoleSet p{{1.0}, {1.0}};
  QuadratureBudget b = kBudget;
  b.truncation_safety = 1.0;
  auto whole = integrate_pv(fnum, gden, p, 1e-4, b, 1.0);
  // analytic: integral of 1 over [0, x_max] + c * PV log((x_max-1)/1)
  const double x_max = std::sqrt(std::log(1.0 / b.abs_tol) / 1e-4);
  const double expect = x_max + c * std::log(x_max - 1.0);
  CHECK(whole.value == doctest::Approx(expect).epsilon(1e-8));
}

TEST_CASE("degenerate pole is rejected") {
  auto fnum = [](double x) { return std::exp(-x * x); };
  auto gden = [](double x) { return (x - 1.0) * (x - 1.0); };
  PoleSet p{{1.0}, {0.0}};
  CHECK_THROWS_AS(integrate_pv(fnum, gden, p, 1.0, kBudget), DegeneratePole);
}

TEST_CASE("overlapping windows are rejected") {
  auto fnum = [](double x) { return std::exp(-x * x); };
  auto gden = [](double x) { return (x - 1.0) * (x - 1.0005); };
  PoleSet p{{1.0, 1.0005}, {-0.0005, 0.0005}};
  QuadratureBudget b = kBudget;
  b.pv_window_delta = 1e-3;
  CHECK_THROWS_AS(integrate_pv(fnum, gden, p, 1.0, b), WindowOverlap);
}

TEST_CASE("window half-width independence on the image-term integrand") {
  // a*sigma = 2, R = 1, gap = 0.1, dz = 0.2
  const double v2 = 2.0 / 3.0;
  const double alpha = 0.5;
  const double gamma = std::sqrt(3.0);
  const double omega = std::sqrt(v2) / 1.0;
  const double beta = 2 * 0.1 / (gamma * omega);
  const double c2 = omega * omega * 0.04;
  auto fnum = [&](double x) { return std::exp(-alpha * x * x) * std::cos(beta * x); };
  auto gden = [&](double x) {
    const double s = std::sin(x);
    return x * x - v2 * s * s - c2;
  };
  // root by bisection
  double lo = 0.01, hi = 2.0;
  while (hi - lo > 1e-14) {
    const double mid = 0.5 * (lo + hi);
    (gden(mid) < 0 ? lo : hi) = mid;
  }
  const double s0 = 0.5 * (lo + hi);
  PoleSet p{{s0}, {2 * s0 - v2 * std::sin(2 * s0)}};
  double base = 0;
  for (double delta : {1e-2, 1e-3, 1e-4}) {
    QuadratureBudget b = kBudget;
    b.pv_window_delta = delta;
    auto r = integrate_pv(fnum, gden, p, alpha, b);
    if (base == 0) {
      base = r.value;
    } else {
      CHECK(std::fabs(r.value - base) < 10 * kBudget.abs_tol);
    }
  }
}

TEST_CASE("bracket x^2 - 4") {
  auto g = [](double x) { return x * x - 4.0; };
  PoleSet p = bracket_all_roots(g, 10.0, 0.1);
  REQUIRE(p.roots.size() == 1);
  CHECK(p.roots[0] == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(p.derivative_at_root[0] == doctest::Approx(4.0).epsilon(1e-5));
}

TEST_CASE("bracket sin x on (0, 10]") {
  auto g = [](double x) { return std::sin(x); };
  PoleSet p = bracket_all_roots(g, 10.0, 0.05);
  REQUIRE(p.roots.size() == 3);
  CHECK(p.roots[0] == doctest::Approx(3.14159265358979).epsilon(1e-11));
  CHECK(p.roots[1] == doctest::Approx(6.28318530717959).epsilon(1e-11));
  CHECK(p.roots[2] == doctest::Approx(9.42477796076938).epsilon(1e-11));
}

TEST_CASE("pair-denominator roots against a dense scan") {
  const double dd = 0.2, rr = 2.0, w = 0.6;
  auto g = [&](double s) {
    const double sn = std::sin(0.5 * w * s);
    return dd * dd + 4 * rr * rr * sn * sn - s * s;
  };
  const double upper = std::sqrt(dd * dd + 4 * rr * rr) + 1.0;
  PoleSet p = bracket_all_roots(g, upper, std::fmin(0.25, 3.14159265 / (8 * w)));
  const auto ref = testref::dense_scan_roots(g, upper);
  REQUIRE(p.roots.size() == ref.size());
  for (std::size_t i = 0; i < ref.size(); ++i) {
    CHECK(p.roots[i] == doctest::Approx(ref[i]).epsilon(1e-9));
  }
}

TEST_CASE("tangency detection") {
  auto g = [](double x) {
    const double t = x - 2.0;
    return t * t;  // touches zero without crossing
  };
  CHECK_THROWS_AS(bracket_all_roots(g, 5.0, 0.001), DegeneratePole);
}

TEST_CASE("root counts match a dense scan on random pair denominators") {
  std::mt19937_64 rng(20240518);
  std::uniform_real_distribution<double> ddd(0.05, 2.0), drr(0.1, 3.0), dw(0.1, 1.2);
  for (int i = 0; i < 100; ++i) {
    const double dd = ddd(rng), rr = drr(rng), w = dw(rng);
    auto g = [&](double s) {
      const double sn = std::sin(0.5 * w * s);
      return dd * dd + 4 * rr * rr * sn * sn - s * s;
    };
    const double upper = std::sqrt(dd * dd + 4 * rr * rr) + 1.0;
    PoleSet p;
    try {
      p = bracket_all_roots(g, upper, std::fmin(0.25, 3.14159265 / (8 * w)));
    } catch (const DegeneratePole&) {
      continue;  // tangencies are a legitimate rejection
    }
    const auto ref = testref::dense_scan_roots(g, upper, 100000);
    CHECK(p.roots.size() == ref.size());
  }
}
