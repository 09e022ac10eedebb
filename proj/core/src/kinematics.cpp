#include "udw/kinematics.hpp"

#include <cmath>
#include <string>

#include "udw/errors.hpp"

namespace udw {

namespace {

constexpr double kFourPi32 = 22.273311987326831;  // 4 pi^{3/2}

CircularKinematics finish(double a, double R, double dz, double v) {
  CircularKinematics k;
  k.accel_a = a;
  k.radius = R;
  k.boundary_dz = dz;
  k.speed = v;
  k.gamma = 1.0 / std::sqrt(1.0 - v * v);
  k.omega = v / R;
  k.alpha = R / a;  // equals 1/(omega^2 gamma^2) in sigma units
  k.beta_per_omega = 2.0 / (k.gamma * k.omega);
  k.k_per_lambda2 = v * v * k.gamma * k.omega / kFourPi32;
  return k;
}

}  // namespace

CircularKinematics derive_circular(double accel_a, double radius, double dz) {
  if (!(accel_a > 0) || !(radius > 0) || !(dz > 0)) {
    throw NonPositiveParameter("derive_circular: a, R, dz must all be > 0 (got a=" +
                               std::to_string(accel_a) + ", R=" + std::to_string(radius) +
                               ", dz=" + std::to_string(dz) + ")");
  }
  const double aR = accel_a * radius;
  const double v = std::sqrt(aR / (1.0 + aR));  // < 1 for every aR > 0
  CircularKinematics k = finish(accel_a, radius, dz, v);
  k.gamma = std::sqrt(1.0 + aR);  // exact form of the invariant gamma^2 = 1 + aR
  return k;
}

CircularKinematics circular_from_omega(double omega, double radius, double dz) {
  if (!(omega > 0) || !(radius > 0) || !(dz > 0)) {
    throw NonPositiveParameter("circular_from_omega: omega, R, dz must all be > 0");
  }
  const double v = omega * radius;
  if (v >= 1.0) {
    throw NonPositiveParameter("circular_from_omega: omega*R = " + std::to_string(v) +
                               " >= 1 (superluminal)");
  }
  const double gamma2 = 1.0 / (1.0 - v * v);
  return finish(gamma2 * omega * omega * radius, radius, dz, v);
}

UniformKinematics derive_uniform(double accel_a, double dz) {
  if (!(accel_a > 0) || !(dz > 0)) {
    throw NonPositiveParameter("derive_uniform: a and dz must be > 0");
  }
  return UniformKinematics{accel_a, dz};
}

double light_cone_root(double v, double c) {
  if (c == 0.0) return 0.0;
  auto g = [&](double x) { return x * x - v * v * std::sin(x) * std::sin(x) - c * c; };
  // g(c) <= 0 and g(x) > 0 once x^2 > c^2 + v^2.
  double lo = c;
  double hi = std::sqrt(c * c + v * v) * (1.0 + 1e-12) + 1e-15;
  if (g(lo) > 0 || g(hi) < 0) {
    throw RootNotBracketed("light_cone_root: bracket failed (internal)");
  }
  const double gtol = 1e-12 * std::fmax(1.0, c * c);
  double mid = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    mid = 0.5 * (lo + hi);
    const double gm = g(mid);
    if (std::fabs(gm) < gtol && hi - lo < 1e-12 * std::fmax(1.0, mid)) break;
    (gm < 0 ? lo : hi) = mid;
  }
  // Newton polish; g' = 2x - v^2 sin 2x > 0
  for (int it = 0; it < 4; ++it) {
    const double gp = 2 * mid - v * v * std::sin(2 * mid);
    mid -= g(mid) / gp;
  }
  return mid;
}

double light_cone_root_S(const CircularKinematics& kin) {
  return light_cone_root(kin.speed, kin.omega * kin.boundary_dz);
}

}  // namespace udw
