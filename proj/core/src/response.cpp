#include "udw/response.hpp"

#include <cmath>

#include "udw/errors.hpp"
#include "udw/specfun.hpp"

namespace udw {

namespace {

constexpr double kInv2Pi32 = 0.08979356106258328;   // 1/(2 pi^{3/2})
constexpr double kInv4Pi32 = 0.04489678053129164;   // 1/(4 pi^{3/2})
constexpr double kInvSqrtPi = 0.5641895835477563;   // 1/sqrt(pi)

// (x^2 - sin^2 x)/(x^2 (x^2 - v^2 sin^2 x)), the removable-singularity
// rotational kernel. Even series in x below the switch point; both
// numerator and denominator keep terms through x^8/x^4.
double rotational_kernel(double x, double v2) {
  const double x2 = x * x;
  if (x < 0.1) {
    const double num = 1.0 / 3.0 + x2 * (-2.0 / 45.0 + x2 * (1.0 / 315.0 - x2 * 2.0 / 14175.0));
    const double den = (1.0 - v2) +
                       v2 * x2 * (1.0 / 3.0 + x2 * (-2.0 / 45.0 + x2 * (1.0 / 315.0)));
    return num / den;
  }
  const double s = std::sin(x);
  const double s2 = s * s;
  const double den = x2 * (x2 - v2 * s2);
  if (den <= 0.0) {
    throw Error("rotational_kernel: x^2 - v^2 sin^2 x <= 0 (impossible for v < 1)");
  }
  return (x2 - s2) / den;
}

// (a^2/4) csch^2(a s/2) - 1/s^2: the hyperbolic kernel minus its s->0
// double pole. csch^2(y) = 1/y^2 - 1/3 + y^2/15 - 2 y^4/189 + ...
double hyperbolic_remainder(double s, double a) {
  const double y = 0.5 * a * s;
  if (y < 0.1) {
    const double a2 = a * a;
    const double y2 = y * y;
    return 0.25 * a2 * (-1.0 / 3.0 + y2 * (1.0 / 15.0 - y2 * (2.0 / 189.0)));
  }
  if (y > 350.0) return -1.0 / (s * s);  // csch^2 underflows
  const double sh = std::sinh(y);
  return 0.25 * a * a / (sh * sh) - 1.0 / (s * s);
}

}  // namespace

TransitionResult transition_circular(const CircularKinematics& kin, const DetectorSpec& det,
                                     const QuadratureBudget& budget, bool include_image) {
  const double v = kin.speed;
  const double v2 = v * v;
  const double gamma = kin.gamma;
  const double omega = kin.omega;
  const double alpha = kin.alpha;
  const double beta = kin.beta_per_omega * det.gap_omega;

  TransitionResult res;
  res.term_static = vacuum_static_term(det.gap_omega);

  const double gamma2 = gamma * gamma;
  RealFn f_rot = [&](double x) {
    return std::exp(-alpha * x * x) * std::cos(beta * x) * rotational_kernel(x, v2);
  };
  const IntegralResult rot = integrate_damped(f_rot, alpha, budget, gamma2);
  res.term_free_oscillatory = kin.k_per_lambda2 * rot.value;
  res.err_est += kin.k_per_lambda2 * rot.err_est;

  if (include_image) {
    const double c = omega * kin.boundary_dz;
    const double c2 = c * c;
    const double S = light_cone_root_S(kin);
    const double dS = 2.0 * S - v2 * std::sin(2.0 * S);  // > 0, never degenerate

    RealFn f_num = [&](double x) { return std::exp(-alpha * x * x) * std::cos(beta * x); };
    RealFn g_den = [&](double x) {
      const double s = std::sin(x);
      return x * x - v2 * s * s - c2;
    };
    PoleSet pole;
    pole.roots = {S};
    pole.derivative_at_root = {dS};
    const double pref = omega * kInv4Pi32 / gamma;
    const IntegralResult pv = integrate_pv(f_num, g_den, pole, alpha, budget, 1.0);
    res.term_boundary_pv = pref * pv.value;
    res.err_est += pref * pv.err_est;

    res.term_residue =
        0.25 * omega * kInvSqrtPi / gamma * std::exp(-alpha * S * S) * std::sin(beta * S) / dS;
  }

  res.p_over_lambda2 =
      res.term_free_oscillatory + res.term_boundary_pv + res.term_static + res.term_residue;
  return res;
}

TransitionResult transition_uniform(const UniformKinematics& kin, const DetectorSpec& det,
                                    const QuadratureBudget& budget, bool include_image) {
  const double a = kin.accel_a;
  const double dz = kin.boundary_dz;
  const double gap = det.gap_omega;

  TransitionResult res;
  res.term_static = vacuum_static_term(gap);

  RealFn f_rem = [&](double s) {
    return std::cos(gap * s) * std::exp(-0.25 * s * s) * hyperbolic_remainder(s, a);
  };
  const IntegralResult rem = integrate_damped(f_rem, 0.25, budget, a * a / 12.0 + 1.0);
  res.term_free_oscillatory = -kInv2Pi32 * rem.value;
  res.err_est += kInv2Pi32 * rem.err_est;

  if (include_image) {
    const double S = 2.0 / a * std::asinh(a * dz);
    const double dS = 4.0 * dz * std::sqrt(1.0 + a * a * dz * dz);  // (2/a) sinh(a S)

    RealFn f_num = [&](double s) { return std::cos(gap * s) * std::exp(-0.25 * s * s); };
    RealFn g_den = [&](double s) {
      const double y = 0.5 * a * s;
      if (y > 350.0) return 1e300;
      const double sh = std::sinh(y);
      return 4.0 / (a * a) * sh * sh - 4.0 * dz * dz;
    };
    PoleSet pole;
    pole.roots = {S};
    pole.derivative_at_root = {dS};
    const IntegralResult pv = integrate_pv(f_num, g_den, pole, 0.25, budget, 1.0);
    res.term_boundary_pv = kInv2Pi32 * pv.value;
    res.err_est += kInv2Pi32 * pv.err_est;

    res.term_residue = 0.5 * kInvSqrtPi * std::exp(-0.25 * S * S) * std::sin(gap * S) / dS;
  }

  res.p_over_lambda2 =
      res.term_free_oscillatory + res.term_boundary_pv + res.term_static + res.term_residue;
  return res;
}

}  // namespace udw
