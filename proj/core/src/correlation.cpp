#include "udw/correlation.hpp"

#include <cmath>
#include <string>

#include "udw/errors.hpp"

namespace udw {

namespace {

constexpr double kPi = 3.141592653589793;

// One denominator's worth of Gaussian-windowed integral:
//   PV ∫_0^inf h(s)/D(s) ds  +  i pi Σ_k h(s_k)/|D'(s_k)|
struct PartResult {
  double pv = 0;
  double residue_sum = 0;  // Σ h/|D'|, the i pi coefficient
  double err = 0;
  int pole_count = 0;
};

PartResult x_part(const RealFn& h, const RealFn& d, const RealFn& d_prime, double alpha_env,
                  double scan_upper, double max_step, double natural,
                  const QuadratureBudget& budget) {
  PartResult part;
  const PoleSet poles = bracket_all_roots(d, scan_upper, max_step, &d_prime);
  part.pole_count = static_cast<int>(poles.roots.size());
  for (std::size_t k = 0; k < poles.roots.size(); ++k) {
    part.residue_sum += h(poles.roots[k]) / std::fabs(poles.derivative_at_root[k]);
  }
  const IntegralResult pv = integrate_pv(h, d, poles, alpha_env, budget, 1.0, natural);
  part.pv = pv.value;
  part.err = pv.err_est;
  return part;
}

XResult assemble(double pref, const PartResult& free_part, bool include_image,
                 const PartResult& img_part) {
  XResult out;
  out.pole_count_free = free_part.pole_count;
  double pv = free_part.pv;
  double residue = free_part.residue_sum;
  double err = free_part.err;
  if (include_image) {
    out.pole_count_image = img_part.pole_count;
    pv -= img_part.pv;
    residue -= img_part.residue_sum;
    err += img_part.err;
  }
  out.x_real = -pref * pv;
  out.x_imag = -pref * kPi * residue;
  out.abs_x_over_lambda2 = std::hypot(out.x_real, out.x_imag);
  out.err_est = pref * (1.0 + kPi) * err;
  return out;
}

void check_pair(const PairGeometry& geom, PairKind expected) {
  if (geom.kind != expected) throw Error("correlation: pair kind mismatch");
  if (!(geom.boundary_dz > 0)) throw NonPositiveParameter("correlation: dz must be > 0");
  if (geom.sep_dd == 0.0) {
    throw CoincidentDetectors("correlation: dd = 0 means coincident worldlines");
  }
  if (geom.sep_dd < 0.0) throw NonPositiveParameter("correlation: dd must be >= 0");
}

}  // namespace

XResult x_comoving_circular(const CircularKinematics& kin, const PairGeometry& geom,
                            const DetectorSpec& det, const QuadratureBudget& budget,
                            bool include_image) {
  check_pair(geom, PairKind::CircularComoving);
  const double dd = geom.sep_dd;
  const double dz = geom.boundary_dz;
  const double R = kin.radius;
  const double w = kin.omega;
  const double gamma = kin.gamma;
  const double img_shift = 4.0 * dd * dz + 4.0 * dz * dz;

  const double alpha_env = 1.0 / (4.0 * gamma * gamma);
  RealFn h = [&](double s) { return std::exp(-alpha_env * s * s); };
  RealFn d_free = [&](double s) {
    const double sn = std::sin(0.5 * w * s);
    return dd * dd + 4.0 * R * R * sn * sn - s * s;
  };
  RealFn dp_free = [&](double s) {
    return 2.0 * R * R * w * std::sin(w * s) - 2.0 * s;
  };
  RealFn d_img = [&](double s) { return d_free(s) + img_shift; };
  RealFn dp_img = dp_free;

  const double max_step = std::min(0.25, kPi / (8.0 * w));
  const double up_free = std::sqrt(dd * dd + 4.0 * R * R) + 1.0;
  const double up_img = std::sqrt(dd * dd + img_shift + 4.0 * R * R) + 1.0;

  const double natural = std::min(0.5 * kPi, 0.5 * kPi / w);
  const PartResult pf =
      x_part(h, d_free, dp_free, alpha_env, up_free, max_step, natural, budget);
  PartResult pi;
  if (include_image) {
    pi = x_part(h, d_img, dp_img, alpha_env, up_img, max_step, natural, budget);
  }

  const double pref = std::exp(-det.gap_omega * det.gap_omega) /
                      (2.0 * std::pow(kPi, 1.5) * gamma);
  return assemble(pref, pf, include_image, pi);
}

XResult x_sync_two_radii(const CircularKinematics& kin_a, const CircularKinematics& kin_b,
                         const PairGeometry& geom, const DetectorSpec& det,
                         const QuadratureBudget& budget, bool include_image) {
  check_pair(geom, PairKind::CircularSyncTwoRadii);
  const double w = kin_a.omega;
  if (std::fabs(kin_a.omega - kin_b.omega) > 1e-12 * std::fmax(kin_a.omega, kin_b.omega)) {
    throw AngularVelocityMismatch("x_sync_two_radii: omega_A = " + std::to_string(kin_a.omega) +
                                  " != omega_B = " + std::to_string(kin_b.omega));
  }
  const double dd = geom.sep_dd;
  const double dz = geom.boundary_dz;
  const double ra = kin_a.radius;
  const double rb = kin_b.radius;
  const double ga = kin_a.gamma;
  const double gb = kin_b.gamma;
  const double g2sum = ga * ga + gb * gb;
  const double img_shift = 4.0 * dd * dz + 4.0 * dz * dz;

  const double alpha_env = 1.0 / (2.0 * g2sum);
  const double cos_rate = det.gap_omega * (ga - gb) / g2sum;
  RealFn h = [&](double s) { return std::cos(cos_rate * s) * std::exp(-alpha_env * s * s); };
  RealFn d_free = [&](double s) {
    return dd * dd + ra * ra + rb * rb - 2.0 * ra * rb * std::cos(w * s) - s * s;
  };
  RealFn dp_free = [&](double s) { return 2.0 * ra * rb * w * std::sin(w * s) - 2.0 * s; };
  RealFn d_img = [&](double s) { return d_free(s) + img_shift; };

  const double max_step = std::min(0.25, kPi / (8.0 * w));
  const double spatial_max = dd * dd + (ra + rb) * (ra + rb);
  const double up_free = std::sqrt(spatial_max) + 1.0;
  const double up_img = std::sqrt(spatial_max + img_shift) + 1.0;

  const double natural = std::min(0.5 * kPi, 0.5 * kPi / w);
  const PartResult pf =
      x_part(h, d_free, dp_free, alpha_env, up_free, max_step, natural, budget);
  PartResult pi;
  if (include_image) {
    pi = x_part(h, d_img, dp_free, alpha_env, up_img, max_step, natural, budget);
  }

  const double gsum = ga + gb;
  const double pref =
      std::exp(-det.gap_omega * det.gap_omega * gsum * gsum / (2.0 * g2sum)) /
      (std::pow(kPi, 1.5) * std::sqrt(2.0 * g2sum));
  return assemble(pref, pf, include_image, pi);
}

XResult x_uniform_pair(const UniformKinematics& kin, const PairGeometry& geom,
                       const DetectorSpec& det, const QuadratureBudget& budget,
                       bool include_image) {
  check_pair(geom, PairKind::UniformPair);
  const double a = kin.accel_a;
  const double dd = geom.sep_dd;
  const double dz = geom.boundary_dz;
  const double img_shift = 4.0 * dd * dz + 4.0 * dz * dz;

  RealFn h = [](double s) { return std::exp(-0.25 * s * s); };
  auto make_d = [&](double offset) {
    return std::pair<RealFn, RealFn>{
        [=](double s) {
          const double y = 0.5 * a * s;
          if (y > 350.0) return -1e300;
          const double sh = std::sinh(y);
          return dd * dd + offset - 4.0 / (a * a) * sh * sh;
        },
        [=](double s) {
          const double y = a * s;
          if (y > 700.0) return -1e300;
          return -2.0 / a * std::sinh(y);
        }};
  };
  auto [d_free, dp_free] = make_d(0.0);
  auto [d_img, dp_img] = make_d(img_shift);

  // single root of each: (2/a) asinh(a L/2) with L the spatial distance
  const double up_free = 2.0 / a * std::asinh(0.5 * a * dd) + 1.0;
  const double up_img = 2.0 / a * std::asinh(0.5 * a * std::sqrt(dd * dd + img_shift)) + 1.0;

  const PartResult pf = x_part(h, d_free, dp_free, 0.25, up_free, 0.25, -1.0, budget);
  PartResult pi;
  if (include_image) pi = x_part(h, d_img, dp_img, 0.25, up_img, 0.25, -1.0, budget);

  const double pref =
      std::exp(-det.gap_omega * det.gap_omega) / (2.0 * std::pow(kPi, 1.5));
  return assemble(pref, pf, include_image, pi);
}

}  // namespace udw
