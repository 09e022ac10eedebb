#include "udw/entanglement.hpp"

#include <cmath>
#include <string>

#include "udw/errors.hpp"

namespace udw {

double concurrence(double p_a, double p_b, double abs_x) {
  constexpr double noise_floor = -1e-9;
  if (p_a < noise_floor || p_b < noise_floor) {
    throw NegativeProbability("concurrence: P = " + std::to_string(std::fmin(p_a, p_b)) +
                              " below the -1e-9 noise floor");
  }
  p_a = std::fmax(p_a, 0.0);
  p_b = std::fmax(p_b, 0.0);
  return 2.0 * std::fmax(0.0, abs_x - std::sqrt(p_a * p_b));
}

HarvestResult harvest_pair(const PairConfig& cfg, const QuadratureBudget& budget,
                           PbBoundary pb_mode, bool include_image) {
  const DetectorSpec det{cfg.gap_omega};
  const double dz_b = pb_mode == PbBoundary::DzPlusDd ? cfg.dz + cfg.dd : cfg.dz;
  PairGeometry geom{cfg.dd, cfg.dz, cfg.kind};

  TransitionResult pa;
  TransitionResult pb;
  XResult x;
  switch (cfg.kind) {
    case PairKind::CircularComoving: {
      const CircularKinematics ka = derive_circular(cfg.accel_a, cfg.radius, cfg.dz);
      const CircularKinematics kb = derive_circular(cfg.accel_a, cfg.radius, dz_b);
      pa = transition_circular(ka, det, budget, include_image);
      pb = transition_circular(kb, det, budget, include_image);
      x = x_comoving_circular(ka, geom, det, budget, include_image);
      break;
    }
    case PairKind::CircularSyncTwoRadii: {
      const CircularKinematics ka = circular_from_omega(cfg.rot_omega, cfg.radius_a, cfg.dz);
      const CircularKinematics kb = circular_from_omega(cfg.rot_omega, cfg.radius_b, dz_b);
      pa = transition_circular(ka, det, budget, include_image);
      pb = transition_circular(kb, det, budget, include_image);
      x = x_sync_two_radii(ka, kb, geom, det, budget, include_image);
      break;
    }
    case PairKind::UniformPair: {
      const UniformKinematics ka = derive_uniform(cfg.accel_a, cfg.dz);
      const UniformKinematics kb = derive_uniform(cfg.accel_a, dz_b);
      pa = transition_uniform(ka, det, budget, include_image);
      pb = transition_uniform(kb, det, budget, include_image);
      x = x_uniform_pair(ka, geom, det, budget, include_image);
      break;
    }
  }

  HarvestResult out;
  out.p_a = pa.p_over_lambda2;
  out.p_b = pb.p_over_lambda2;
  out.abs_x = x.abs_x_over_lambda2;
  out.concurrence = concurrence(out.p_a, out.p_b, out.abs_x);
  out.err_est = 2.0 * (x.err_est + pa.err_est + pb.err_est);
  return out;
}

}  // namespace udw
