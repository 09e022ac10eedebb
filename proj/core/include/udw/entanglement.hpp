#pragma once

#include "udw/correlation.hpp"
#include "udw/kinematics.hpp"
#include "udw/quadrature.hpp"
#include "udw/response.hpp"

namespace udw {

struct HarvestResult {
  double p_a = 0;
  double p_b = 0;
  double abs_x = 0;
  double concurrence = 0;
  double err_est = 0;
};

/// 2 max(0, |X| - sqrt(P_A P_B)). Probabilities within [-1e-9, 0) are
/// treated as quadrature noise and clamped to zero; anything more
/// negative throws NegativeProbability.
double concurrence(double p_a, double p_b, double abs_x);

/// Which boundary distance detector B's probability uses. The pair
/// geometry places B at dz + dd, so DzPlusDd is the faithful default;
/// Dz reproduces the shorthand where both detectors share one P.
enum class PbBoundary { DzPlusDd, Dz };

/// Complete description of one detector pair.
struct PairConfig {
  PairKind kind = PairKind::CircularComoving;
  double accel_a = 1.0;   // comoving circular + uniform pair
  double radius = 1.0;    // comoving circular
  double rot_omega = 0;   // synchronized pair (shared |omega| sigma)
  double radius_a = 1.0;  // synchronized pair radii
  double radius_b = 1.0;
  double gap_omega = 0.1;  // Omega*sigma
  double dz = 0.2;
  double dd = 0.2;
};

/// P_A at dz, P_B at dz(+dd), |X| from the matching correlation routine,
/// then the concurrence. err_est is the conservative sum of the pieces'
/// propagated estimates.
HarvestResult harvest_pair(const PairConfig& cfg, const QuadratureBudget& budget,
                           PbBoundary pb_mode = PbBoundary::DzPlusDd, bool include_image = true);

}  // namespace udw
