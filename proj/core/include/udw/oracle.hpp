#pragma once

#include <complex>
#include <variant>
#include <vector>

#include "udw/kinematics.hpp"

namespace udw {

/// Regulator ladder for the reference evaluator. The i*eps-regulated
/// two-point function is evaluated on a tensor grid at each ladder value
/// and the results are polynomial-extrapolated to eps = 0. The base grid
/// is uniform with grid_points_per_dim nodes per axis over
/// +-domain_halfwidth*max(gamma); graded refinement (spacing eps_min/8)
/// is inserted around every real root of the eps->0 denominators so the
/// grid resolves the smallest regulator near the singular loci.
struct EpsilonLadder {
  std::vector<double> eps = {1e-2, 5e-3, 2.5e-3};
  int extrapolation_order = 2;
  int grid_points_per_dim = 4096;
  double domain_halfwidth = 8.0;  // units of sigma * max gamma
};

/// Circular worldline for the oracle; omega carries its sign here.
struct OracleCircular {
  double radius = 1.0;
  double omega = 0.5;  // omega * sigma
  double z = 0.2;      // distance to the mirror
};

struct OracleUniform {
  double accel = 1.0;  // a * sigma
  double z = 0.2;
};

using OracleTrajectory = std::variant<OracleCircular, OracleUniform>;

/// Detector pair for the nonlocal term; both members must be the same
/// trajectory family. Circular members may have unequal omega — this is
/// the only implementation of that general case.
struct OraclePair {
  OracleTrajectory det_a;
  OracleTrajectory det_b;
};

struct OracleEval {
  std::complex<double> value;  // eps -> 0 extrapolant
  double stability = 0;        // last diagonal increment of the tableau
  std::vector<std::complex<double>> per_eps;
};

/// Direct double-integral evaluation of the transition probability at
/// finite eps, extrapolated. The imaginary residual of the extrapolant
/// must come out below 1e-4 of the real part or the run is rejected.
OracleEval oracle_transition(const OracleTrajectory& traj, const DetectorSpec& det,
                             const EpsilonLadder& ladder, bool include_image = true);

/// Direct evaluation of the ordered (t > t') double integral for X.
OracleEval oracle_x(const OraclePair& pair, const DetectorSpec& det, const EpsilonLadder& ladder,
                    bool include_image = true);

/// FNV-1a over the ladder's defining numbers; identifies fixture vintages.
std::uint64_t ladder_hash(const EpsilonLadder& ladder);

}  // namespace udw
