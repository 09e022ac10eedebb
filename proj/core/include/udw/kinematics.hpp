#pragma once

namespace udw {

/// Two-level detector: energy gap in units of the switching width
/// (Omega*sigma). The switching width sigma is the unit of every length
/// and time in the library; the coupling lambda is factored out of all
/// outputs, which are reported per lambda^2. Negative gap = detector
/// prepared in its excited state.
struct DetectorSpec {
  double gap_omega = 0.1;
};

/// Circular worldline a distance dz from the mirror plane, with every
/// derived quantity the closed-form response needs. Inputs are
/// (a*sigma, R/sigma, dz/sigma); v, gamma, omega follow from
/// a = gamma^2 v^2 / R, v = |omega| R.
struct CircularKinematics {
  double accel_a = 0;      // a*sigma
  double radius = 0;       // R/sigma
  double boundary_dz = 0;  // dz/sigma
  // derived
  double speed = 0;           // v = sqrt(aR/(1+aR)) < 1
  double gamma = 1;           // sqrt(1+aR)
  double omega = 0;           // |omega|*sigma = v/R
  double alpha = 0;           // Gaussian width of the reduced integrals, R/(a sigma^2)
  double beta_per_omega = 0;  // phase slope per unit gap: beta = 2 Omega/(gamma|omega|)
  double k_per_lambda2 = 0;   // v^2 gamma |omega| sigma / (4 pi^{3/2})
};

/// Hyperbolic (Rindler) worldline at distance dz from the mirror.
struct UniformKinematics {
  double accel_a = 0;      // a*sigma
  double boundary_dz = 0;  // dz/sigma
};

enum class PairKind { CircularComoving, CircularSyncTwoRadii, UniformPair };

/// Geometry of a detector pair: axial separation dd >= 0, distance of
/// the nearer detector to the mirror dz > 0. Detector B sits at dz+dd.
struct PairGeometry {
  double sep_dd = 0;
  double boundary_dz = 0;
  PairKind kind = PairKind::CircularComoving;
};

/// Build circular kinematics from (a*sigma, R/sigma, dz/sigma).
/// Throws NonPositiveParameter unless all three are > 0 (the static
/// a = 0 limit is rejected, not special-cased).
CircularKinematics derive_circular(double accel_a, double radius, double dz);

/// Same worldline parameterized by (|omega|*sigma, R/sigma, dz/sigma);
/// used for synchronized pairs where omega is shared and radii differ.
/// Requires omega*R < 1.
CircularKinematics circular_from_omega(double omega, double radius, double dz);

UniformKinematics derive_uniform(double accel_a, double dz);

/// Unique positive root S of g(x) = x^2 - v^2 sin^2 x - c^2 with
/// c = omega*dz (g is strictly increasing for x > 0 when v < 1).
/// Refined until |g(S)| < 1e-12 max(1, c^2). v = 0 is allowed here.
double light_cone_root(double speed_v, double omega_dz);

/// light_cone_root for the image denominator of a circular detector.
double light_cone_root_S(const CircularKinematics& kin);

}  // namespace udw
