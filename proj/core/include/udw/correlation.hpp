#pragma once

#include "udw/kinematics.hpp"
#include "udw/quadrature.hpp"

namespace udw {

/// Nonlocal pair correlation X per lambda^2. The Gaussian-windowed single
/// integral hits the real zeros of the free and image denominators; with
/// the (s+i0)^2 prescription each simple zero contributes
/// PV(1/D) + i pi h(s_k)/|D'(s_k)|, so X picks up both a real and an
/// imaginary part. Only |X| enters the concurrence.
struct XResult {
  double x_real = 0;
  double x_imag = 0;
  double abs_x_over_lambda2 = 0;
  double err_est = 0;
  int pole_count_free = 0;
  int pole_count_image = 0;
};

/// Both detectors on one circular worldline family (same a, R, omega),
/// axially separated by dd with the nearer one dz from the mirror:
///   X = -(e^{-W^2}/(2 pi^{3/2} g)) ∫_0^inf e^{-s^2/(4 g^2)}
///         [1/D(s) - 1/(D(s) + 4 dd dz + 4 dz^2)] ds,
///   D(s) = dd^2 + 4 R^2 sin^2(s w/2) - s^2,  W = Omega*sigma.
/// dd = 0 (identical worldlines) throws CoincidentDetectors.
XResult x_comoving_circular(const CircularKinematics& kin, const PairGeometry& geom,
                            const DetectorSpec& det, const QuadratureBudget& budget,
                            bool include_image = true);

/// Synchronized rotation (omega_A == omega_B) with distinct radii:
///   X = -(e^{-W^2 (gA+gB)^2/(2(gA^2+gB^2))}/(pi^{3/2} sqrt(2(gA^2+gB^2))))
///       ∫ cos(s W (gA-gB)/(gA^2+gB^2)) e^{-s^2/(2(gA^2+gB^2))} [...] ds,
///   D(s) = dd^2 + RA^2 + RB^2 - 2 RA RB cos(s w) - s^2.
/// Unequal derived omegas throw AngularVelocityMismatch.
XResult x_sync_two_radii(const CircularKinematics& kin_a, const CircularKinematics& kin_b,
                         const PairGeometry& geom, const DetectorSpec& det,
                         const QuadratureBudget& budget, bool include_image = true);

/// Two hyperbolic worldlines separated by dd along the mirror normal.
/// Proper-time substitution makes the measure the gamma = 1 Gaussian;
/// D(s) = dd^2 - 4 a^{-2} sinh^2(a s/2) has the single root
/// (2/a) asinh(a dd/2).
XResult x_uniform_pair(const UniformKinematics& kin, const PairGeometry& geom,
                       const DetectorSpec& det, const QuadratureBudget& budget,
                       bool include_image = true);

}  // namespace udw
