#pragma once

#include "udw/kinematics.hpp"
#include "udw/quadrature.hpp"

namespace udw {

/// Transition probability per lambda^2, split into the four pieces the
/// closed-form reduction produces. p_over_lambda2 is their exact sum.
struct TransitionResult {
  double p_over_lambda2 = 0;
  double term_free_oscillatory = 0;  // regular rotational (or hyperbolic-remainder) integral
  double term_boundary_pv = 0;       // principal-value mirror-image integral
  double term_static = 0;            // inertial Gaussian-window closed form
  double term_residue = 0;           // light-cone pole residue of the image term
  double err_est = 0;
};

/// Transition probability of a circular detector in front of the mirror:
///   P/l^2 = K ∫ e^{-a x^2} cos(b x) (x^2-sin^2 x)/(x^2 (x^2-v^2 sin^2 x)) dx
///         + (w/(4 pi^{3/2} g)) PV ∫ e^{-a x^2} cos(b x)/(x^2-v^2 sin^2 x-w^2 dz^2) dx
///         + vacuum_static_term(Omega)
///         + (w/(4 sqrt(pi) g)) e^{-a S^2} sin(b S)/(2S - v^2 sin 2S)
/// with a = alpha, b = 2 Omega/(g w), S the light-cone root.
/// include_image = false drops the PV and residue pieces (free space).
TransitionResult transition_circular(const CircularKinematics& kin, const DetectorSpec& det,
                                     const QuadratureBudget& budget, bool include_image = true);

/// Same reduction for the hyperbolic worldline. The thermal kernel splits as
/// a^2/4 csch^2(a s/2) = 1/s^2 + remainder; the 1/(s-i0)^2 piece is exactly
/// the static term, the remainder is Gaussian-damped regular, and the image
/// kernel 4 a^{-2} sinh^2(a s/2) - 4 dz^2 has the single root
/// S_u = (2/a) asinh(a dz) handled as PV + residue.
TransitionResult transition_uniform(const UniformKinematics& kin, const DetectorSpec& det,
                                    const QuadratureBudget& budget, bool include_image = true);

}  // namespace udw
