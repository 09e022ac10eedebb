#pragma once

#include <functional>
#include <vector>

namespace udw {

/// Tolerances and safety factors shared by every quadrature call.
struct QuadratureBudget {
  double abs_tol = 1e-10;
  double rel_tol = 1e-8;
  int max_subdivisions = 2000;    // interval splits, not accepted panels
  double pv_window_delta = 1e-3;  // half-width of the symmetric window around each pole
  double truncation_safety = 1.2;
};

/// Simple real zeros of a denominator on (0, upper], in increasing order,
/// with the derivative of the denominator at each.
struct PoleSet {
  std::vector<double> roots;
  std::vector<double> derivative_at_root;
};

struct IntegralResult {
  double value = 0;
  double err_est = 0;
};

using RealFn = std::function<double(double)>;

/// Integral over [0, inf) of a regular integrand bounded by
/// envelope_scale * e^{-alpha x^2}. Truncates at
/// x_max = truncation_safety * sqrt(ln(envelope_scale/abs_tol)/alpha),
/// then integrates adaptively (Simpson with Richardson acceptance).
/// `natural` caps the initial panel width (pass the integrand's
/// oscillation scale; <= 0 means the default pi/2).
/// Throws BudgetExhausted when the split budget runs out.
IntegralResult integrate_damped(const RealFn& f, double alpha, const QuadratureBudget& budget,
                                double envelope_scale = 1.0, double natural = -1.0);

/// PV integral over [0, inf) of f_num/g_den where g_den has exactly the
/// simple zeros in `poles`. Outside the windows [s_k - delta, s_k + delta]
/// the integrand is handled like integrate_damped (f_num carries the
/// e^{-alpha x^2} envelope). Inside each window the simple pole
/// c_k/(x - s_k), c_k = f_num(s_k)/g_den'(s_k), is subtracted; its PV over
/// a symmetric window is exactly zero and the regular remainder is
/// integrated adaptively. Windows clipped at x = 0 get the analytic
/// c_k log((hi-s_k)/(s_k-lo)) correction.
IntegralResult integrate_pv(const RealFn& f_num, const RealFn& g_den, const PoleSet& poles,
                            double alpha, const QuadratureBudget& budget,
                            double envelope_scale = 1.0, double natural = -1.0);

/// All simple roots of g on (0, upper]: uniform scan with step <= max_step
/// for sign changes, bisection to ~1e-12, derivative by central difference
/// (step 1e-6) or from g_prime when supplied. A |g| dip below 1e-10 with no
/// sign change, or a refined root with |g'| < 1e-8, throws DegeneratePole.
PoleSet bracket_all_roots(const RealFn& g, double upper, double max_step,
                          const RealFn* g_prime = nullptr);

}  // namespace udw
