#include "udw/specfun.hpp"

#include <cmath>
#include <limits>

namespace udw {

namespace {

// Maclaurin series of erf(x); converges fast for |x| <= 1.5 where the
// largest term is < 10 and rounding stays near machine epsilon.
double erf_series(double x) {
  const double x2 = x * x;
  double term = x;  // n = 0 term before the 2/sqrt(pi) factor
  double sum = x;
  for (int n = 1; n < 80; ++n) {
    term *= -x2 / n;
    const double add = term / (2 * n + 1);
    sum += add;
    if (std::fabs(add) < 1e-18 * std::fabs(sum)) break;
  }
  return sum * 1.1283791670955126;  // 2/sqrt(pi)
}

// Continued fraction for sqrt(pi) e^{x^2} erfc(x) = 1/(x+ (1/2)/(x+ (2/2)/(x+ ...)))
// evaluated with the modified Lentz algorithm. Good for x >= 1.5.
double erfc_cf(double x) {
  const double tiny = 1e-300;
  double f = x;
  double c = f;
  double d = 0.0;
  for (int n = 1; n < 300; ++n) {
    const double a = 0.5 * n;
    d = x + a * d;
    if (std::fabs(d) < tiny) d = tiny;
    c = x + a / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = c * d;
    f *= delta;
    if (std::fabs(delta - 1.0) < 1e-17) break;
  }
  // erfc(x) = e^{-x^2}/sqrt(pi) * (1/f)
  return std::exp(-x * x) / (1.7724538509055160 * f);
}

}  // namespace

double erfc(double x) {
  if (std::isnan(x)) return std::numeric_limits<double>::quiet_NaN();
  if (x > 27.0) return 0.0;  // below double underflow of e^{-x^2}
  if (x < -1.5) return 2.0 - erfc_cf(-x);
  if (x <= 1.5) return 1.0 - erf_series(x);
  return erfc_cf(x);
}

double vacuum_static_term(double omega_sigma) {
  const double w = omega_sigma;
  static constexpr double inv4pi = 0.07957747154594767;
  static constexpr double sqrt_pi = 1.7724538509055160;
  return inv4pi * (std::exp(-w * w) - sqrt_pi * w * erfc(w));
}

}  // namespace udw
