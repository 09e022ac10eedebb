#pragma once

// Test-side reference implementations, independent of the library paths
// they check: a long-double complementary error function, a brute-force
// trapezoid, a shrinking-window principal-value evaluator, and a dense
// sign-scan root finder.

#include <cmath>
#include <functional>
#include <vector>

namespace testref {

// erfc in long double: Maclaurin series for |x| <= 2, Lentz continued
// fraction beyond, reflection for negative arguments.
inline long double erfc_ref(long double x) {
  if (x < -2.0L) return 2.0L - erfc_ref(-x);
  if (x <= 2.0L) {
    const long double x2 = x * x;
    long double term = x;
    long double sum = x;
    for (int n = 1; n < 200; ++n) {
      term *= -x2 / n;
      const long double add = term / (2 * n + 1);
      sum += add;
      if (fabsl(add) < 1e-22L * fabsl(sum)) break;
    }
    const long double two_over_sqrt_pi = 1.128379167095512573896158903121545172L;
    return 1.0L - sum * two_over_sqrt_pi;
  }
  const long double tiny = 1e-4000L;
  long double f = x;
  long double c = f;
  long double d = 0.0L;
  for (int n = 1; n < 500; ++n) {
    const long double a = 0.5L * n;
    d = x + a * d;
    if (fabsl(d) < tiny) d = tiny;
    c = x + a / c;
    if (fabsl(c) < tiny) c = tiny;
    d = 1.0L / d;
    const long double delta = c * d;
    f *= delta;
    if (fabsl(delta - 1.0L) < 1e-21L) break;
  }
  const long double sqrt_pi = 1.772453850905516027298167483341145183L;
  return expl(-x * x) / (sqrt_pi * f);
}

inline double trapezoid(const std::function<double(double)>& f, double a, double b, long n) {
  const double h = (b - a) / n;
  double sum = 0.5 * (f(a) + f(b));
  for (long i = 1; i < n; ++i) sum += f(a + i * h);
  return sum * h;
}

// Adaptive Simpson, self-contained (recursion on |S2-S|/15), used as the
// workhorse inside the window-shrinking PV reference below.
inline double simpson_ref(const std::function<double(double)>& f, double a, double b,
                          double tol, int depth = 0) {
  const double m = 0.5 * (a + b);
  const double fa = f(a), fm = f(m), fb = f(b);
  std::function<double(double, double, double, double, double, double, int)> rec =
      [&](double lo, double hi, double flo, double fmid, double fhi, double whole,
          int d) -> double {
    const double mid = 0.5 * (lo + hi);
    const double lmid = 0.5 * (lo + mid);
    const double rmid = 0.5 * (mid + hi);
    const double fl = f(lmid), fr = f(rmid);
    const double left = (mid - lo) / 6 * (flo + 4 * fl + fmid);
    const double right = (hi - mid) / 6 * (fmid + 4 * fr + fhi);
    const double diff = left + right - whole;
    if (std::fabs(diff) < 15 * tol * (hi - lo) / (b - a) || d > 40) {
      return left + right + diff / 15;
    }
    return rec(lo, mid, flo, fl, fmid, left, d + 1) +
           rec(mid, hi, fmid, fr, fhi, right, d + 1);
  };
  (void)depth;
  return rec(a, b, fa, fm, fb, (b - a) / 6 * (fa + 4 * fm + fb), 0);
}

// PV of f over [0, upper] with simple poles: symmetric windows of
// half-width delta excluded, then Richardson in delta (the excluded
// part is linear in delta).
inline double pv_window_ref(const std::function<double(double)>& f,
                            const std::vector<double>& poles, double upper) {
  auto pass = [&](double delta) {
    double total = 0;
    double lo = 0;
    for (double p : poles) {
      total += simpson_ref(f, lo, p - delta, 1e-12);
      lo = p + delta;
    }
    total += simpson_ref(f, lo, upper, 1e-12);
    return total;
  };
  const double i1 = pass(1e-4);
  const double i2 = pass(1e-5);
  return i2 + (i2 - i1) / 9.0;
}

// All roots of g on (0, upper] by dense scan + bisection.
inline std::vector<double> dense_scan_roots(const std::function<double(double)>& g,
                                            double upper, long n = 1000000) {
  std::vector<double> roots;
  const double h = upper / n;
  double prev = g(h * 1e-6);
  double xprev = h * 1e-6;
  for (long i = 1; i <= n; ++i) {
    const double x = i * h;
    const double cur = g(x);
    if (prev == 0.0) {
      roots.push_back(xprev);
    } else if (prev * cur < 0) {
      double lo = xprev, hi = x, flo = prev;
      for (int it = 0; it < 100; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = g(mid);
        if (flo * fm <= 0) {
          hi = mid;
        } else {
          lo = mid;
          flo = fm;
        }
      }
      roots.push_back(0.5 * (lo + hi));
    }
    prev = cur;
    xprev = x;
  }
  return roots;
}

}  // namespace testref
