#include "udw/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "udw/errors.hpp"

namespace udw {

namespace {

constexpr double kPi = 3.141592653589793;
constexpr double kDegeneracyFloor = 1e-8;
constexpr double kTangencyDip = 1e-10;

// Adaptive Simpson with the classic |S2-S1|/15 Richardson acceptance.
// The split counter is shared across every panel of one integral.
struct SimpsonWorker {
  const RealFn& f;
  int max_splits;
  double rel_tol = 0.0;  // loosens acceptance on panels with large values
  int splits = 0;
  double err_accum = 0;

  double recurse(double a, double b, double fa, double fm, double fb, double whole, double tol,
                 int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double s2 = left + right;
    const double diff = s2 - whole;
    if (std::fabs(diff) <= 15.0 * (tol + rel_tol * std::fabs(s2)) || depth > 48 ||
        (b - a) < 1e-13 * (std::fabs(a) + std::fabs(b) + 1.0)) {
      err_accum += std::fabs(diff) / 15.0;
      return s2 + diff / 15.0;
    }
    if (++splits > max_splits) {
      throw BudgetExhausted("integrate: subdivision budget exhausted (max_subdivisions=" +
                            std::to_string(max_splits) + ")");
    }
    return recurse(a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
           recurse(m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
  }

  double interval(double a, double b, double tol) {
    const double m = 0.5 * (a + b);
    const double fa = f(a);
    const double fm = f(m);
    const double fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return recurse(a, b, fa, fm, fb, whole, tol, 0);
  }

  // Pre-split [a,b] into panels no wider than `natural` so the error
  // estimate sees resolved structure; tolerance allotted per width.
  double region(double a, double b, double natural, double tol_total) {
    if (b <= a) return 0.0;
    const int n = std::max(1, static_cast<int>(std::ceil((b - a) / natural)));
    const double h = (b - a) / n;
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
      sum += interval(a + i * h, a + (i + 1) * h, std::max(tol_total / n, 1e-18));
    }
    return sum;
  }
};

double truncation_point(double alpha, double abs_tol, double safety, double envelope) {
  const double ratio = std::max(envelope, 1e-300) / std::max(abs_tol, 1e-300);
  const double lg = std::max(std::log(ratio), 1.0);
  return safety * std::sqrt(lg / alpha);
}

double truncation_bound(double alpha, double x_max, double envelope) {
  // integral of envelope*e^{-alpha x^2} beyond x_max
  return envelope * std::exp(-alpha * x_max * x_max) / (2.0 * alpha * x_max);
}

}  // namespace

IntegralResult integrate_damped(const RealFn& f, double alpha, const QuadratureBudget& budget,
                                double envelope_scale, double natural) {
  if (!(alpha > 0)) throw Error("integrate_damped: alpha must be > 0");
  if (natural <= 0) natural = 0.5 * kPi;
  const double x_max = truncation_point(alpha, budget.abs_tol, budget.truncation_safety,
                                        envelope_scale);
  SimpsonWorker w{f, budget.max_subdivisions, 0.3 * budget.rel_tol};
  IntegralResult r;
  r.value = w.region(0.0, x_max, std::min(natural, x_max / 8.0), 0.5 * budget.abs_tol);
  r.err_est = w.err_accum + truncation_bound(alpha, x_max, envelope_scale);
  return r;
}

IntegralResult integrate_pv(const RealFn& f_num, const RealFn& g_den, const PoleSet& poles,
                            double alpha, const QuadratureBudget& budget, double envelope_scale,
                            double natural) {
  if (!(alpha > 0)) throw Error("integrate_pv: alpha must be > 0");
  if (natural <= 0) natural = 0.5 * kPi;
  const std::size_t np = poles.roots.size();
  if (poles.derivative_at_root.size() != np) {
    throw Error("integrate_pv: PoleSet size mismatch");
  }
  const double delta = budget.pv_window_delta;
  for (std::size_t k = 0; k < np; ++k) {
    if (std::fabs(poles.derivative_at_root[k]) < kDegeneracyFloor) {
      throw DegeneratePole("integrate_pv: |g'| = " +
                           std::to_string(poles.derivative_at_root[k]) + " at root " +
                           std::to_string(poles.roots[k]));
    }
    if (k > 0 && poles.roots[k] - poles.roots[k - 1] <= 2.0 * delta) {
      throw WindowOverlap("integrate_pv: pole windows overlap near x = " +
                          std::to_string(poles.roots[k]));
    }
  }

  double x_max = truncation_point(alpha, budget.abs_tol, budget.truncation_safety,
                                  envelope_scale);
  // Never truncate inside or just short of a pole's subtraction zone.
  for (std::size_t k = 0; k < np; ++k) {
    if (poles.roots[k] <= x_max + delta) x_max = std::max(x_max, poles.roots[k] + 1.0);
  }

  IntegralResult out;

  // Around each pole, work with f/g - c_k/(x - s_k) over a zone wide
  // enough that the bare ratio never gets steep; the subtracted term's
  // PV over the symmetric inner window is zero and its integral over
  // the rest of the zone is the explicit log below. Zones shrink only
  // to stay disjoint and inside [0, x_max].
  // Work from machine-polished roots: the folded core below needs the
  // pole centred to the evaluation noise of g_den, not to the caller's
  // bracketing tolerance.
  std::vector<double> root(np);
  for (std::size_t k = 0; k < np; ++k) {
    double r = poles.roots[k];
    const double gp = poles.derivative_at_root[k];
    for (int it = 0; it < 4; ++it) r -= g_den(r) / gp;
    root[k] = r;
  }

  std::vector<double> zone_lo(np), zone_hi(np);
  std::vector<std::size_t> active;
  for (std::size_t k = 0; k < np; ++k) {
    const double s = root[k];
    if (s > x_max) break;
    double reach = 0.5;
    if (k > 0) reach = std::min(reach, 0.45 * (s - root[k - 1]));
    if (k + 1 < np) reach = std::min(reach, 0.45 * (root[k + 1] - s));
    reach = std::max(reach, 2.0 * delta);
    zone_lo[k] = std::max(0.0, s - reach);
    zone_hi[k] = std::min(x_max, s + reach);
    active.push_back(k);
  }

  // Regular pieces between zones.
  RealFn ratio = [&](double x) { return f_num(x) / g_den(x); };
  SimpsonWorker wr{ratio, budget.max_subdivisions, 0.3 * budget.rel_tol};
  double cursor = 0.0;
  std::vector<std::pair<double, double>> regions;
  for (std::size_t k : active) {
    if (zone_lo[k] > cursor) regions.emplace_back(cursor, zone_lo[k]);
    cursor = zone_hi[k];
  }
  if (cursor < x_max) regions.emplace_back(cursor, x_max);
  const std::size_t n_pieces = regions.size() + active.size();
  const double piece_tol = 0.5 * budget.abs_tol / std::max<std::size_t>(n_pieces, 1);
  for (const auto& reg : regions) {
    out.value += wr.region(reg.first, reg.second,
                           std::min(natural, (reg.second - reg.first) / 2.0 + 1e-30),
                           piece_tol);
  }
  out.err_est += wr.err_accum;

  // Zone pieces. The c_k/(x - s_k) subtraction over the symmetric part
  // of the zone cancels pairwise, so the core is integrated in folded
  // form r(s+t) + r(s-t) = (f+ g- + f- g+)/(g+ g-), which stays finite
  // to roundoff even where f/g alone has lost all digits. The leftover
  // one-sided strip keeps the explicit subtraction, and the subtracted
  // term contributes the closed-form log of the zone asymmetry.
  for (std::size_t k : active) {
    const double s = root[k];
    const double c = f_num(s) / poles.derivative_at_root[k];
    const double w_sym = std::min(s - zone_lo[k], zone_hi[k] - s);

    RealFn folded = [&](double t) {
      const double gp = g_den(s + t);
      const double gm = g_den(s - t);
      return (f_num(s + t) * gm + f_num(s - t) * gp) / (gp * gm);
    };
    // Roundoff in g_den amplifies like 1/t^2 as the pair closes on the
    // root, so the innermost stretch is integrated from the even-in-t
    // quadratic through two stably evaluated samples instead of handing
    // the adaptive rule a noise patch.
    const double t0 = std::fmin(3.2e-4 * std::fmax(1.0, s), 0.25 * w_sym);
    const double p1 = folded(t0);
    const double p2 = folded(2.0 * t0);
    const double curv = (p2 - p1) / (3.0 * t0 * t0);
    out.value += t0 * (p1 - 2.0 * curv * t0 * t0 / 3.0);
    out.err_est += 0.1 * std::fabs(p2 - p1) * t0;

    SimpsonWorker wf{folded, budget.max_subdivisions, 0.3 * budget.rel_tol};
    out.value += wf.region(t0, w_sym, std::min(natural, 0.25 * w_sym + 1e-30), piece_tol);
    out.err_est += wf.err_accum;

    RealFn strip = [&](double x) { return f_num(x) / g_den(x) - c / (x - s); };
    SimpsonWorker ws{strip, budget.max_subdivisions, 0.3 * budget.rel_tol};
    if (s - zone_lo[k] > w_sym * (1.0 + 1e-12)) {
      out.value += ws.region(zone_lo[k], s - w_sym,
                             std::min(natural, 0.5 * (s - w_sym - zone_lo[k]) + 1e-30),
                             piece_tol);
    } else if (zone_hi[k] - s > w_sym * (1.0 + 1e-12)) {
      out.value += ws.region(s + w_sym, zone_hi[k],
                             std::min(natural, 0.5 * (zone_hi[k] - s - w_sym) + 1e-30),
                             piece_tol);
    }
    out.err_est += ws.err_accum;

    const double lo_gap = s - zone_lo[k];
    const double hi_gap = zone_hi[k] - s;
    if (std::fabs(hi_gap - lo_gap) > 1e-15) out.value += c * std::log(hi_gap / lo_gap);
  }

  const double tail_den = std::fabs(g_den(x_max));
  out.err_est += truncation_bound(alpha, x_max, envelope_scale) / std::max(tail_den, 0.05);
  return out;
}

PoleSet bracket_all_roots(const RealFn& g, double upper, double max_step,
                          const RealFn* g_prime) {
  if (!(upper > 0) || !(max_step > 0)) throw Error("bracket_all_roots: bad scan range");
  const int n = std::max(2, static_cast<int>(std::ceil(upper / max_step)));
  const double h = upper / n;
  std::vector<double> gv(n + 1);
  for (int i = 0; i <= n; ++i) gv[i] = g(i * h);

  PoleSet out;
  auto push_root = [&](double r) {
    double gp;
    if (g_prime != nullptr) {
      gp = (*g_prime)(r);
    } else {
      const double st = 1e-6;
      gp = (g(r + st) - g(r - st)) / (2.0 * st);
    }
    if (std::fabs(gp) < kDegeneracyFloor) {
      throw DegeneratePole("bracket_all_roots: nearly tangent root at x = " + std::to_string(r));
    }
    if (!out.roots.empty() && r - out.roots.back() < 0.5 * h) return;
    out.roots.push_back(r);
    out.derivative_at_root.push_back(gp);
  };

  for (int i = 0; i < n; ++i) {
    const double a = i * h;
    const double b = (i + 1) * h;
    if (gv[i] == 0.0) {
      if (a > 0.0) {
        const double before = (i > 0) ? gv[i - 1] : gv[i + 1];
        if (before * gv[i + 1] > 0.0) {
          throw DegeneratePole("bracket_all_roots: touching zero at x = " + std::to_string(a));
        }
        push_root(a);
      }
      continue;
    }
    // dip without crossing
    if (i > 0 && std::fabs(gv[i]) < kTangencyDip && gv[i - 1] * gv[i] > 0.0 &&
        gv[i] * gv[i + 1] > 0.0) {
      throw DegeneratePole("bracket_all_roots: |g| dips below 1e-10 without sign change at x = " +
                           std::to_string(a));
    }
    if (gv[i] * gv[i + 1] < 0.0) {
      double lo = a;
      double hi = b;
      double glo = gv[i];
      for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double gm = g(mid);
        if (gm == 0.0) {
          lo = hi = mid;
          break;
        }
        if (glo * gm < 0.0) {
          hi = mid;
        } else {
          lo = mid;
          glo = gm;
        }
        if (hi - lo < 1e-13 * std::fmax(1.0, std::fabs(mid))) break;
      }
      push_root(0.5 * (lo + hi));
    }
  }
  if (gv[n] == 0.0) push_root(upper);
  return out;
}

}  // namespace udw
