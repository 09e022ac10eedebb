#include "udw/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <string>

#include "udw/errors.hpp"
#include "udw/quadrature.hpp"

namespace udw {

namespace {

constexpr double kPi = 3.141592653589793;
constexpr double kInv4Pi2 = 0.02533029591058444;  // 1/(4 pi^2)

struct Axis {
  std::vector<double> x;
  std::vector<double> w;
};

// A singular feature of the integrand on one axis: a point (lo == hi,
// the regulator-width light-cone crossing) or an interval (a band swept
// by the zero set). fine_h is the spacing the feature needs.
struct AxisFeature {
  double lo = 0;
  double hi = 0;
  double fine_h = 1e-3;
};

// Trapezoid error telescopes only on a smoothly varying mesh, so the
// nodes come from a smooth density map: rho(s) = 1 + sum of bumps with
// closed-form antiderivative Xi(s); nodes are uniform in Xi and the
// mapped rule integrates f(s(xi)) / rho with spectral-grade accuracy
// for these C-infinity integrands.
Axis make_axis(double lo, double hi, int base_points, const std::vector<AxisFeature>& feats) {
  const double base_h = (hi - lo) / base_points;
  struct Bump {
    double c, w, amp;    // sech^2 point bump
    bool plateau;
    double b_lo, b_hi;   // tanh-edged plateau for interval features
  };
  std::vector<Bump> bumps;
  for (const AxisFeature& f : feats) {
    if (f.hi + 1.0 < lo || f.lo - 1.0 > hi) continue;
    const double amp = std::fmax(base_h / f.fine_h - 1.0, 0.0);
    if (amp <= 0.0) continue;
    if (f.hi > f.lo) {
      bumps.push_back({0, 0.15, amp, true, f.lo - 0.2, f.hi + 0.2});
    } else {
      bumps.push_back({f.lo, 0.5, amp, false, 0, 0});
    }
  }
  auto density = [&](double s) {
    double r = 1.0;
    for (const Bump& b : bumps) {
      if (b.plateau) {
        r += 0.5 * b.amp *
             (std::tanh((s - b.b_lo) / b.w) - std::tanh((s - b.b_hi) / b.w));
      } else {
        const double c = std::cosh((s - b.c) / b.w);
        r += b.amp / (c * c);
      }
    }
    return r;
  };
  auto xi_of = [&](double s) {
    double v = s;
    for (const Bump& b : bumps) {
      if (b.plateau) {
        v += 0.5 * b.amp * b.w *
             (std::log(std::cosh((s - b.b_lo) / b.w)) -
              std::log(std::cosh((s - b.b_hi) / b.w)));
      } else {
        v += b.amp * b.w * std::tanh((s - b.c) / b.w);
      }
    }
    return v;
  };

  const double xi_lo = xi_of(lo);
  const double xi_hi = xi_of(hi);
  const int n = std::max(std::max(base_points, static_cast<int>(std::ceil((xi_hi - xi_lo) / base_h))), 8);
  const double dxi = (xi_hi - xi_lo) / n;

  Axis ax;
  ax.x.resize(n + 1);
  ax.w.resize(n + 1);
  double s = lo;
  for (int j = 0; j <= n; ++j) {
    const double target = xi_lo + j * dxi;
    for (int it = 0; it < 8; ++it) {
      const double err = xi_of(s) - target;
      s -= err / density(s);
      if (std::fabs(err) < 1e-12 * (1.0 + std::fabs(target))) break;
    }
    s = std::clamp(s, lo, hi);
    ax.x[j] = s;
    ax.w[j] = dxi / density(s);
  }
  ax.x.front() = lo;
  ax.x.back() = hi;
  ax.w.front() *= 0.5;
  ax.w.back() *= 0.5;
  return ax;
}

void validate(const EpsilonLadder& lad) {
  if (lad.eps.empty()) throw Error("EpsilonLadder: empty ladder");
  for (std::size_t i = 0; i < lad.eps.size(); ++i) {
    if (!(lad.eps[i] > 0)) throw Error("EpsilonLadder: eps must be positive");
    if (i > 0 && !(lad.eps[i] < lad.eps[i - 1])) {
      throw Error("EpsilonLadder: eps must be strictly descending");
    }
  }
  if (lad.extrapolation_order < 1) throw Error("EpsilonLadder: order must be >= 1");
  if (lad.grid_points_per_dim < 64) throw Error("EpsilonLadder: grid too coarse");
  if (!(lad.domain_halfwidth >= 4.0)) throw Error("EpsilonLadder: halfwidth must be >= 4 sigma");
}

// Neville tableau of the ladder values evaluated at eps = 0, polynomial
// degree capped at `order`. Successive diagonal entries must settle.
OracleEval extrapolate(const std::vector<double>& eps, std::vector<std::complex<double>> vals,
                       int order) {
  const std::size_t n = eps.size();
  std::vector<std::vector<std::complex<double>>> t(n);
  std::vector<std::complex<double>> diag(n);
  for (std::size_t i = 0; i < n; ++i) {
    t[i].assign(std::min<std::size_t>(i, order) + 1, {});
    t[i][0] = vals[i];
    for (std::size_t j = 1; j < t[i].size(); ++j) {
      const double ei = eps[i];
      const double ej = eps[i - j];
      t[i][j] = (ei * t[i - 1][j - 1] - ej * t[i][j - 1]) / (ei - ej);
    }
    diag[i] = t[i].back();
  }
  OracleEval out;
  out.per_eps = std::move(vals);
  out.value = diag[n - 1];
  if (n >= 2) out.stability = std::abs(diag[n - 1] - diag[n - 2]);
  for (std::size_t i = 2; i < n; ++i) {
    const double d_prev = std::abs(diag[i - 1] - diag[i - 2]);
    const double d_cur = std::abs(diag[i] - diag[i - 1]);
    if (d_cur > 10.0 * d_prev + 1e-13 * (1.0 + std::abs(diag[i]))) {
      throw ExtrapolationUnstable("oracle: diagonal increments grow (" + std::to_string(d_cur) +
                                  " after " + std::to_string(d_prev) + ")");
    }
  }
  return out;
}

inline std::complex<double> cinv(double re, double im) {
  const double n = re * re + im * im;
  return {re / n, -im / n};
}

// ---- transition probability, circular worldline ----

std::complex<double> p_circ_at_eps(const OracleCircular& tc, double gap,
                                   const EpsilonLadder& lad, bool image, double eps,
                                   const std::vector<AxisFeature>& sing) {
  const double v = std::fabs(tc.omega) * tc.radius;
  const double gamma = 1.0 / std::sqrt(1.0 - v * v);
  const double hw = lad.domain_halfwidth;

  const Axis su = make_axis(-hw, hw, lad.grid_points_per_dim, {});
  const Axis ss = make_axis(-2.0 * hw, 2.0 * hw, lad.grid_points_per_dim, sing);

  // chi(tau) chi(tau') e^{-i gap (tau-tau')} W factorizes in (u, s);
  // the tensor trapezoid of a product integrand is the product of sums.
  double usum = 0.0;
  for (std::size_t i = 0; i < su.x.size(); ++i) usum += su.w[i] * std::exp(-su.x[i] * su.x[i]);

  const double r4 = 4.0 * tc.radius * tc.radius;
  const double z4 = 4.0 * tc.z * tc.z;
  std::complex<double> ssum = 0.0;
  for (std::size_t i = 0; i < ss.x.size(); ++i) {
    const double s = ss.x[i];
    const double sn = std::sin(0.5 * gamma * tc.omega * s);
    const double dfree_re = gamma * gamma * s * s - r4 * sn * sn - eps * eps;
    const double d_im = -2.0 * eps * gamma * s;
    std::complex<double> w = -kInv4Pi2 * cinv(dfree_re, d_im);
    if (image) w += kInv4Pi2 * cinv(dfree_re - z4, d_im);
    const double env = ss.w[i] * std::exp(-0.25 * s * s);
    ssum += env * std::complex<double>(std::cos(gap * s), -std::sin(gap * s)) * w;
  }
  return usum * ssum;
}

// ---- transition probability, hyperbolic worldline ----
// The time-ordering regulator is applied as a proper-time shift,
// sinh(a(s - i eps)/2): the coordinate-time form picks up a cosh(a u)
// factor that grows without bound along the Gaussian window and pushes
// every usable ladder outside the asymptotic regime. Both prescriptions
// select the same boundary value (dt/ds > 0).

std::complex<double> p_unif_at_eps(const OracleUniform& tu, double gap,
                                   const EpsilonLadder& lad, bool image, double eps,
                                   const std::vector<AxisFeature>& sing) {
  const double a = tu.accel;
  const double hw = lad.domain_halfwidth;
  const Axis au = make_axis(-hw, hw, lad.grid_points_per_dim, {});
  const Axis as = make_axis(-2.0 * hw, 2.0 * hw, lad.grid_points_per_dim, sing);

  double usum = 0.0;
  for (std::size_t i = 0; i < au.x.size(); ++i) usum += au.w[i] * std::exp(-au.x[i] * au.x[i]);

  const double z4 = 4.0 * tu.z * tu.z;
  const double inv_a2 = 4.0 / (a * a);
  std::complex<double> ssum = 0.0;
  for (std::size_t j = 0; j < as.x.size(); ++j) {
    const double s = as.x[j];
    if (0.5 * a * std::fabs(s) > 300.0) continue;  // W underflows
    const std::complex<double> sh = std::sinh(0.5 * a * std::complex<double>(s, -eps));
    const std::complex<double> den = inv_a2 * sh * sh;
    std::complex<double> w = -kInv4Pi2 / den;
    if (image) w += kInv4Pi2 / (den - z4);
    ssum += as.w[j] * std::exp(-0.25 * s * s) *
            std::complex<double>(std::cos(gap * s), -std::sin(gap * s)) * w;
  }
  return usum * ssum;
}

// ---- nonlocal term X, coaxial circular pair (general omega) ----

struct CircPairGeom {
  double ra, rb, wa, wb, ga, gb, dd, dz, img_shift;
};

std::complex<double> x_circ_at_eps(const CircPairGeom& g, double gap, const EpsilonLadder& lad,
                                   bool image, double eps,
                                   const std::vector<AxisFeature>& sing_s, double fine_u) {
  const double gmax = std::fmax(g.ga, g.gb);
  const double hu = lad.domain_halfwidth * gmax;
  const Axis auax = make_axis(-hu, hu,
                              std::max<int>(lad.grid_points_per_dim,
                                            fine_u > 0 ? int(2 * hu / fine_u) : 0),
                              {});
  const Axis asax = make_axis(0.0, 2.0 * hu, lad.grid_points_per_dim, sing_s);

  const double spatial0 = g.dd * g.dd + g.ra * g.ra + g.rb * g.rb;
  const double r2ab = 2.0 * g.ra * g.rb;
  const double dwab = g.wa - g.wb;

  const double ia2 = 0.5 / (g.ga * g.ga);
  const double ib2 = 0.5 / (g.gb * g.gb);
  const double ia = 1.0 / g.ga;
  const double ib = 1.0 / g.gb;
  const double meas = 1.0 / (g.ga * g.gb);

  std::complex<double> total = 0.0;
  for (std::size_t i = 0; i < auax.x.size(); ++i) {
    const double u = auax.x[i];
    const double wu = auax.w[i];
    std::complex<double> row = 0.0;
    for (std::size_t j = 0; j < asax.x.size(); ++j) {
      const double s = asax.x[j];
      const double um = u - s;
      // exponents of the two orderings (B later / A later)
      const double e1 = -u * u * ib2 - um * um * ia2;
      const double e2 = -u * u * ia2 - um * um * ib2;
      if (e1 < -700.0 && e2 < -700.0) continue;
      const double sre = s * s - eps * eps;
      const double sim = 2.0 * s * eps;
      const double f1_re = spatial0 - r2ab * std::cos(dwab * u - g.wa * s) - sre;
      const double f2_re = spatial0 - r2ab * std::cos(dwab * u + g.wb * s) - sre;
      std::complex<double> w1 = cinv(f1_re, -sim);
      std::complex<double> w2 = cinv(f2_re, -sim);
      if (image) {
        w1 -= cinv(f1_re + g.img_shift, -sim);
        w2 -= cinv(f2_re + g.img_shift, -sim);
      }
      const double p1 = -gap * (u * ib + um * ia);
      const double p2 = -gap * (u * ia + um * ib);
      const std::complex<double> t1 =
          std::exp(e1) * std::complex<double>(std::cos(p1), std::sin(p1)) * w1;
      const std::complex<double> t2 =
          std::exp(e2) * std::complex<double>(std::cos(p2), std::sin(p2)) * w2;
      row += asax.w[j] * (t1 + t2);
    }
    total += wu * row;
  }
  return -meas * kInv4Pi2 * total;
}

// ---- nonlocal term X, uniform pair ----

std::complex<double> x_unif_at_eps(double a, double dd, double img_shift, double gap,
                                   const EpsilonLadder& lad, bool image, double eps,
                                   const std::vector<AxisFeature>& sing_s) {
  const double hw = lad.domain_halfwidth;
  const Axis au = make_axis(-hw, hw, lad.grid_points_per_dim, {});
  const Axis as = make_axis(0.0, 2.0 * hw, lad.grid_points_per_dim, sing_s);

  std::complex<double> usum = 0.0;
  for (std::size_t i = 0; i < au.x.size(); ++i) {
    const double u = au.x[i];
    const double ph = -2.0 * gap * u;
    usum += au.w[i] * std::exp(-u * u) * std::complex<double>(std::cos(ph), std::sin(ph));
  }

  const double inv_a2 = 4.0 / (a * a);
  const double dd2 = dd * dd;
  std::complex<double> ssum = 0.0;
  for (std::size_t j = 0; j < as.x.size(); ++j) {
    const double s = as.x[j];
    if (0.5 * a * s > 300.0) continue;
    const std::complex<double> sh = std::sinh(0.5 * a * std::complex<double>(s, eps));
    const std::complex<double> f = dd2 - inv_a2 * sh * sh;
    std::complex<double> w = 1.0 / f;
    if (image) w -= 1.0 / (f + img_shift);
    ssum += as.w[j] * std::exp(-0.25 * s * s) * w;
  }
  // both time orderings contribute equally
  return -2.0 * kInv4Pi2 * usum * ssum;
}

double max_step_for(double freq) {
  return freq > 0 ? std::min(0.25, kPi / (8.0 * freq)) : 0.25;
}

}  // namespace

OracleEval oracle_transition(const OracleTrajectory& traj, const DetectorSpec& det,
                             const EpsilonLadder& ladder, bool include_image) {
  validate(ladder);
  const double fine_h = ladder.eps.back() / 24.0;
  std::vector<std::complex<double>> vals;
  vals.reserve(ladder.eps.size());

  if (std::holds_alternative<OracleCircular>(traj)) {
    const OracleCircular tc = std::get<OracleCircular>(traj);
    const double v = std::fabs(tc.omega) * tc.radius;
    if (!(v < 1.0)) throw NonPositiveParameter("oracle: |omega| R must be < 1");
    const double gamma = 1.0 / std::sqrt(1.0 - v * v);
    // singular s: double pole at 0, plus the image light-cone crossings
    std::vector<AxisFeature> sing = {{0.0, 0.0, fine_h}};
    if (include_image) {
      RealFn dimg = [&](double s) {
        const double sn = std::sin(0.5 * gamma * tc.omega * s);
        return gamma * gamma * s * s - 4.0 * tc.radius * tc.radius * sn * sn -
               4.0 * tc.z * tc.z;
      };
      const PoleSet ps = bracket_all_roots(dimg, 2.0 * tc.z + 0.5,
                                           max_step_for(0.5 * gamma * std::fabs(tc.omega)));
      for (double r : ps.roots) {
        sing.push_back({r, r, fine_h});
        sing.push_back({-r, -r, fine_h});
      }
    }
    for (double e : ladder.eps) {
      vals.push_back(p_circ_at_eps(tc, det.gap_omega, ladder, include_image, e, sing));
    }
  } else {
    const OracleUniform tu = std::get<OracleUniform>(traj);
    if (!(tu.accel > 0)) throw NonPositiveParameter("oracle: a must be > 0");
    std::vector<AxisFeature> sing = {{0.0, 0.0, fine_h}};
    if (include_image) {
      const double root = 2.0 / tu.accel * std::asinh(tu.accel * tu.z);
      sing.push_back({root, root, fine_h});
      sing.push_back({-root, -root, fine_h});
    }
    for (double e : ladder.eps) {
      vals.push_back(p_unif_at_eps(tu, det.gap_omega, ladder, include_image, e, sing));
    }
  }

  OracleEval out = extrapolate(ladder.eps, std::move(vals), ladder.extrapolation_order);
  if (std::fabs(out.value.imag()) > 1e-4 * std::fabs(out.value.real())) {
    throw ExtrapolationUnstable("oracle_transition: imaginary residual " +
                                std::to_string(out.value.imag()) + " vs real part " +
                                std::to_string(out.value.real()));
  }
  return out;
}

OracleEval oracle_x(const OraclePair& pair, const DetectorSpec& det, const EpsilonLadder& ladder,
                    bool include_image) {
  validate(ladder);
  const double fine_h = ladder.eps.back() / 24.0;
  std::vector<std::complex<double>> vals;
  vals.reserve(ladder.eps.size());

  if (std::holds_alternative<OracleCircular>(pair.det_a)) {
    if (!std::holds_alternative<OracleCircular>(pair.det_b)) {
      throw Error("oracle_x: mixed trajectory families are unsupported");
    }
    const OracleCircular A = std::get<OracleCircular>(pair.det_a);
    const OracleCircular B = std::get<OracleCircular>(pair.det_b);
    CircPairGeom g{};
    g.ra = A.radius;
    g.rb = B.radius;
    g.wa = A.omega;
    g.wb = B.omega;
    const double va = std::fabs(A.omega) * A.radius;
    const double vb = std::fabs(B.omega) * B.radius;
    if (!(va < 1.0 && vb < 1.0)) throw NonPositiveParameter("oracle_x: |omega| R must be < 1");
    g.ga = 1.0 / std::sqrt(1.0 - va * va);
    g.gb = 1.0 / std::sqrt(1.0 - vb * vb);
    g.dz = A.z;
    g.dd = B.z - A.z;
    if (!(g.dd > 0)) throw CoincidentDetectors("oracle_x: need z_B > z_A");
    g.img_shift = 4.0 * g.dd * g.dz + 4.0 * g.dz * g.dz;

    std::vector<AxisFeature> sing;
    double fine_u = -1.0;
    if (std::fabs(g.wa - g.wb) < 1e-14) {
      // synchronized: the singular locus is a set of s = const lines
      const double w = std::fabs(g.wa);
      RealFn dfree = [&](double s) {
        return g.dd * g.dd + g.ra * g.ra + g.rb * g.rb - 2.0 * g.ra * g.rb * std::cos(w * s) -
               s * s;
      };
      const double span = std::sqrt(g.dd * g.dd + (g.ra + g.rb) * (g.ra + g.rb));
      for (double r : bracket_all_roots(dfree, span + 1.0, max_step_for(w)).roots) {
        sing.push_back({r, r, fine_h});
      }
      if (include_image) {
        RealFn dimg = [&](double s) { return dfree(s) + g.img_shift; };
        const double span_i = std::sqrt(span * span + g.img_shift);
        for (double r : bracket_all_roots(dimg, span_i + 1.0, max_step_for(w)).roots) {
          sing.push_back({r, r, fine_h});
        }
      }
    } else {
      // general case: the zero set sweeps a band in s and every u; take a
      // uniformly fine u axis and blanket the s bands
      fine_u = ladder.eps.back() / 4.0;
      auto band = [&](double shift) {
        const double lo2 = g.dd * g.dd + (g.ra - g.rb) * (g.ra - g.rb) + shift;
        const double hi2 = g.dd * g.dd + (g.ra + g.rb) * (g.ra + g.rb) + shift;
        sing.push_back({std::sqrt(std::fmax(lo2, 0.0)), std::sqrt(hi2), 1.5 * fine_h});
      };
      band(0.0);
      if (include_image) band(g.img_shift);
    }
    for (double e : ladder.eps) {
      vals.push_back(x_circ_at_eps(g, det.gap_omega, ladder, include_image, e, sing, fine_u));
    }
  } else {
    if (!std::holds_alternative<OracleUniform>(pair.det_b)) {
      throw Error("oracle_x: mixed trajectory families are unsupported");
    }
    const OracleUniform A = std::get<OracleUniform>(pair.det_a);
    const OracleUniform B = std::get<OracleUniform>(pair.det_b);
    if (std::fabs(A.accel - B.accel) > 1e-14) {
      throw Error("oracle_x: uniform pair must share the acceleration");
    }
    const double dd = B.z - A.z;
    if (!(dd > 0)) throw CoincidentDetectors("oracle_x: need z_B > z_A");
    const double img_shift = 4.0 * dd * A.z + 4.0 * A.z * A.z;
    const double r0 = 2.0 / A.accel * std::asinh(0.5 * A.accel * dd);
    std::vector<AxisFeature> sing = {{r0, r0, fine_h}};
    if (include_image) {
      const double r1 = 2.0 / A.accel * std::asinh(0.5 * A.accel * (dd + 2.0 * A.z));
      sing.push_back({r1, r1, fine_h});
    }
    for (double e : ladder.eps) {
      vals.push_back(x_unif_at_eps(A.accel, dd, img_shift, det.gap_omega, ladder, include_image,
                                   e, sing));
    }
  }

  return extrapolate(ladder.eps, std::move(vals), ladder.extrapolation_order);
}

std::uint64_t ladder_hash(const EpsilonLadder& ladder) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  for (double e : ladder.eps) {
    std::uint64_t bits;
    static_assert(sizeof(bits) == sizeof(e));
    std::memcpy(&bits, &e, sizeof(bits));
    mix(bits);
  }
  mix(static_cast<std::uint64_t>(ladder.extrapolation_order));
  mix(static_cast<std::uint64_t>(ladder.grid_points_per_dim));
  std::uint64_t hw;
  std::memcpy(&hw, &ladder.domain_halfwidth, sizeof(hw));
  mix(hw);
  return h;
}

}  // namespace udw
