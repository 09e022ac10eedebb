#include "udw/critical.hpp"

#include <cmath>
#include <functional>
#include <vector>

#include "udw/errors.hpp"
#include "udw/response.hpp"

namespace udw {

namespace {

struct Curve {
  std::vector<double> value;
  std::vector<double> err;
};

Curve p_vs_r(double a, double gap, double dz, int n, double rmax,
             const QuadratureBudget& budget) {
  Curve c;
  c.value.reserve(n);
  c.err.reserve(n);
  const DetectorSpec det{gap};
  for (int j = 1; j <= n; ++j) {
    const double r = rmax * j / n;
    const TransitionResult t = transition_circular(derive_circular(a, r, dz), det, budget);
    c.value.push_back(t.p_over_lambda2);
    c.err.push_back(t.err_est);
  }
  return c;
}

// interior strict local maximum above the quadrature noise
bool has_interior_peak(const Curve& c) {
  for (std::size_t j = 1; j + 1 < c.value.size(); ++j) {
    const double guard =
        5.0 * (c.err[j] + std::fmax(c.err[j - 1], c.err[j + 1])) + 1e-14;
    if (c.value[j] > c.value[j - 1] + guard && c.value[j] > c.value[j + 1] + guard) return true;
  }
  return false;
}

// does any pair of the P(a; R) family curves cross on the a-grid?
bool curves_intersect(const CriticalQuery& q, double gap, double dz, bool include_image,
                      const QuadratureBudget& budget) {
  const DetectorSpec det{gap};
  const std::size_t nr = q.r_family.size();
  std::vector<Curve> fam(nr);
  for (std::size_t i = 0; i < nr; ++i) {
    fam[i].value.reserve(q.grid_points);
    fam[i].err.reserve(q.grid_points);
  }
  for (int j = 1; j <= q.grid_points; ++j) {
    const double a = q.axis_max_a * j / q.grid_points;
    for (std::size_t i = 0; i < nr; ++i) {
      const TransitionResult t =
          transition_circular(derive_circular(a, q.r_family[i], dz), det, budget,
                              include_image);
      fam[i].value.push_back(t.p_over_lambda2);
      fam[i].err.push_back(t.err_est);
    }
  }
  for (std::size_t i = 0; i < nr; ++i) {
    for (std::size_t l = i + 1; l < nr; ++l) {
      int prev_sign = 0;
      for (int j = 0; j < q.grid_points; ++j) {
        const double g = fam[i].value[j] - fam[l].value[j];
        const double guard = 5.0 * (fam[i].err[j] + fam[l].err[j]) + 1e-14;
        if (std::fabs(g) <= guard) continue;
        const int sign = g > 0 ? 1 : -1;
        if (prev_sign != 0 && sign != prev_sign) return true;
        prev_sign = sign;
      }
    }
  }
  return false;
}

CriticalResult bisect_bool(double lo, double hi, double tol, int* evals,
                           const std::function<bool(double)>& pred) {
  bool plo = pred(lo);
  bool phi = pred(hi);
  *evals += 2;
  if (plo == phi) {
    throw NoTransitionInInterval("find_critical: predicate identical at both interval ends");
  }
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    ++*evals;
    if (pred(mid) == phi) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  CriticalResult r;
  r.threshold = 0.5 * (lo + hi);
  r.final_interval = hi - lo;
  return r;
}

}  // namespace

CriticalKind critical_kind_from_string(const std::string& s) {
  if (s == "accel_monotonicity") return CriticalKind::AccelMonotonicity;
  if (s == "dz_intersection") return CriticalKind::DzIntersection;
  if (s == "omega_intersection") return CriticalKind::OmegaIntersection;
  if (s == "circ_uniform_crossing") return CriticalKind::CircUniformCrossing;
  throw ConfigError("unknown critical kind: " + s);
}

CriticalResult find_critical(const CriticalQuery& q, const QuadratureBudget& budget) {
  if (!(q.lo < q.hi)) throw ConfigError("find_critical: need lo < hi");
  int evals = 0;
  CriticalResult res;

  switch (q.kind) {
    case CriticalKind::AccelMonotonicity: {
      auto pred = [&](double a) {
        return !has_interior_peak(
            p_vs_r(a, q.omega_sigma, q.dz_sigma, q.grid_points, q.axis_max_r, budget));
      };
      res = bisect_bool(q.lo, q.hi, q.tol, &evals, pred);
      break;
    }
    case CriticalKind::DzIntersection: {
      auto pred = [&](double dz) {
        return !curves_intersect(q, q.omega_sigma, dz, true, budget);
      };
      res = bisect_bool(q.lo, q.hi, q.tol, &evals, pred);
      break;
    }
    case CriticalKind::OmegaIntersection: {
      // free-space limit: with the image term disabled the threshold no
      // longer depends on the (dropped) boundary distance
      auto pred = [&](double gap) {
        return curves_intersect(q, gap, q.dz_sigma, false, budget);
      };
      res = bisect_bool(q.lo, q.hi, q.tol, &evals, pred);
      break;
    }
    case CriticalKind::CircUniformCrossing: {
      const DetectorSpec det{q.omega_sigma};
      auto diff = [&](double a) {
        const TransitionResult pu =
            transition_uniform(derive_uniform(a, q.dz_sigma), det, budget);
        const TransitionResult pc =
            transition_circular(derive_circular(a, q.r_sigma, q.dz_sigma), det, budget);
        return pu.p_over_lambda2 - pc.p_over_lambda2;
      };
      double flo = diff(q.lo);
      double fhi = diff(q.hi);
      evals += 2;
      if (flo == 0.0) {
        res.threshold = q.lo;
        break;
      }
      if (fhi == 0.0) {
        res.threshold = q.hi;
        break;
      }
      if ((flo > 0) == (fhi > 0)) {
        throw NoTransitionInInterval("circ_uniform_crossing: no sign change on the interval");
      }
      double lo = q.lo;
      double hi = q.hi;
      while (hi - lo > q.tol) {
        const double mid = 0.5 * (lo + hi);
        const double fm = diff(mid);
        ++evals;
        if (fm == 0.0) {
          lo = hi = mid;
          break;
        }
        if ((fm > 0) == (flo > 0)) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
      }
      res.threshold = 0.5 * (lo + hi);
      res.final_interval = hi - lo;
      break;
    }
  }
  res.predicate_evals = evals;
  return res;
}

}  // namespace udw
