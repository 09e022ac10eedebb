#pragma once

#include <string>
#include <vector>

#include "udw/quadrature.hpp"

namespace udw {

/// The four threshold searches. Each bisects a boolean predicate built
/// from transition-probability curves:
///  - AccelMonotonicity: smallest a*sigma above which P(R) has no interior
///    local maximum on R/sigma in (0, 10] (grid_points samples).
///  - DzIntersection: smallest dz/sigma above which no pair of the
///    r_family curves P(a; R) crosses on a*sigma in (0, 40].
///  - OmegaIntersection: smallest Omega*sigma above which at least one
///    pair of the r_family curves crosses even with the image term
///    disabled (free space, the hardest regime for intersections).
///  - CircUniformCrossing: root of P_uniform(a) - P_circular(a; R) at the
///    fixed (R, Omega, dz).
enum class CriticalKind {
  AccelMonotonicity,
  DzIntersection,
  OmegaIntersection,
  CircUniformCrossing
};

CriticalKind critical_kind_from_string(const std::string& s);

struct CriticalQuery {
  CriticalKind kind = CriticalKind::AccelMonotonicity;
  double omega_sigma = 0.1;  // Omega*sigma (fixed except for OmegaIntersection)
  double dz_sigma = 0.2;     // fixed except for DzIntersection
  double r_sigma = 2.0;      // CircUniformCrossing radius
  double lo = 0;             // search interval
  double hi = 0;
  double tol = 0.05;
  int grid_points = 400;       // predicate sampling density
  std::vector<double> r_family = {0.02, 0.2, 2.0};  // intersection curve family
  double axis_max_r = 10.0;    // R-grid upper end for AccelMonotonicity
  double axis_max_a = 40.0;    // a-grid upper end for the intersection predicates
};

struct CriticalResult {
  double threshold = 0;
  int predicate_evals = 0;
  double final_interval = 0;
};

CriticalResult find_critical(const CriticalQuery& q, const QuadratureBudget& budget);

}  // namespace udw
