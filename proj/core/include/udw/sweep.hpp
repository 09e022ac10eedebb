#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "udw/entanglement.hpp"
#include "udw/quadrature.hpp"

namespace udw {

enum class SweepAxis { R_over_sigma, a_sigma, Omega_sigma, dz_over_sigma, dd_over_sigma };
enum class Trajectory { Circular, Uniform, Both };
enum class Quantity { Probability, Concurrence };

SweepAxis sweep_axis_from_string(const std::string& s);
const char* to_string(SweepAxis a);

/// One parameter axis swept over [start, stop] in `steps` points; the
/// other parameters fixed. Concurrence sweeps use the comoving-circular
/// pair (and/or the uniform pair); probability sweeps a single detector.
struct SweepSpec {
  SweepAxis axis = SweepAxis::R_over_sigma;
  double start = 0.1;
  double stop = 10.0;
  int steps = 100;
  double a_sigma = 1.0;
  double r_sigma = 1.0;
  double omega_sigma = 0.1;  // Omega*sigma
  double dz_sigma = 0.2;
  double dd_sigma = 0.2;
  Trajectory traj = Trajectory::Circular;
  Quantity quantity = Quantity::Probability;
  PbBoundary pb_mode = PbBoundary::DzPlusDd;
  int workers = 1;
  bool include_image = true;
};

/// One output row; optional fields print empty. A non-empty `error`
/// means the point failed and the sweep carried on.
struct SweepRow {
  double a_sigma = 0, r_sigma = 0, omega_sigma = 0, dz_sigma = 0, dd_sigma = 0;
  std::string traj;
  bool has_pa = false, has_pb = false, has_x = false, has_conc = false;
  double p_a = 0, p_b = 0, abs_x = 0, concurrence = 0;
  double err_est = 0;
  std::string error;
};

std::vector<SweepRow> run_sweep(const SweepSpec& spec, const QuadratureBudget& budget);

/// Exact header:
/// a_sigma,R_sigma,Omega_sigma,dz_sigma,dd_sigma,traj,P_A,P_B,absX,concurrence,err_est,error
void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows);

}  // namespace udw
