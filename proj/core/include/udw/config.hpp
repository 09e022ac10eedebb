#pragma once

#include <string>

#include "udw/quadrature.hpp"

namespace udw {

/// Defaults pulled from a JSON config document; command-line flags
/// override field by field. Keys: a_sigma, R_over_sigma, Omega_sigma,
/// dz_over_sigma, dd_over_sigma, trajectory, budget{abs_tol, rel_tol,
/// max_subdivisions, pv_window_delta}.
struct RunConfig {
  double a_sigma = 1.0;
  double r_over_sigma = 1.0;
  double omega_sigma = 0.1;
  double dz_over_sigma = 0.2;
  double dd_over_sigma = 0.2;
  std::string trajectory = "circular";
  QuadratureBudget budget;
};

/// Parse a JSON file. Unknown keys and malformed values raise ConfigError.
RunConfig load_config(const std::string& path);

}  // namespace udw
