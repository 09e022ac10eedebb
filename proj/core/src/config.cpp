#include "udw/config.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

#include "udw/errors.hpp"

namespace udw {

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("config parse error in " + path + ": " + e.what());
  }

  RunConfig cfg;
  try {
    static const char* known[] = {"a_sigma",      "R_over_sigma", "Omega_sigma",
                                  "dz_over_sigma", "dd_over_sigma", "trajectory",
                                  "budget"};
    for (auto it = j.begin(); it != j.end(); ++it) {
      bool ok = false;
      for (const char* k : known) ok = ok || it.key() == k;
      if (!ok) throw ConfigError("config: unknown key \"" + it.key() + "\"");
    }
    cfg.a_sigma = j.value("a_sigma", cfg.a_sigma);
    cfg.r_over_sigma = j.value("R_over_sigma", cfg.r_over_sigma);
    cfg.omega_sigma = j.value("Omega_sigma", cfg.omega_sigma);
    cfg.dz_over_sigma = j.value("dz_over_sigma", cfg.dz_over_sigma);
    cfg.dd_over_sigma = j.value("dd_over_sigma", cfg.dd_over_sigma);
    cfg.trajectory = j.value("trajectory", cfg.trajectory);
    if (j.contains("budget")) {
      const auto& b = j.at("budget");
      cfg.budget.abs_tol = b.value("abs_tol", cfg.budget.abs_tol);
      cfg.budget.rel_tol = b.value("rel_tol", cfg.budget.rel_tol);
      cfg.budget.max_subdivisions = b.value("max_subdivisions", cfg.budget.max_subdivisions);
      cfg.budget.pv_window_delta = b.value("pv_window_delta", cfg.budget.pv_window_delta);
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config: bad value type: ") + e.what());
  }
  if (cfg.trajectory != "circular" && cfg.trajectory != "uniform" && cfg.trajectory != "both") {
    throw ConfigError("config: trajectory must be circular|uniform|both");
  }
  if (!(cfg.budget.abs_tol > 0) || !(cfg.budget.rel_tol > 0) ||
      cfg.budget.max_subdivisions <= 0 || !(cfg.budget.pv_window_delta > 0)) {
    throw ConfigError("config: budget entries must be positive");
  }
  return cfg;
}

}  // namespace udw
