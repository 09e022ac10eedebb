// Command-line front end: single-point evaluation, parameter sweeps,
// critical-value searches, and the brute-force reference evaluator.
// All detector quantities are reported per lambda^2 in sigma units.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "udw/config.hpp"
#include "udw/correlation.hpp"
#include "udw/critical.hpp"
#include "udw/entanglement.hpp"
#include "udw/errors.hpp"
#include "udw/fixtures.hpp"
#include "udw/oracle.hpp"
#include "udw/response.hpp"
#include "udw/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;

struct GlobalOpts {
  std::string config_path;
  std::string out_path;
  double tol = -1.0;
  bool strict = false;
};

std::ostream& open_out(const GlobalOpts& g, std::ofstream& file) {
  if (g.out_path.empty()) return std::cout;
  file.open(g.out_path);
  if (!file) throw udw::ConfigError("cannot open output file: " + g.out_path);
  return file;
}

udw::RunConfig effective_config(const GlobalOpts& g) {
  udw::RunConfig cfg;
  if (!g.config_path.empty()) cfg = udw::load_config(g.config_path);
  if (g.tol > 0) cfg.budget.abs_tol = g.tol;
  return cfg;
}

void parse_range(const std::string& s, double* start, double* stop, int* steps) {
  std::istringstream ss(s);
  std::string a, b, c;
  if (!std::getline(ss, a, ':') || !std::getline(ss, b, ':') || !std::getline(ss, c, ':')) {
    throw udw::ConfigError("--range wants start:stop:steps, got " + s);
  }
  try {
    *start = std::stod(a);
    *stop = std::stod(b);
    *steps = std::stoi(c);
  } catch (const std::exception&) {
    throw udw::ConfigError("--range wants numeric start:stop:steps, got " + s);
  }
}

int emit_rows(const GlobalOpts& g, const std::vector<udw::SweepRow>& rows) {
  std::ofstream file;
  std::ostream& os = open_out(g, file);
  udw::write_sweep_csv(os, rows);
  if (g.strict) {
    for (const auto& r : rows) {
      if (!r.error.empty()) return kExitNumeric;
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Unruh-DeWitt detector response and entanglement harvesting near a mirror"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOpts g;
  app.add_option("--config", g.config_path, "JSON config with parameter defaults");
  app.add_option("--out", g.out_path, "output file (default stdout)");
  app.add_option("--tol", g.tol, "absolute quadrature tolerance override");
  app.add_flag("--strict", g.strict, "exit 3 if any output row carries an error");

  // ---- prob ----
  auto* prob = app.add_subcommand("prob", "single-point transition probability");
  std::string traj_flag;
  double opt_a = -1, opt_r = -1, opt_gap = 1e300, opt_dz = -1, opt_dd = -1;
  bool no_image = false;
  auto add_params = [&](CLI::App* cmd, bool with_dd) {
    cmd->add_option("--a-sigma", opt_a, "acceleration a*sigma");
    cmd->add_option("--r-sigma", opt_r, "trajectory radius R/sigma");
    cmd->add_option("--omega-sigma", opt_gap, "energy gap Omega*sigma");
    cmd->add_option("--dz-sigma", opt_dz, "boundary distance dz/sigma");
    if (with_dd) cmd->add_option("--dd-sigma", opt_dd, "detector separation dd/sigma");
    cmd->add_option("--traj", traj_flag, "circular|uniform|both");
    cmd->add_flag("--no-image", no_image, "drop the mirror-image term (free space)");
  };
  add_params(prob, false);

  // ---- xterm ----
  auto* xterm = app.add_subcommand("xterm", "single-point nonlocal correlation |X|");
  std::string pair_kind = "comoving";
  double opt_rot_omega = -1, opt_ra = -1, opt_rb = -1;
  add_params(xterm, true);
  xterm->add_option("--kind", pair_kind, "comoving|sync|uniform-pair");
  xterm->add_option("--rot-omega-sigma", opt_rot_omega, "shared |omega|*sigma (sync)");
  xterm->add_option("--ra-sigma", opt_ra, "radius of detector A (sync)");
  xterm->add_option("--rb-sigma", opt_rb, "radius of detector B (sync)");

  // ---- concurrence ----
  auto* conc = app.add_subcommand("concurrence", "single-point harvested entanglement");
  std::string pb_flag = "dz-plus-dd";
  add_params(conc, true);
  conc->add_option("--pb-boundary", pb_flag, "P_B boundary distance: dz|dz-plus-dd");

  // ---- sweep ----
  auto* sweep = app.add_subcommand("sweep", "CSV parameter sweep");
  std::string axis_flag = "R_over_sigma", range_flag, quantity_flag = "probability";
  int workers = 1;
  add_params(sweep, true);
  sweep->add_option("--axis", axis_flag,
                    "R_over_sigma|a_sigma|Omega_sigma|dz_over_sigma|dd_over_sigma");
  sweep->add_option("--range", range_flag, "start:stop:steps")->required();
  sweep->add_option("--quantity", quantity_flag, "probability|concurrence");
  sweep->add_option("--workers", workers, "worker threads");
  sweep->add_option("--pb-boundary", pb_flag, "P_B boundary distance: dz|dz-plus-dd");

  // ---- critical ----
  auto* crit = app.add_subcommand("critical", "threshold search on a response predicate");
  std::string kind_flag = "accel_monotonicity", interval_flag;
  double crit_tol = 0.02;
  int grid_points = 400;
  add_params(crit, false);
  crit->add_option("--kind", kind_flag,
                   "accel_monotonicity|dz_intersection|omega_intersection|circ_uniform_crossing");
  crit->add_option("--interval", interval_flag, "search interval lo:hi")->required();
  crit->add_option("--crit-tol", crit_tol, "bisection stop width");
  crit->add_option("--grid-points", grid_points, "predicate sampling density");

  // ---- oracle ----
  auto* orc = app.add_subcommand("oracle", "finite-epsilon reference evaluation");
  std::string orc_op = "p-circ", fixtures_path;
  int jobs = 1;
  add_params(orc, true);
  orc->add_option("--op", orc_op, "p-circ|p-unif|x-comoving|x-sync|x-uniform-pair|x-general");
  orc->add_option("--rot-omega-a", opt_rot_omega, "omega_A*sigma (x-sync / x-general)");
  double opt_rot_omega_b = -1;
  orc->add_option("--rot-omega-b", opt_rot_omega_b, "omega_B*sigma (x-general)");
  orc->add_option("--ra-sigma", opt_ra, "radius of detector A");
  orc->add_option("--rb-sigma", opt_rb, "radius of detector B");
  orc->add_option("--emit-fixtures", fixtures_path, "generate the frozen fixture grid to PATH");
  orc->add_option("--jobs", jobs, "worker threads for fixture generation");

  CLI11_PARSE(app, argc, argv);

  try {
    udw::RunConfig cfg = effective_config(g);
    if (opt_a > 0) cfg.a_sigma = opt_a;
    if (opt_r > 0) cfg.r_over_sigma = opt_r;
    if (opt_gap != 1e300) cfg.omega_sigma = opt_gap;
    if (opt_dz > 0) cfg.dz_over_sigma = opt_dz;
    if (opt_dd >= 0) cfg.dd_over_sigma = opt_dd;
    if (!traj_flag.empty()) cfg.trajectory = traj_flag;
    if (cfg.trajectory != "circular" && cfg.trajectory != "uniform" &&
        cfg.trajectory != "both") {
      throw udw::ConfigError("--traj must be circular|uniform|both");
    }
    const udw::PbBoundary pb_mode =
        pb_flag == "dz" ? udw::PbBoundary::Dz : udw::PbBoundary::DzPlusDd;
    if (pb_flag != "dz" && pb_flag != "dz-plus-dd") {
      throw udw::ConfigError("--pb-boundary must be dz|dz-plus-dd");
    }

    if (app.got_subcommand(prob)) {
      udw::SweepSpec spec;
      spec.quantity = udw::Quantity::Probability;
      spec.axis = udw::SweepAxis::a_sigma;
      spec.start = cfg.a_sigma;
      spec.stop = 2 * cfg.a_sigma;
      spec.steps = 2;
      spec.a_sigma = cfg.a_sigma;
      spec.r_sigma = cfg.r_over_sigma;
      spec.omega_sigma = cfg.omega_sigma;
      spec.dz_sigma = cfg.dz_over_sigma;
      spec.dd_sigma = cfg.dd_over_sigma;
      spec.include_image = !no_image;
      std::vector<udw::SweepRow> rows;
      if (cfg.trajectory != "uniform") {
        spec.traj = udw::Trajectory::Circular;
        rows.push_back(udw::run_sweep(spec, cfg.budget).front());
      }
      if (cfg.trajectory != "circular") {
        spec.traj = udw::Trajectory::Uniform;
        rows.push_back(udw::run_sweep(spec, cfg.budget).front());
      }
      return emit_rows(g, rows);
    }

    if (app.got_subcommand(xterm) || app.got_subcommand(conc)) {
      const bool want_x_only = app.got_subcommand(xterm);
      udw::PairConfig pc;
      pc.gap_omega = cfg.omega_sigma;
      pc.dz = cfg.dz_over_sigma;
      pc.dd = cfg.dd_over_sigma;
      pc.accel_a = cfg.a_sigma;
      pc.radius = cfg.r_over_sigma;
      if (want_x_only) {
        if (pair_kind == "comoving") {
          pc.kind = udw::PairKind::CircularComoving;
        } else if (pair_kind == "sync") {
          pc.kind = udw::PairKind::CircularSyncTwoRadii;
          pc.rot_omega = opt_rot_omega;
          pc.radius_a = opt_ra;
          pc.radius_b = opt_rb;
        } else if (pair_kind == "uniform-pair") {
          pc.kind = udw::PairKind::UniformPair;
        } else {
          throw udw::ConfigError("--kind must be comoving|sync|uniform-pair");
        }
      } else {
        pc.kind = cfg.trajectory == "uniform" ? udw::PairKind::UniformPair
                                              : udw::PairKind::CircularComoving;
      }
      const udw::HarvestResult h =
          udw::harvest_pair(pc, cfg.budget, pb_mode, !no_image);
      udw::SweepRow row;
      row.a_sigma = pc.accel_a;
      row.r_sigma = pc.kind == udw::PairKind::CircularSyncTwoRadii ? pc.radius_a : pc.radius;
      row.omega_sigma = pc.gap_omega;
      row.dz_sigma = pc.dz;
      row.dd_sigma = pc.dd;
      row.traj = pc.kind == udw::PairKind::UniformPair ? "uniform" : "circular";
      row.p_a = h.p_a;
      row.p_b = h.p_b;
      row.abs_x = h.abs_x;
      row.concurrence = h.concurrence;
      row.has_pa = row.has_pb = row.has_x = true;
      row.has_conc = !want_x_only;
      row.err_est = h.err_est;
      return emit_rows(g, {row});
    }

    if (app.got_subcommand(sweep)) {
      udw::SweepSpec spec;
      spec.axis = udw::sweep_axis_from_string(axis_flag);
      parse_range(range_flag, &spec.start, &spec.stop, &spec.steps);
      if (quantity_flag == "probability") {
        spec.quantity = udw::Quantity::Probability;
      } else if (quantity_flag == "concurrence") {
        spec.quantity = udw::Quantity::Concurrence;
      } else {
        throw udw::ConfigError("--quantity must be probability|concurrence");
      }
      spec.a_sigma = cfg.a_sigma;
      spec.r_sigma = cfg.r_over_sigma;
      spec.omega_sigma = cfg.omega_sigma;
      spec.dz_sigma = cfg.dz_over_sigma;
      spec.dd_sigma = cfg.dd_over_sigma;
      spec.traj = cfg.trajectory == "uniform"
                      ? udw::Trajectory::Uniform
                      : (cfg.trajectory == "both" ? udw::Trajectory::Both
                                                  : udw::Trajectory::Circular);
      spec.pb_mode = pb_mode;
      spec.workers = workers;
      spec.include_image = !no_image;
      return emit_rows(g, udw::run_sweep(spec, cfg.budget));
    }

    if (app.got_subcommand(crit)) {
      udw::CriticalQuery q;
      q.kind = udw::critical_kind_from_string(kind_flag);
      {
        std::istringstream ss(interval_flag);
        std::string a, b;
        if (!std::getline(ss, a, ':') || !std::getline(ss, b, ':')) {
          throw udw::ConfigError("--interval wants lo:hi");
        }
        try {
          q.lo = std::stod(a);
          q.hi = std::stod(b);
        } catch (const std::exception&) {
          throw udw::ConfigError("--interval wants numeric lo:hi");
        }
      }
      q.tol = crit_tol;
      q.grid_points = grid_points;
      q.omega_sigma = cfg.omega_sigma;
      q.dz_sigma = cfg.dz_over_sigma;
      q.r_sigma = cfg.r_over_sigma;
      const udw::CriticalResult r = udw::find_critical(q, cfg.budget);
      std::ofstream file;
      std::ostream& os = open_out(g, file);
      os << "kind,threshold,final_interval,predicate_evals\n"
         << kind_flag << ',' << r.threshold << ',' << r.final_interval << ','
         << r.predicate_evals << '\n';
      return kExitOk;
    }

    if (app.got_subcommand(orc)) {
      std::ofstream file;
      std::ostream& os = open_out(g, file);
      if (!fixtures_path.empty()) {
        const auto rows = udw::generate_fixtures_v1(jobs);
        std::ofstream fix(fixtures_path);
        if (!fix) throw udw::ConfigError("cannot open " + fixtures_path);
        udw::write_fixture_csv(fix, rows);
        os << "wrote " << rows.size() << " fixture rows to " << fixtures_path << "\n";
        return kExitOk;
      }
      const udw::DetectorSpec det{cfg.omega_sigma};
      const udw::EpsilonLadder lad = orc_op == "x-general"
                                         ? udw::fixture_ladder_general_v1()
                                         : udw::fixture_ladder_v1();
      udw::OracleEval ev;
      if (orc_op == "p-circ") {
        const auto kin = udw::derive_circular(cfg.a_sigma, cfg.r_over_sigma, cfg.dz_over_sigma);
        ev = udw::oracle_transition(udw::OracleCircular{kin.radius, kin.omega, kin.boundary_dz},
                                    det, lad, !no_image);
      } else if (orc_op == "p-unif") {
        ev = udw::oracle_transition(udw::OracleUniform{cfg.a_sigma, cfg.dz_over_sigma}, det, lad,
                                    !no_image);
      } else if (orc_op == "x-comoving") {
        const auto kin = udw::derive_circular(cfg.a_sigma, cfg.r_over_sigma, cfg.dz_over_sigma);
        ev = udw::oracle_x(
            udw::OraclePair{udw::OracleCircular{kin.radius, kin.omega, cfg.dz_over_sigma},
                            udw::OracleCircular{kin.radius, kin.omega,
                                                cfg.dz_over_sigma + cfg.dd_over_sigma}},
            det, lad, !no_image);
      } else if (orc_op == "x-sync" || orc_op == "x-general") {
        const double wa = opt_rot_omega;
        const double wb = orc_op == "x-sync" ? opt_rot_omega : opt_rot_omega_b;
        ev = udw::oracle_x(
            udw::OraclePair{
                udw::OracleCircular{opt_ra, wa, cfg.dz_over_sigma},
                udw::OracleCircular{opt_rb, wb, cfg.dz_over_sigma + cfg.dd_over_sigma}},
            det, lad, !no_image);
      } else if (orc_op == "x-uniform-pair") {
        ev = udw::oracle_x(
            udw::OraclePair{
                udw::OracleUniform{cfg.a_sigma, cfg.dz_over_sigma},
                udw::OracleUniform{cfg.a_sigma, cfg.dz_over_sigma + cfg.dd_over_sigma}},
            det, lad, !no_image);
      } else {
        throw udw::ConfigError("--op must name a reference operation");
      }
      os << "op,value_re,value_im,stability\n"
         << orc_op << ',' << ev.value.real() << ',' << ev.value.imag() << ',' << ev.stability
         << '\n';
      return kExitOk;
    }

    return kExitOk;
  } catch (const udw::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  }
}
