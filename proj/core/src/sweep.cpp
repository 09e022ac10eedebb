#include "udw/sweep.hpp"

#include <atomic>
#include <cstdio>
#include <ostream>
#include <thread>

#include "udw/errors.hpp"
#include "udw/response.hpp"

namespace udw {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

struct Point {
  double a, r, gap, dz, dd;
};

Point point_at(const SweepSpec& spec, int i) {
  Point p{spec.a_sigma, spec.r_sigma, spec.omega_sigma, spec.dz_sigma, spec.dd_sigma};
  const double x = spec.start + (spec.stop - spec.start) * i / (spec.steps - 1);
  switch (spec.axis) {
    case SweepAxis::R_over_sigma: p.r = x; break;
    case SweepAxis::a_sigma: p.a = x; break;
    case SweepAxis::Omega_sigma: p.gap = x; break;
    case SweepAxis::dz_over_sigma: p.dz = x; break;
    case SweepAxis::dd_over_sigma: p.dd = x; break;
  }
  return p;
}

SweepRow eval_point(const SweepSpec& spec, const Point& p, bool uniform,
                    const QuadratureBudget& budget) {
  SweepRow row;
  row.a_sigma = p.a;
  row.r_sigma = p.r;
  row.omega_sigma = p.gap;
  row.dz_sigma = p.dz;
  row.dd_sigma = p.dd;
  row.traj = uniform ? "uniform" : "circular";
  try {
    const DetectorSpec det{p.gap};
    if (spec.quantity == Quantity::Probability) {
      TransitionResult t;
      if (uniform) {
        t = transition_uniform(derive_uniform(p.a, p.dz), det, budget, spec.include_image);
      } else {
        t = transition_circular(derive_circular(p.a, p.r, p.dz), det, budget,
                                spec.include_image);
      }
      row.p_a = t.p_over_lambda2;
      row.has_pa = true;
      row.err_est = t.err_est;
    } else {
      PairConfig cfg;
      cfg.kind = uniform ? PairKind::UniformPair : PairKind::CircularComoving;
      cfg.accel_a = p.a;
      cfg.radius = p.r;
      cfg.gap_omega = p.gap;
      cfg.dz = p.dz;
      cfg.dd = p.dd;
      const HarvestResult h = harvest_pair(cfg, budget, spec.pb_mode, spec.include_image);
      row.p_a = h.p_a;
      row.p_b = h.p_b;
      row.abs_x = h.abs_x;
      row.concurrence = h.concurrence;
      row.has_pa = row.has_pb = row.has_x = row.has_conc = true;
      row.err_est = h.err_est;
    }
  } catch (const std::exception& e) {
    row.error = e.what();
    for (char& ch : row.error) {
      if (ch == ',' || ch == '\n') ch = ';';
    }
  }
  return row;
}

}  // namespace

SweepAxis sweep_axis_from_string(const std::string& s) {
  if (s == "R_over_sigma") return SweepAxis::R_over_sigma;
  if (s == "a_sigma") return SweepAxis::a_sigma;
  if (s == "Omega_sigma") return SweepAxis::Omega_sigma;
  if (s == "dz_over_sigma") return SweepAxis::dz_over_sigma;
  if (s == "dd_over_sigma") return SweepAxis::dd_over_sigma;
  throw ConfigError("unknown sweep axis: " + s);
}

const char* to_string(SweepAxis a) {
  switch (a) {
    case SweepAxis::R_over_sigma: return "R_over_sigma";
    case SweepAxis::a_sigma: return "a_sigma";
    case SweepAxis::Omega_sigma: return "Omega_sigma";
    case SweepAxis::dz_over_sigma: return "dz_over_sigma";
    case SweepAxis::dd_over_sigma: return "dd_over_sigma";
  }
  return "?";
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec, const QuadratureBudget& budget) {
  if (spec.steps < 2) throw ConfigError("sweep: steps must be >= 2");
  if (!(spec.start < spec.stop)) throw ConfigError("sweep: need start < stop");

  std::vector<std::pair<int, bool>> tasks;  // (point index, uniform?)
  for (int i = 0; i < spec.steps; ++i) {
    if (spec.traj != Trajectory::Uniform) tasks.emplace_back(i, false);
    if (spec.traj != Trajectory::Circular) tasks.emplace_back(i, true);
  }

  std::vector<SweepRow> rows(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t t = next.fetch_add(1);
      if (t >= tasks.size()) return;
      rows[t] = eval_point(spec, point_at(spec, tasks[t].first), tasks[t].second, budget);
    }
  };
  const int workers = std::max(1, spec.workers);
  std::vector<std::thread> pool;
  for (int t = 1; t < workers; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return rows;
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << "a_sigma,R_sigma,Omega_sigma,dz_sigma,dd_sigma,traj,P_A,P_B,absX,concurrence,err_est,"
        "error\n";
  for (const SweepRow& r : rows) {
    os << fmt(r.a_sigma) << ',' << fmt(r.r_sigma) << ',' << fmt(r.omega_sigma) << ','
       << fmt(r.dz_sigma) << ',' << fmt(r.dd_sigma) << ',' << r.traj << ','
       << (r.has_pa ? fmt(r.p_a) : "") << ',' << (r.has_pb ? fmt(r.p_b) : "") << ','
       << (r.has_x ? fmt(r.abs_x) : "") << ',' << (r.has_conc ? fmt(r.concurrence) : "") << ','
       << fmt(r.err_est) << ',' << r.error << '\n';
  }
}

}  // namespace udw
