#include "udw/fixtures.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <thread>

#include "udw/correlation.hpp"
#include "udw/errors.hpp"
#include "udw/response.hpp"

namespace udw {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

FixtureCase pc(double a, double r, double gap, double dz, bool image = true) {
  FixtureCase c;
  c.op = "p_circ";
  c.a_sigma = a;
  c.r_a = r;
  c.gap = gap;
  c.dz = dz;
  c.include_image = image;
  std::ostringstream id;
  id << "p_circ/a" << a << "_R" << r << "_W" << gap << "_z" << dz << (image ? "" : "_free");
  c.case_id = id.str();
  return c;
}

FixtureCase pu(double a, double gap, double dz) {
  FixtureCase c;
  c.op = "p_unif";
  c.a_sigma = a;
  c.gap = gap;
  c.dz = dz;
  std::ostringstream id;
  id << "p_unif/a" << a << "_W" << gap << "_z" << dz;
  c.case_id = id.str();
  return c;
}

FixtureCase xc(double a, double r, double gap, double dz, double dd) {
  FixtureCase c;
  c.op = "x_como";
  c.a_sigma = a;
  c.r_a = r;
  c.r_b = r;
  c.gap = gap;
  c.dz = dz;
  c.dd = dd;
  std::ostringstream id;
  id << "x_como/a" << a << "_R" << r << "_W" << gap << "_z" << dz << "_d" << dd;
  c.case_id = id.str();
  return c;
}

FixtureCase xs(double omega, double ra, double rb, double gap, double dz, double dd) {
  FixtureCase c;
  c.op = "x_sync";
  c.omega_a = omega;
  c.omega_b = omega;
  c.r_a = ra;
  c.r_b = rb;
  c.gap = gap;
  c.dz = dz;
  c.dd = dd;
  std::ostringstream id;
  id << "x_sync/w" << omega << "_Ra" << ra << "_Rb" << rb << "_W" << gap << "_z" << dz << "_d"
     << dd;
  c.case_id = id.str();
  return c;
}

FixtureCase xu(double a, double gap, double dz, double dd) {
  FixtureCase c;
  c.op = "x_upair";
  c.a_sigma = a;
  c.gap = gap;
  c.dz = dz;
  c.dd = dd;
  std::ostringstream id;
  id << "x_upair/a" << a << "_W" << gap << "_z" << dz << "_d" << dd;
  c.case_id = id.str();
  return c;
}

FixtureCase xg(double wa, double wb, double ra, double rb, double gap, double dz, double dd) {
  FixtureCase c;
  c.op = "x_general";
  c.omega_a = wa;
  c.omega_b = wb;
  c.r_a = ra;
  c.r_b = rb;
  c.gap = gap;
  c.dz = dz;
  c.dd = dd;
  std::ostringstream id;
  id << "x_general/wa" << wa << "_wb" << wb << "_Ra" << ra << "_Rb" << rb << "_W" << gap << "_z"
     << dz << "_d" << dd;
  c.case_id = id.str();
  return c;
}

}  // namespace

std::vector<FixtureCase> fixture_grid_v1() {
  std::vector<FixtureCase> cases;

  // circular transition probability: 3x3x3 at one gap, plus gap spread
  for (double a : {0.5, 2.0, 8.0}) {
    for (double r : {0.2, 1.0, 2.0}) {
      for (double dz : {0.2, 1.0, 3.0}) cases.push_back(pc(a, r, 0.5, dz));
    }
  }
  for (double gap : {0.1, 1.0, 1.8}) cases.push_back(pc(2.0, 1.0, gap, 0.2));
  for (double gap : {0.1, 1.8}) cases.push_back(pc(8.0, 0.5, gap, 1.0));
  cases.push_back(pc(2.0, 1.0, 0.5, 0.3));
  cases.push_back(pc(2.0, 1.0, 0.5, 0.3, /*image=*/false));

  // hyperbolic transition probability across the figure regimes
  for (double a : {1.0, 3.0, 10.0, 21.136, 30.0}) {
    for (auto [gap, dz] : std::initializer_list<std::pair<double, double>>{
             {0.1, 0.05}, {0.1, 0.2}, {0.1, 3.0}, {1.0, 0.5}, {1.8, 0.2}, {1.8, 3.0}}) {
      cases.push_back(pu(a, gap, dz));
    }
  }
  cases.push_back(pu(3.0, 1.0, 0.5));

  // comoving pair: the 3x3x3 acceptance grid at R = 1, gap 0.1
  for (double a : {0.5, 1.0, 2.0}) {
    for (double dd : {0.2, 0.5, 1.0}) {
      for (double dz : {0.2, 1.0, 3.0}) cases.push_back(xc(a, 1.0, 0.1, dz, dd));
    }
  }

  // synchronized two-radii pair
  for (double omega : {0.2, 0.4, 0.6}) {
    for (double rb : {0.5, 1.0, 1.5}) {
      for (auto [dd, dz] : std::initializer_list<std::pair<double, double>>{
               {0.5, 0.5}, {0.2, 1.0}, {1.0, 0.3}}) {
        cases.push_back(xs(omega, 1.0, rb, 0.1, dz, dd));
      }
    }
  }

  // uniform pair
  for (double a : {0.5, 1.0, 2.0}) {
    for (double dd : {0.2, 0.5, 1.0}) {
      for (double dz : {0.2, 1.0, 3.0}) cases.push_back(xu(a, 0.1, dz, dd));
    }
  }

  // general unequal-omega pair: reference-only
  cases.push_back(xg(0.3, 0.5, 1.0, 1.0, 0.1, 0.5, 0.5));
  cases.push_back(xg(0.3, 0.5, 1.0, 1.0, 0.1, 10.0, 10.0));

  return cases;
}

EpsilonLadder fixture_ladder_v1() {
  EpsilonLadder lad;
  lad.eps = {2e-2, 1e-2, 5e-3, 2.5e-3};
  lad.extrapolation_order = 2;
  lad.grid_points_per_dim = 4096;
  lad.domain_halfwidth = 8.0;
  return lad;
}

EpsilonLadder fixture_ladder_transition_v1() {
  // the single-detector examples are held to 1e-5 relative, which needs
  // the ladder pushed into the regime where the eps*ln(eps) term is
  // locally linear
  EpsilonLadder lad;
  lad.eps = {5e-3, 2.5e-3, 1.25e-3, 6.25e-4, 3.125e-4, 1.5625e-4};
  lad.extrapolation_order = 3;
  lad.grid_points_per_dim = 8192;
  lad.domain_halfwidth = 8.0;
  return lad;
}

EpsilonLadder fixture_ladder_general_v1() {
  EpsilonLadder lad;
  lad.eps = {4e-2, 2e-2, 1e-2};
  lad.extrapolation_order = 2;
  lad.grid_points_per_dim = 2048;
  lad.domain_halfwidth = 8.0;
  return lad;
}

FixtureRow run_fixture_case(const FixtureCase& c) {
  const DetectorSpec det{c.gap};
  const EpsilonLadder lad = c.op == "x_general"
                                ? fixture_ladder_general_v1()
                                : (c.op == "p_circ" || c.op == "p_unif"
                                       ? fixture_ladder_transition_v1()
                                       : fixture_ladder_v1());
  FixtureRow row;
  row.c = c;
  row.eps_hash = ladder_hash(lad);

  if (c.op == "p_circ") {
    const CircularKinematics kin = derive_circular(c.a_sigma, c.r_a, c.dz);
    const OracleCircular tc{c.r_a, kin.omega, c.dz};
    row.value = oracle_transition(tc, det, lad, c.include_image).value;
  } else if (c.op == "p_unif") {
    const OracleUniform tu{c.a_sigma, c.dz};
    row.value = oracle_transition(tu, det, lad, c.include_image).value;
  } else if (c.op == "x_como") {
    const CircularKinematics kin = derive_circular(c.a_sigma, c.r_a, c.dz);
    const OraclePair pair{OracleCircular{c.r_a, kin.omega, c.dz},
                          OracleCircular{c.r_a, kin.omega, c.dz + c.dd}};
    row.value = oracle_x(pair, det, lad, c.include_image).value;
  } else if (c.op == "x_sync") {
    const OraclePair pair{OracleCircular{c.r_a, c.omega_a, c.dz},
                          OracleCircular{c.r_b, c.omega_b, c.dz + c.dd}};
    row.value = oracle_x(pair, det, lad, c.include_image).value;
  } else if (c.op == "x_upair") {
    const OraclePair pair{OracleUniform{c.a_sigma, c.dz}, OracleUniform{c.a_sigma, c.dz + c.dd}};
    row.value = oracle_x(pair, det, lad, c.include_image).value;
  } else if (c.op == "x_general") {
    const OraclePair pair{OracleCircular{c.r_a, c.omega_a, c.dz},
                          OracleCircular{c.r_b, c.omega_b, c.dz + c.dd}};
    row.value = oracle_x(pair, det, lad, c.include_image).value;
  } else {
    throw Error("run_fixture_case: unknown op " + c.op);
  }
  return row;
}

std::optional<std::complex<double>> main_path_value(const FixtureCase& c,
                                                    const QuadratureBudget& budget) {
  const DetectorSpec det{c.gap};
  if (c.op == "p_circ") {
    const CircularKinematics kin = derive_circular(c.a_sigma, c.r_a, c.dz);
    return std::complex<double>(
        transition_circular(kin, det, budget, c.include_image).p_over_lambda2, 0.0);
  }
  if (c.op == "p_unif") {
    const UniformKinematics kin = derive_uniform(c.a_sigma, c.dz);
    return std::complex<double>(
        transition_uniform(kin, det, budget, c.include_image).p_over_lambda2, 0.0);
  }
  if (c.op == "x_como") {
    const CircularKinematics kin = derive_circular(c.a_sigma, c.r_a, c.dz);
    const PairGeometry geom{c.dd, c.dz, PairKind::CircularComoving};
    const XResult x = x_comoving_circular(kin, geom, det, budget, c.include_image);
    return std::complex<double>(x.x_real, x.x_imag);
  }
  if (c.op == "x_sync") {
    const CircularKinematics ka = circular_from_omega(c.omega_a, c.r_a, c.dz);
    const CircularKinematics kb = circular_from_omega(c.omega_b, c.r_b, c.dz + c.dd);
    const PairGeometry geom{c.dd, c.dz, PairKind::CircularSyncTwoRadii};
    const XResult x = x_sync_two_radii(ka, kb, geom, det, budget, c.include_image);
    return std::complex<double>(x.x_real, x.x_imag);
  }
  if (c.op == "x_upair") {
    const UniformKinematics kin = derive_uniform(c.a_sigma, c.dz);
    const PairGeometry geom{c.dd, c.dz, PairKind::UniformPair};
    const XResult x = x_uniform_pair(kin, geom, det, budget, c.include_image);
    return std::complex<double>(x.x_real, x.x_imag);
  }
  return std::nullopt;
}

void write_fixture_csv(std::ostream& os, const std::vector<FixtureRow>& rows) {
  os << "case_id,op,a_sigma,R_A_sigma,R_B_sigma,omega_A_sigma,omega_B_sigma,Omega_sigma,"
        "dz_sigma,dd_sigma,include_image,value_re,value_im,eps_ladder_hash\n";
  for (const FixtureRow& r : rows) {
    os << r.c.case_id << ',' << r.c.op << ',' << fmt(r.c.a_sigma) << ',' << fmt(r.c.r_a) << ','
       << fmt(r.c.r_b) << ',' << fmt(r.c.omega_a) << ',' << fmt(r.c.omega_b) << ','
       << fmt(r.c.gap) << ',' << fmt(r.c.dz) << ',' << fmt(r.c.dd) << ','
       << (r.c.include_image ? 1 : 0) << ',' << fmt(r.value.real()) << ','
       << fmt(r.value.imag()) << ',' << r.eps_hash << '\n';
  }
}

std::vector<FixtureRow> read_fixture_csv(std::istream& is) {
  std::vector<FixtureRow> rows;
  std::string line;
  if (!std::getline(is, line)) throw Error("fixture csv: empty file");
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::string field;
    std::vector<std::string> f;
    while (std::getline(ss, field, ',')) f.push_back(field);
    if (f.size() != 14) throw Error("fixture csv: bad row: " + line);
    FixtureRow r;
    r.c.case_id = f[0];
    r.c.op = f[1];
    r.c.a_sigma = std::stod(f[2]);
    r.c.r_a = std::stod(f[3]);
    r.c.r_b = std::stod(f[4]);
    r.c.omega_a = std::stod(f[5]);
    r.c.omega_b = std::stod(f[6]);
    r.c.gap = std::stod(f[7]);
    r.c.dz = std::stod(f[8]);
    r.c.dd = std::stod(f[9]);
    r.c.include_image = f[10] == "1";
    r.value = {std::stod(f[11]), std::stod(f[12])};
    r.eps_hash = std::stoull(f[13]);
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<FixtureRow> generate_fixtures_v1(int jobs) {
  const std::vector<FixtureCase> cases = fixture_grid_v1();
  std::vector<FixtureRow> rows(cases.size());
  std::atomic<std::size_t> next{0};
  jobs = std::max(1, jobs);
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= cases.size()) return;
      rows[i] = run_fixture_case(cases[i]);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(jobs - 1);
  for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return rows;
}

}  // namespace udw
