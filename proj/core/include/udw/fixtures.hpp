#pragma once

#include <complex>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "udw/oracle.hpp"
#include "udw/quadrature.hpp"

namespace udw {

/// One reference-evaluator case. Parameters not used by `op` stay zero.
/// Ops: p_circ, p_unif (transition probability), x_como, x_sync, x_upair
/// (pair correlation with a fast counterpart), x_general (reference-only).
struct FixtureCase {
  std::string case_id;
  std::string op;
  double a_sigma = 0;
  double r_a = 0;
  double r_b = 0;
  double omega_a = 0;  // rotation, sigma units
  double omega_b = 0;
  double gap = 0;  // Omega*sigma
  double dz = 0;
  double dd = 0;
  bool include_image = true;
};

struct FixtureRow {
  FixtureCase c;
  std::complex<double> value;
  std::uint64_t eps_hash = 0;
};

/// The frozen v1 case grid (>= 27 points per op with a fast counterpart).
std::vector<FixtureCase> fixture_grid_v1();

/// Ladder used to generate the v1 pair-correlation fixtures (one step
/// coarser start than the default plus the default three, order-2
/// extrapolation).
EpsilonLadder fixture_ladder_v1();

/// Deeper, order-3 ladder for the transition-probability fixtures.
EpsilonLadder fixture_ladder_transition_v1();

/// Shorter, coarser ladder for the general unequal-omega cases, whose
/// singular set forces a globally fine grid.
EpsilonLadder fixture_ladder_general_v1();

/// Run the reference evaluator on one case (ladder chosen by op).
FixtureRow run_fixture_case(const FixtureCase& c);

/// Fast-path value for the same case: (P, 0) for probabilities,
/// (Re X, Im X) for correlations; empty for reference-only ops.
std::optional<std::complex<double>> main_path_value(const FixtureCase& c,
                                                    const QuadratureBudget& budget);

void write_fixture_csv(std::ostream& os, const std::vector<FixtureRow>& rows);
std::vector<FixtureRow> read_fixture_csv(std::istream& is);

/// Generate every case of the v1 grid with `jobs` worker threads,
/// in deterministic order.
std::vector<FixtureRow> generate_fixtures_v1(int jobs);

}  // namespace udw
