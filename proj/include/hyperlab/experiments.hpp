#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hyperlab/errors.hpp"

namespace hyperlab::experiments {

struct ExperimentConfig {
  std::string preset = "genus-2";

  // k-range for the shrinking-curve / divergent-twist sweeps (eps_k = 2^-k).
  int kmin = 3;
  int kmax = 20;
  double t = 1.0;  // twist amount for shrinking-curve

  // Thick-part scan parameters.
  double epsilon = 0.3;
  std::optional<double> epsilon0;
  int samples = 200;
  double ball_radius = 1.0;

  int budget = 2;  // curve-enumeration budget K
  std::uint32_t seed = 42;
};

// A CSV-serializable report: '#' comment lines, a summary block, a header
// row, data rows.  All numeric cells are pre-formatted strings so emission
// is byte-deterministic.
struct ReportTable {
  std::vector<std::string> notes;             // emitted as "# ..." lines
  std::map<std::string, std::string> summary; // emitted as "# key = value"
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  std::string to_csv() const;
};

// Shortest-repr then round-trip-exact formatting for doubles (%.17g).
std::string format_double(double x);

// Analytic vs finite-difference twist derivatives over a seeded random sweep.
ReportTable run_wolpert_verification(const ExperimentConfig& cfg);

// Four-holed sphere with interior cuff eps_k = 2^-k, unit twist t: d_fn stays
// at 2 pi t while the twist upper bound for d_ls decays like 1/k.
ReportTable run_shrinking_curve(const ExperimentConfig& cfg);

// Same family with t_k = sqrt(k log 2): the d_ls upper bound tends to 0
// while d_fn = 2 pi t_k diverges.
ReportTable run_divergent_twist(const ExperimentConfig& cfg);

// Samples pairs in the (relative) thick part within a d_fn-ball and reports
// the empirical max of d_fn / d_ls_lower.
ReportTable run_thickpart_scan(const ExperimentConfig& cfg);

}  // namespace hyperlab::experiments
