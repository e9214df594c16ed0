#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <cstdlib>

#include "doctest.h"
#include "hyperlab/experiments.hpp"

using namespace hyperlab;
using namespace hyperlab::experiments;

namespace {

double cell(const ReportTable& t, size_t row, const std::string& col) {
  for (size_t i = 0; i < t.columns.size(); ++i)
    if (t.columns[i] == col) return std::strtod(t.rows[row][i].c_str(), nullptr);
  FAIL("missing column ", col);
  return 0.0;
}

double summary_value(const ReportTable& t, const std::string& key) {
  auto it = t.summary.find(key);
  REQUIRE(it != t.summary.end());
  return std::strtod(it->second.c_str(), nullptr);
}

}  // namespace

TEST_CASE("wolpert verification sweep meets tolerances") {
  ExperimentConfig cfg;
  cfg.preset = "one-holed-torus";
  cfg.samples = 30;
  const ReportTable t = run_wolpert_verification(cfg);
  CHECK(t.rows.size() == 60);  // one d1 and one d2 row per sample
  CHECK(summary_value(t, "max_d1_rel_err") <= 1e-6);
  CHECK(summary_value(t, "max_d2_rel_err") <= 1e-4);

  ExperimentConfig bad = cfg;
  bad.samples = 0;
  CHECK_THROWS_AS(run_wolpert_verification(bad), validation_error);
}

TEST_CASE("shrinking-curve sweep: constant d_fn, decaying upper bound") {
  ExperimentConfig cfg;
  cfg.kmin = 3;
  cfg.kmax = 20;
  cfg.t = 1.0;
  const ReportTable t = run_shrinking_curve(cfg);
  REQUIRE(t.rows.size() == 18);
  for (size_t r = 0; r < t.rows.size(); ++r) {
    CHECK(cell(t, r, "d_fn") == doctest::Approx(2.0 * M_PI).epsilon(1e-12));
    if (r > 0) {
      CHECK(cell(t, r, "dls_upper") < cell(t, r - 1, "dls_upper"));
      CHECK(cell(t, r, "ratio") > cell(t, r - 1, "ratio"));
    }
    CHECK(cell(t, r, "dls_lower") <= cell(t, r, "dls_upper") + 1e-12);
  }
  CHECK(summary_value(t, "ratio_slope_vs_k") > 0.0);
  CHECK(summary_value(t, "ratio_r_squared") >= 0.99);
}

TEST_CASE("shrinking-curve sweep truncates below the hyperbolicity floor") {
  ExperimentConfig cfg;
  cfg.kmin = 3;
  cfg.kmax = 60;  // 2^-60 < 1e-12: tail must be dropped with a warning
  const ReportTable t = run_shrinking_curve(cfg);
  CHECK(t.rows.size() < 58);
  bool warned = false;
  for (const auto& n : t.notes) warned |= n.find("warning") != std::string::npos;
  CHECK(warned);
}

TEST_CASE("divergent-twist sweep: d_fn grows while the upper bound vanishes") {
  ExperimentConfig cfg;
  cfg.kmin = 3;
  cfg.kmax = 20;
  const ReportTable t = run_divergent_twist(cfg);
  REQUIRE(t.rows.size() == 18);
  for (size_t r = 0; r < t.rows.size(); ++r) {
    const double tk = cell(t, r, "t_k");
    CHECK(cell(t, r, "d_fn") == doctest::Approx(2.0 * M_PI * tk).epsilon(1e-12));
    if (r > 0) {
      CHECK(cell(t, r, "d_fn") > cell(t, r - 1, "d_fn"));
      CHECK(cell(t, r, "dls_upper") < cell(t, r - 1, "dls_upper"));
    }
  }
  CHECK(summary_value(t, "monotone_from_k") == 3);
}

TEST_CASE("thick-part scan is deterministic and bounded") {
  ExperimentConfig cfg;
  cfg.preset = "genus-2";
  cfg.samples = 20;
  cfg.seed = 5;
  const ReportTable a = run_thickpart_scan(cfg);
  const ReportTable b = run_thickpart_scan(cfg);
  CHECK(a.to_csv() == b.to_csv());
  REQUIRE(a.rows.size() == 20);
  const double max_ratio = summary_value(a, "max_ratio");
  CHECK(std::isfinite(max_ratio));
  CHECK(max_ratio >= 1.0);
  for (size_t r = 0; r < a.rows.size(); ++r)
    CHECK(cell(a, r, "d_fn") <= 3.0 * cfg.ball_radius + 1e-9);

  ExperimentConfig other = cfg;
  other.seed = 6;
  CHECK(run_thickpart_scan(other).to_csv() != a.to_csv());
}

TEST_CASE("thick-part scan includes arc columns on bordered surfaces") {
  ExperimentConfig cfg;
  cfg.preset = "one-holed-torus";
  cfg.samples = 5;
  const ReportTable t = run_thickpart_scan(cfg);
  bool has_arc = false;
  for (const auto& c : t.columns) has_arc |= c == "arc_lower";
  CHECK(has_arc);
  REQUIRE(t.rows.size() == 5);
  CHECK(cell(t, 0, "arc_lower") >= 0.0);
}

TEST_CASE("csv emission shape") {
  ReportTable t;
  t.notes.push_back("note");
  t.summary["alpha"] = "1";
  t.columns = {"a", "b"};
  t.rows.push_back({"1", "2"});
  CHECK(t.to_csv() == "# note\n# alpha = 1\na,b\n1,2\n");
  CHECK(format_double(0.5) == "0.5");
}
