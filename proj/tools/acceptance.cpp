// Acceptance suite: one PASS/FAIL line per criterion, exit code = number of
// failed criteria.  Runs everything from scratch (no fixtures).
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "hyperlab/experiments.hpp"
#include "hyperlab/holonomy.hpp"
#include "hyperlab/metrics.hpp"
#include "hyperlab/surface.hpp"
#include "hyperlab/twistflow.hpp"

using namespace hyperlab;
using namespace hyperlab::experiments;
using surface::FNPoint;

namespace {

int g_failures = 0;

void report(int id, bool ok, const std::string& what, const std::string& detail) {
  std::printf("%s: criterion %2d - %s (%s)\n", ok ? "PASS" : "FAIL", id,
              what.c_str(), detail.c_str());
  if (!ok) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

FNPoint random_shiga(surface::DecompositionPtr d, std::mt19937& rng) {
  std::uniform_real_distribution<double> ul(std::log(0.3), std::log(3.0));
  std::uniform_real_distribution<double> ut(0.0, 2.0 * M_PI);
  std::vector<double> ls(d->curves.size());
  for (double& l : ls) l = std::exp(ul(rng));
  std::vector<double> tw(d->num_interior());
  for (double& t : tw) t = ut(rng);
  return surface::make_fn_point(d, ls, tw);
}

double summary_num(const ReportTable& t, const std::string& key) {
  return std::strtod(t.summary.at(key).c_str(), nullptr);
}

const std::vector<std::string> kPresets = {"one-holed-torus",
                                           "four-holed-sphere", "genus-2"};

void criteria_1_2() {
  const auto t0 = std::chrono::steady_clock::now();
  double max_d1 = 0.0, max_d2 = 0.0;
  for (const auto& preset : kPresets) {
    ExperimentConfig cfg;
    cfg.preset = preset;
    cfg.samples = 34;  // 102 configurations across the three presets
    const ReportTable t = run_wolpert_verification(cfg);
    max_d1 = std::max(max_d1, summary_num(t, "max_d1_rel_err"));
    max_d2 = std::max(max_d2, summary_num(t, "max_d2_rel_err"));
  }
  const double el = seconds_since(t0);
  char buf[160];
  std::snprintf(buf, sizeof buf, "max rel err %.2e, %.2fs", max_d1, el);
  report(1, max_d1 <= 1e-6 && el < 10.0,
         "first twist derivative matches finite differences to 1e-6", buf);
  std::snprintf(buf, sizeof buf, "max rel err %.2e", max_d2);
  report(2, max_d2 <= 1e-4,
         "second twist derivative matches finite differences to 1e-4", buf);
}

void criterion_3() {
  std::mt19937 rng(3);
  int violations = 0, checked = 0;
  for (const auto& preset : kPresets) {
    auto d = surface::preset_decomposition(preset);
    for (int cfg = 0; cfg < 2; ++cfg) {
      const FNPoint p = random_shiga(d, rng);
      const int i = cfg % d->num_interior();
      const auto beta = surface::dual_curve(*d, i);
      const double T = p.lengths[i];
      const int N = 1002;
      std::vector<double> ts(N);
      for (int k = 0; k < N; ++k) ts[k] = -2.0 * T + 4.0 * T * k / (N - 1);
      const auto f = twistflow::length_along_twist(p, i, beta, ts);
      for (int k = 1; k + 1 < N; ++k, ++checked)
        if (f[k + 1] - 2.0 * f[k] + f[k - 1] <= 0.0) ++violations;
    }
  }
  char buf[120];
  std::snprintf(buf, sizeof buf, "%d violations over %d second differences",
                violations, checked);
  report(3, violations == 0, "twist-flow length functions are strictly convex",
         buf);
}

void criterion_4() {
  std::mt19937 rng(4);
  double worst = 0.0;
  for (const auto& preset : kPresets) {
    auto d = surface::preset_decomposition(preset);
    const FNPoint p = random_shiga(d, rng);
    for (int i = 0; i < d->num_interior(); ++i) {
      const auto beta = surface::dual_curve(*d, i);
      // l_theta(Tw^n beta) = l_{theta - 2 pi n}(beta): a full twist t = l(C_i)
      // equals the inverse Dehn twist acting on the class.
      const double full =
          holonomy::curve_length(holonomy::holonomy_rep(
                                     twistflow::twist(p, i, p.lengths[i])),
                                 beta);
      const double marked = holonomy::curve_length(
          holonomy::holonomy_rep(p), surface::dehn_twist_class(*d, beta, i, -1));
      worst = std::max(worst, std::abs(full - marked));
    }
  }
  char buf[80];
  std::snprintf(buf, sizeof buf, "max abs diff %.2e", worst);
  report(4, worst <= 1e-9, "a full twist acts as a Dehn twist on markings", buf);
}

void criterion_5() {
  auto d = surface::preset_decomposition("one-holed-torus");
  const auto pc = twistflow::measure_proof_constants(d, 0.3, 3.0, 1.0, 200, 42);
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> utw(-1.0, 1.0);
  int recovered = 0, bounded = 0;
  const int trials = 100;
  double worst = 0.0;
  for (int s = 0; s < trials; ++s) {
    const FNPoint p = random_shiga(d, rng);
    const double t = utw(rng);
    const FNPoint q = twistflow::twist(p, 0, t);
    const auto r = twistflow::twist_recover(p, q, 0, pc);
    worst = std::max(worst, std::abs(r.t_hat - t));
    if (std::abs(r.t_hat - t) <= 1e-6) ++recovered;
    if (r.bound.value >= std::abs(t)) ++bounded;
  }
  char buf[120];
  std::snprintf(buf, sizeof buf,
                "%d/%d within 1e-6 (worst %.1e), bound held %d/%d", recovered,
                trials, worst, bounded, trials);
  report(5, recovered == trials && bounded == trials,
         "injected twists recovered from dual lengths with a valid bound", buf);
}

void criterion_6() {
  auto d = surface::preset_decomposition("genus-2");
  std::mt19937 rng(6);
  int mismatches = 0, triangle_violations = 0;
  for (int s = 0; s < 1000; ++s) {
    const FNPoint a = random_shiga(d, rng);
    const FNPoint b = random_shiga(d, rng);
    const FNPoint c = random_shiga(d, rng);
    double sup = 0.0;
    for (int i = 0; i < 3; ++i) {
      sup = std::max(sup,
                     std::abs(std::log(a.lengths[i]) - std::log(b.lengths[i])));
      sup = std::max(sup, std::abs(a.lengths[i] * a.twists[i] -
                                   b.lengths[i] * b.twists[i]));
    }
    const double dab = metrics::d_fn(a, b).value;
    if (std::abs(dab - sup) > 1e-12 * std::max(1.0, sup)) ++mismatches;
    if (metrics::d_fn(a, c).value >
        dab + metrics::d_fn(b, c).value + 1e-15)
      ++triangle_violations;
  }
  char buf[120];
  std::snprintf(buf, sizeof buf,
                "%d sup-norm mismatches, %d triangle violations over 1000",
                mismatches, triangle_violations);
  report(6, mismatches == 0 && triangle_violations == 0,
         "d_fn equals the sup-norm of coordinate images and is a metric", buf);
}

void criterion_7() {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> utw(-2.0, 2.0);
  int ordered = 0;
  const int trials = 500;
  for (int s = 0; s < trials; ++s) {
    auto d = surface::preset_decomposition(kPresets[s % 2]);
    const FNPoint p = random_shiga(d, rng);
    const double t = utw(rng);
    const auto hp = holonomy::holonomy_rep(p);
    const auto hq = holonomy::holonomy_rep(twistflow::twist(p, 0, t));
    const double lo = metrics::d_ls_lower(hp, hq, 4).value;
    const double up = metrics::twist_dls_upper(hp, 0, t, 4).value;
    if (lo <= up + 1e-12) ++ordered;
  }
  char buf[80];
  std::snprintf(buf, sizeof buf, "%d/%d pairs ordered", ordered, trials);
  report(7, ordered == trials,
         "lower certificate never exceeds the twist upper certificate", buf);
}

void criterion_8() {
  const auto t0 = std::chrono::steady_clock::now();
  ExperimentConfig cfg;  // defaults: k = 3..20, t = 1
  const ReportTable t = run_shrinking_curve(cfg);
  const double el = seconds_since(t0);
  bool fn_constant = t.rows.size() == 18;
  bool upper_decreasing = true;
  double prev_up = 1e300;
  for (size_t r = 0; r < t.rows.size(); ++r) {
    const double fn = std::strtod(t.rows[r][2].c_str(), nullptr);
    const double up = std::strtod(t.rows[r][4].c_str(), nullptr);
    fn_constant = fn_constant && std::abs(fn - 2.0 * M_PI) <= 1e-12;
    upper_decreasing = upper_decreasing && up < prev_up;
    prev_up = up;
  }
  const double slope = summary_num(t, "ratio_slope_vs_k");
  const double r2 = summary_num(t, "ratio_r_squared");
  char buf[160];
  std::snprintf(buf, sizeof buf, "slope %.3f, R^2 %.5f, %.2fs", slope, r2, el);
  report(8,
         fn_constant && upper_decreasing && slope > 0.0 && r2 >= 0.99 &&
             el < 60.0,
         "pinching ratio d_fn / d_ls grows affinely in k", buf);
}

void criterion_9() {
  ExperimentConfig cfg;  // defaults: k = 3..20
  const ReportTable t = run_divergent_twist(cfg);
  bool monotone = true;
  double prev_fn = -1.0, prev_up = 1e300;
  for (size_t r = 0; r < t.rows.size(); ++r) {
    const double fn = std::strtod(t.rows[r][3].c_str(), nullptr);
    const double up = std::strtod(t.rows[r][5].c_str(), nullptr);
    monotone = monotone && fn > prev_fn && up < prev_up;
    prev_fn = fn;
    prev_up = up;
  }
  const double final_fn = summary_num(t, "final_d_fn");
  const double final_up = summary_num(t, "final_dls_upper");
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "monotone %s, final upper %.4f (need < 0.05), final d_fn %.2f "
                "(need > 25)",
                monotone ? "yes" : "no", final_up, final_fn);
  report(9, monotone && final_up < 0.05 && final_fn > 25.0,
         "divergent twists: d_ls certificate below 0.05 while d_fn above 25",
         buf);
}

void criterion_10() {
  ExperimentConfig cfg;
  cfg.preset = "genus-2";
  cfg.epsilon = 0.3;
  cfg.ball_radius = 1.0;
  cfg.samples = 200;
  const double m200 = summary_num(run_thickpart_scan(cfg), "max_ratio");
  cfg.samples = 400;
  const double m400 = summary_num(run_thickpart_scan(cfg), "max_ratio");
  cfg.samples = 200;
  cfg.epsilon = std::ldexp(1.0, -10);
  const double thin = summary_num(run_thickpart_scan(cfg), "max_ratio");
  const bool finite = std::isfinite(m200) && std::isfinite(m400);
  const bool stable = std::abs(m400 - m200) <= 0.10 * m200;
  const bool blows = thin >= 5.0 * m200;
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "max ratio %.1f (N=200) vs %.1f (N=400); thin-curve run %.1f",
                m200, m400, thin);
  report(10, finite && stable && blows,
         "thick-part ratio is stable; thin curves blow it up 5x", buf);
}

void criterion_11() {
  ExperimentConfig cfg;
  cfg.preset = "one-holed-torus";
  cfg.samples = 25;
  const bool ok =
      run_wolpert_verification(cfg).to_csv() ==
          run_wolpert_verification(cfg).to_csv() &&
      run_shrinking_curve(cfg).to_csv() == run_shrinking_curve(cfg).to_csv() &&
      run_divergent_twist(cfg).to_csv() == run_divergent_twist(cfg).to_csv() &&
      run_thickpart_scan(cfg).to_csv() == run_thickpart_scan(cfg).to_csv();
  report(11, ok, "experiments are byte-deterministic under a fixed seed",
         ok ? "all four runners byte-identical" : "mismatch found");
}

}  // namespace

int main() {
  criteria_1_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11();
  std::printf("%d of 11 criteria passed\n", 11 - g_failures);
  return g_failures;
}
