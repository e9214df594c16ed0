#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "hyperlab/holonomy.hpp"
#include "hyperlab/surface.hpp"
#include "hyperlab/twistflow.hpp"

using namespace hyperlab;
using namespace hyperlab::surface;
using namespace hyperlab::twistflow;

namespace {

FNPoint torus_point(double a, double b, double theta) {
  return make_fn_point(preset_decomposition("one-holed-torus"), {a, b}, {theta});
}

double length_at(const FNPoint& p, int i, const CurveClass& beta, double t) {
  return length_along_twist(p, i, beta, {t})[0];
}

// Centered difference with one Richardson level.
double fd1(const FNPoint& p, int i, const CurveClass& beta, double h = 1e-5) {
  auto d = [&](double hh) {
    return (length_at(p, i, beta, hh) - length_at(p, i, beta, -hh)) / (2.0 * hh);
  };
  return (4.0 * d(h / 2.0) - d(h)) / 3.0;
}

double fd2(const FNPoint& p, int i, const CurveClass& beta, double h = 1e-3) {
  const double f0 = length_at(p, i, beta, 0.0);
  auto d = [&](double hh) {
    return (length_at(p, i, beta, hh) - 2.0 * f0 + length_at(p, i, beta, -hh)) /
           (hh * hh);
  };
  return (4.0 * d(h / 2.0) - d(h)) / 3.0;
}

}  // namespace

TEST_CASE("twist normalization and additivity") {
  auto p = torus_point(1.8, 2.4, 0.3);
  auto q = twist(p, 0, p.lengths[0]);
  CHECK(q.twists[0] == doctest::Approx(p.twists[0] + 2.0 * M_PI).epsilon(1e-14));
  CHECK(q.lengths == p.lengths);
  CHECK(twist(p, 0, 0.0).twists == p.twists);
  auto r = twist(twist(p, 0, 0.4), 0, 0.6);
  CHECK(r.twists[0] == doctest::Approx(twist(p, 0, 1.0).twists[0]).epsilon(1e-14));
  CHECK_THROWS_AS(twist(p, 1, 0.5), domain_error);  // boundary curve
}

TEST_CASE("multi twist commutes and inverts") {
  auto d = preset_decomposition("genus-2");
  auto p = make_fn_point(d, {1.3, 2.1, 0.9}, {0.4, -1.1, 2.8});
  TwistVector tv{{{0, 0.5}, {2, -1.2}}};
  CHECK(tv.sup_norm() == doctest::Approx(1.2));
  auto a = multi_twist(p, tv);
  auto b = twist(twist(p, 2, -1.2), 0, 0.5);
  CHECK(a.twists == b.twists);
  TwistVector neg{{{0, -0.5}, {2, 1.2}}};
  auto back = multi_twist(a, neg);
  for (size_t k = 0; k < p.twists.size(); ++k)
    CHECK(back.twists[k] == doctest::Approx(p.twists[k]).epsilon(1e-14));
}

TEST_CASE("disjoint classes are twist-invariant") {
  auto d = preset_decomposition("genus-2");
  auto p = make_fn_point(d, {1.6, 1.9, 2.2}, {0.3, 0.0, -0.8});
  auto beta0 = dual_curve(*d, 0);  // disjoint from C_1
  auto vals = length_along_twist(p, 1, beta0, {-1.0, 0.0, 0.7, 2.0});
  for (double v : vals) CHECK(v == doctest::Approx(vals[0]).epsilon(1e-12));
}

TEST_CASE("wolpert first derivative matches finite differences") {
  auto d1t = preset_decomposition("one-holed-torus");
  auto beta = dual_curve(*d1t, 0);
  auto p = torus_point(1.8, 2.4, 0.9);
  const double analytic = wolpert_d1(p, 0, beta);
  CHECK(analytic == doctest::Approx(fd1(p, 0, beta)).epsilon(1e-7));

  // Orthogonal intersection at the symmetric point.
  CHECK(wolpert_d1(torus_point(1.8, 2.4, 0.0), 0, beta) ==
        doctest::Approx(0.0).epsilon(1e-9));

  // Two-point case.
  auto d = preset_decomposition("four-holed-sphere");
  auto q = make_fn_point(d, {1.4, 0.9, 1.1, 2.0, 1.3}, {0.7});
  auto b = dual_curve(*d, 0);
  CHECK(wolpert_d1(q, 0, b) == doctest::Approx(fd1(q, 0, b)).epsilon(1e-6));
}

TEST_CASE("wolpert second derivative matches finite differences") {
  auto d1t = preset_decomposition("one-holed-torus");
  auto beta = dual_curve(*d1t, 0);
  auto p = torus_point(1.8, 2.4, 0.9);
  const double analytic = wolpert_d2(p, 0, beta);
  CHECK(analytic > 0.0);
  CHECK(analytic == doctest::Approx(fd2(p, 0, beta)).epsilon(1e-4));

  // One-point orthogonal case: exactly (e^l+1)/(2(e^l-1)).
  auto p0 = torus_point(1.8, 2.4, 0.0);
  auto rep = holonomy::holonomy_rep(p0);
  const double lb = holonomy::curve_length(rep, beta);
  CHECK(wolpert_d2(p0, 0, beta) ==
        doctest::Approx((std::exp(lb) + 1.0) / (2.0 * (std::exp(lb) - 1.0)))
            .epsilon(1e-9));

  // Two-point case.
  auto d = preset_decomposition("four-holed-sphere");
  auto q = make_fn_point(d, {1.4, 0.9, 1.1, 2.0, 1.3}, {0.7});
  auto b = dual_curve(*d, 0);
  CHECK(wolpert_d2(q, 0, b) == doctest::Approx(fd2(q, 0, b)).epsilon(1e-4));
}

TEST_CASE("convexity of the twist length function") {
  auto d1t = preset_decomposition("one-holed-torus");
  auto beta = dual_curve(*d1t, 0);
  auto p = torus_point(1.5, 2.0, 1.2);
  const double T = p.lengths[0];
  std::vector<double> ts;
  for (int k = -20; k <= 20; ++k) ts.push_back(2.0 * T * k / 20.0);
  auto vals = length_along_twist(p, 0, beta, ts);
  for (size_t k = 1; k + 1 < vals.size(); ++k)
    CHECK(vals[k - 1] + vals[k + 1] - 2.0 * vals[k] > 0.0);
}

TEST_CASE("measured proof constants are sane and deterministic") {
  auto d = preset_decomposition("one-holed-torus");
  auto pc = measure_proof_constants(d, 0.3, 3.0, 1.0, 25, 42);
  CHECK(pc.L > 0.0);
  CHECK(pc.rho0 > 0.0);
  CHECK(pc.rho0 <= 1.0);
  CHECK(pc.lambda > 0.0);
  CHECK(pc.C > 0.0);
  auto pc2 = measure_proof_constants(d, 0.3, 3.0, 1.0, 25, 42);
  CHECK(pc.C == pc2.C);
  CHECK(pc.rho0 == pc2.rho0);
}

TEST_CASE("twist recovery") {
  auto d = preset_decomposition("one-holed-torus");
  auto pc = measure_proof_constants(d, 0.3, 3.0, 1.0, 25, 42);
  auto p = torus_point(1.8, 2.4, 0.3);

  for (double t : {0.0, 0.3, -0.45, 5.0}) {
    auto q = twist(p, 0, t);
    auto rec = twist_recover(p, q, 0, pc);
    CHECK(rec.t_hat == doctest::Approx(t).epsilon(1e-7));
    if (t != 0.0 && std::abs(t) <= 1.0) CHECK(rec.bound.value >= std::abs(t));
    CHECK(rec.bound.kind == BoundKind::Upper);
  }

  // Two-point configuration.
  auto d4 = preset_decomposition("four-holed-sphere");
  auto pc4 = measure_proof_constants(d4, 0.3, 3.0, 1.0, 25, 42);
  auto p4 = make_fn_point(d4, {1.4, 0.9, 1.1, 2.0, 1.3}, {0.7});
  auto q4 = twist(p4, 0, -0.7);
  CHECK(twist_recover(p4, q4, 0, pc4).t_hat == doctest::Approx(-0.7).epsilon(1e-7));

  // Not a pure twist.
  auto bad = p;
  bad.lengths[1] = 3.0;
  CHECK_THROWS_AS(twist_recover(p, bad, 0, pc), validation_error);
}
