#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "doctest.h"
#include "hyperlab/holonomy.hpp"
#include "hyperlab/metrics.hpp"
#include "hyperlab/surface.hpp"
#include "hyperlab/twistflow.hpp"

using namespace hyperlab;
using namespace hyperlab::surface;
using namespace hyperlab::metrics;

namespace {

FNPoint random_point(DecompositionPtr d, std::mt19937& rng) {
  std::uniform_real_distribution<double> ulen(std::log(0.5), std::log(2.5));
  std::uniform_real_distribution<double> uth(-M_PI, M_PI);
  std::vector<double> lengths(d->curves.size());
  for (double& l : lengths) l = std::exp(ulen(rng));
  std::vector<double> twists(d->num_interior());
  for (double& t : twists) t = uth(rng);
  return make_fn_point(d, lengths, twists);
}

}  // namespace

TEST_CASE("d_fn formula cases") {
  auto d = preset_decomposition("genus-2");
  auto p = make_fn_point(d, {1.0, 1.5, 0.5}, {0.0, 0.0, 0.0});
  CHECK(d_fn(p, p).value == 0.0);
  CHECK(d_fn(p, p).kind == BoundKind::Exact);

  auto q = p;
  q.lengths[0] *= std::exp(1.0);
  CHECK(d_fn(p, q).value == doctest::Approx(1.0).epsilon(1e-12));

  auto r = p;
  r.twists[2] += 2.0 * M_PI;  // l = 0.5: twist term 0.5 * 2pi = pi
  CHECK(d_fn(p, r).value == doctest::Approx(M_PI).epsilon(1e-12));

  auto other = preset_decomposition("one-holed-torus");
  auto s = make_fn_point(other, {1.0, 1.0}, {0.0});
  CHECK_THROWS_AS(d_fn(p, s), validation_error);
}

TEST_CASE("d_fn is the sup-norm of coordinate images") {
  auto d = preset_decomposition("genus-2");
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    auto p = random_point(d, rng);
    auto q = random_point(d, rng);
    double sup = 0.0;
    for (int i = 0; i < 3; ++i) {
      sup = std::max(sup, std::abs(std::log(p.lengths[i]) - std::log(q.lengths[i])));
      sup = std::max(sup, std::abs(p.lengths[i] * p.twists[i] -
                                   q.lengths[i] * q.twists[i]));
    }
    CHECK(d_fn(p, q).value == doctest::Approx(sup).epsilon(1e-14));
    CHECK(d_fn(p, q).value == d_fn(q, p).value);
  }
}

TEST_CASE("d_fn triangle inequality") {
  auto d = preset_decomposition("genus-2");
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    auto a = random_point(d, rng);
    auto b = random_point(d, rng);
    auto c = random_point(d, rng);
    CHECK(d_fn(a, c).value <= d_fn(a, b).value + d_fn(b, c).value + 1e-15);
  }
}

TEST_CASE("d_ls_lower basics and monotonicity in budget") {
  auto d = preset_decomposition("one-holed-torus");
  auto p = make_fn_point(d, {1.8, 2.4}, {0.3});
  auto hp = holonomy::holonomy_rep(p);
  CHECK(d_ls_lower(hp, hp, 3).value == doctest::Approx(0.0));

  auto q = twistflow::twist(p, 0, 0.8);
  auto hq = holonomy::holonomy_rep(q);
  double prev = -1.0;
  for (int K : {0, 1, 2, 4, 6}) {
    const auto b = d_ls_lower(hp, hq, K);
    CHECK(b.kind == BoundKind::Lower);
    CHECK(b.value >= prev);
    prev = b.value;
  }
  CHECK(prev > 0.0);
}

TEST_CASE("twist upper bound dominates the enumeration lower bound") {
  auto d = preset_decomposition("one-holed-torus");
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> ut(-2.0, 2.0);
  for (int trial = 0; trial < 30; ++trial) {
    auto p = random_point(d, rng);
    const double t = ut(rng);
    auto hp = holonomy::holonomy_rep(p);
    auto hq = holonomy::holonomy_rep(twistflow::twist(p, 0, t));
    const auto lo = d_ls_lower(hp, hq, 6);
    const auto up = twist_dls_upper(hp, 0, t, 6);
    CHECK(lo.value <= up.value + 1e-12);
  }
}

TEST_CASE("twist upper bound formula") {
  auto d = preset_decomposition("one-holed-torus");
  auto p = make_fn_point(d, {1.2, 2.0}, {0.0});
  auto hp = holonomy::holonomy_rep(p);
  CHECK(twist_dls_upper(hp, 0, 0.0, 3).value == 0.0);
  const double w = std::asinh(1.0 / std::sinh(0.6));
  CHECK(twist_dls_upper(hp, 0, 1.0, 3).value ==
        doctest::Approx(1.0 / (4.0 * w)).epsilon(1e-12));
  CHECK(twist_dls_upper(hp, 0, 1.0, 3).kind == BoundKind::Upper);
  CHECK_THROWS_AS(twist_dls_upper(hp, 1, 1.0, 3), domain_error);  // boundary
}

TEST_CASE("twist sandwich for enumerated curves") {
  auto d = preset_decomposition("one-holed-torus");
  auto p = make_fn_point(d, {1.8, 2.4}, {0.3});
  const double t = 0.9;
  auto hp = holonomy::holonomy_rep(p);
  auto hq = holonomy::holonomy_rep(twistflow::twist(p, 0, t));
  for (const auto& c : enumerate_curves(*d, 3)) {
    if (c.intersections.empty()) continue;
    const double lp = holonomy::curve_length(hp, c);
    const double lq = holonomy::curve_length(hq, c);
    CHECK(std::abs(lq - lp) <= c.intersections[0] * t + 1e-9);
  }
}

TEST_CASE("d_arc_lower") {
  auto d = preset_decomposition("one-holed-torus");
  auto p = make_fn_point(d, {1.8, 2.4}, {0.3});
  auto hp = holonomy::holonomy_rep(p);
  CHECK(d_arc_lower(hp, hp, 2).value == doctest::Approx(0.0));

  auto q = p;
  q.lengths[0] = 2.6;
  auto hq = holonomy::holonomy_rep(q);
  double prev = -1.0;
  for (int K : {0, 1, 2, 3}) {
    const auto b = d_arc_lower(hp, hq, K);
    CHECK(b.kind == BoundKind::Lower);
    CHECK(b.value >= prev);
    prev = b.value;
  }
  CHECK(prev > 0.0);

  auto g2 = preset_decomposition("genus-2");
  auto pc = make_fn_point(g2, {1.0, 1.0, 1.0}, {0.0, 0.0, 0.0});
  auto hc = holonomy::holonomy_rep(pc);
  CHECK_THROWS_AS(d_arc_lower(hc, hc, 1), domain_error);
}

TEST_CASE("thick membership tri-state") {
  auto d = preset_decomposition("genus-2");
  auto in_pt = holonomy::holonomy_rep(make_fn_point(d, {1.0, 1.0, 1.0}, {0, 0, 0}));
  CHECK(thick_membership(in_pt, {0.3, {}}, 2) == Membership::In);

  auto out_pt = holonomy::holonomy_rep(make_fn_point(d, {0.1, 1.0, 1.0}, {0, 0, 0}));
  CHECK(thick_membership(out_pt, {0.3, {}}, 2) == Membership::Out);

  // Large epsilon: no violation found, but the certificate cannot reach it.
  auto big = holonomy::holonomy_rep(make_fn_point(d, {3.0, 3.0, 3.0}, {0, 0, 0}));
  CHECK(thick_membership(big, {1.5, {}}, 2) == Membership::Unknown);

  // Boundary cap on the relative thick part.
  auto t = preset_decomposition("one-holed-torus");
  auto bt = holonomy::holonomy_rep(make_fn_point(t, {1.0, 5.0}, {0.0}));
  CHECK(thick_membership(bt, {0.3, 4.0}, 2) == Membership::Out);
  CHECK(thick_membership(bt, {0.3, 6.0}, 2) == Membership::In);
}
