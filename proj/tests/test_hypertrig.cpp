#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "hyperlab/hypertrig.hpp"

using namespace hyperlab;
using namespace hyperlab::hypertrig;

TEST_CASE("regular right-angled hexagon") {
  const double s = std::acosh(2.0);
  const auto h = solve_right_hexagon(s, s, s);
  CHECK(h.c == doctest::Approx(s).epsilon(1e-14));
  CHECK(h.alpha == doctest::Approx(s).epsilon(1e-14));
  CHECK(h.beta == doctest::Approx(s).epsilon(1e-14));
}

TEST_CASE("hexagon a=1 b=1 gamma=2") {
  const auto h = solve_right_hexagon(1.0, 1.0, 2.0);
  CHECK(h.c == doctest::Approx(1.6949011625917027).epsilon(1e-14));
  CHECK(h.alpha == doctest::Approx(1.2594707252774597).epsilon(1e-14));
  CHECK(h.beta == doctest::Approx(1.2594707252774597).epsilon(1e-14));
}

TEST_CASE("hexagon cosine identity holds on a grid") {
  int cases = 0;
  for (double a : {0.05, 0.3, 1.0, 4.0, 10.0})
    for (double b : {0.05, 0.7, 2.5, 10.0})
      for (double g : {0.1, 1.0, 3.0}) {
        const double rhs =
            std::sinh(a) * std::sinh(b) * std::cosh(g) - std::cosh(a) * std::cosh(b);
        if (rhs < 1.0000001) continue;  // no hexagon with these sides
        ++cases;
        const auto h = solve_right_hexagon(a, b, g);
        const double lhs = std::cosh(h.c);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
        // Cyclic image: a from (b, c, alpha).
        const double a2 = std::acosh(std::sinh(b) * std::sinh(h.c) * std::cosh(h.alpha) -
                                     std::cosh(b) * std::cosh(h.c));
        // Loose tolerance: the re-derivation cancels two large cosh products.
        CHECK(a2 == doctest::Approx(a).epsilon(1e-5));
      }
  CHECK(cases >= 20);
}

TEST_CASE("degenerate hexagon rejected") {
  CHECK_THROWS_AS(solve_right_hexagon(0.01, 0.01, 0.01), degeneracy_error);
}

TEST_CASE("right-angled pentagon") {
  CHECK(solve_right_pentagon(std::asinh(std::sqrt(2.0)), std::asinh(std::sqrt(2.0))) ==
        doctest::Approx(std::acosh(2.0)).epsilon(1e-14));
  CHECK(solve_right_pentagon(2.0, 2.0) ==
        doctest::Approx(3.2684339547441562).epsilon(1e-14));
  CHECK_THROWS_AS(solve_right_pentagon(0.5, 0.5), degeneracy_error);
}

TEST_CASE("collar half-width") {
  CHECK(collar_halfwidth(2.0 * std::asinh(1.0)) ==
        doctest::Approx(std::asinh(1.0)).epsilon(1e-14));
  // Small-length asymptotics w(l) ~ log(4/l).
  const double l = 1e-4;
  CHECK(collar_halfwidth(l) == doctest::Approx(std::log(4.0 / l)).epsilon(0.01));
  // Strictly decreasing.
  double prev = collar_halfwidth(0.05);
  for (double x = 0.1; x < 8.0; x += 0.1) {
    const double w = collar_halfwidth(x);
    CHECK(w < prev);
    prev = w;
  }
}

TEST_CASE("length-trace conversion") {
  CHECK(length_trace_convert(2.0 * std::acosh(1.5), TraceConvert::LengthToTrace) ==
        doctest::Approx(3.0).epsilon(1e-14));
  for (double l : {0.05, 1.0, 7.0}) {
    const double tr = length_trace_convert(l, TraceConvert::LengthToTrace);
    CHECK(length_trace_convert(tr, TraceConvert::TraceToLength) ==
          doctest::Approx(l).epsilon(1e-12));
  }
  CHECK_THROWS_AS(length_trace_convert(2.0, TraceConvert::TraceToLength),
                  non_hyperbolic_error);
}

TEST_CASE("checked_acosh clamping band") {
  CHECK(checked_acosh(1.0) == 0.0);
  CHECK(checked_acosh(1.0 - 1e-12) == 0.0);
  CHECK(checked_acosh(2.0) == doctest::Approx(std::acosh(2.0)));
  CHECK_THROWS_AS(checked_acosh(0.5), degeneracy_error);
}
