#pragma once

#include "hyperlab/errors.hpp"

namespace hyperlab::hypertrig {

// Alternating sides of a right-angled hyperbolic hexagon.
// Side order around the hexagon is a, gamma, b, alpha, c, beta, so each
// lower-case Greek side is opposite the Latin side of the same letter.
struct HexagonSides {
  double a;
  double b;
  double c;
  double alpha;
  double beta;
  double gamma;
};

// Solves the right-angled hexagon with sides a, b and the side gamma between
// them, using cosh c = sinh a sinh b cosh gamma - cosh a cosh b and its
// cyclic images.
HexagonSides solve_right_hexagon(double a, double b, double gamma);

// Right-angled pentagon: returns c with cosh c = sinh a sinh b.
// Requires sinh a sinh b > 1.
double solve_right_pentagon(double a, double b);

// Collar half-width w(l) = arcsinh(1 / sinh(l/2)) of a simple closed
// geodesic of length l.
double collar_halfwidth(double l);

enum class TraceConvert { LengthToTrace, TraceToLength };

// |tr| = 2 cosh(l/2).  Length direction expects l > 0, trace direction
// expects |tr| > 2.
double length_trace_convert(double x, TraceConvert direction);

// arccosh with a clamping band around 1: arguments in [1 - tol, 1) are
// treated as 1, anything lower raises degeneracy_error.
double checked_acosh(double x, double tol = 1e-10);

}  // namespace hyperlab::hypertrig
