#include "hyperlab/hypertrig.hpp"

#include <cmath>
#include <string>

namespace hyperlab::hypertrig {

namespace {

void require_positive_finite(double x, const char* name) {
  if (!std::isfinite(x) || x <= 0.0) {
    throw domain_error(std::string(name) + " must be positive and finite");
  }
}

// Hexagon cosine rule for the consecutive side triple (a, gamma, b):
// cosh c = sinh a sinh b cosh gamma - cosh a cosh b, c the opposite side.
double hexagon_c(double a, double b, double gamma, double tol) {
  const double arg =
      std::sinh(a) * std::sinh(b) * std::cosh(gamma) - std::cosh(a) * std::cosh(b);
  return checked_acosh(arg, tol);
}

}  // namespace

double checked_acosh(double x, double tol) {
  if (x >= 1.0) return std::acosh(x);
  if (x >= 1.0 - tol) return 0.0;
  throw degeneracy_error("arccosh argument " + std::to_string(x) +
                         " below domain; degenerate configuration");
}

HexagonSides solve_right_hexagon(double a, double b, double gamma) {
  require_positive_finite(a, "a");
  require_positive_finite(b, "b");
  require_positive_finite(gamma, "gamma");

  const double tol = 1e-10;
  // Cyclic order (a, gamma, b, alpha, c, beta): the cosine rule applied to
  // consecutive sides (x, w, y) yields the opposite side z with
  // cosh z = sinh x sinh y cosh w - cosh x cosh y.
  const double c = hexagon_c(a, b, gamma, tol);
  if (c <= 0.0) {
    throw degeneracy_error("hexagon collapses: side c is zero");
  }
  // alpha sits between b and c, opposite a; beta between c and a, opposite b.
  // From the sine rule sinh a / sinh alpha = sinh b / sinh beta =
  // sinh c / sinh gamma.
  const double ratio = std::sinh(c) / std::sinh(gamma);
  const double alpha = std::asinh(std::sinh(a) / ratio);
  const double beta = std::asinh(std::sinh(b) / ratio);

  // Consistency: re-derive cosh a from the consecutive triple (b, alpha, c),
  // cosh a = sinh b sinh c cosh alpha - cosh b cosh c.  Compared on the cosh
  // scale, with slack for the cancellation between the two product terms.
  const double big = std::sinh(b) * std::sinh(c) * std::cosh(alpha);
  const double cosh_a_check = big - std::cosh(b) * std::cosh(c);
  if (std::abs(cosh_a_check - std::cosh(a)) > 1e-9 * big) {
    throw degeneracy_error("hexagon solve inconsistent between sine and cosine rules");
  }

  return HexagonSides{a, b, c, alpha, beta, gamma};
}

double solve_right_pentagon(double a, double b) {
  require_positive_finite(a, "a");
  require_positive_finite(b, "b");
  const double arg = std::sinh(a) * std::sinh(b);
  if (arg <= 1.0) {
    throw degeneracy_error("pentagon requires sinh a sinh b > 1");
  }
  return std::acosh(arg);
}

double collar_halfwidth(double l) {
  require_positive_finite(l, "l");
  return std::asinh(1.0 / std::sinh(l / 2.0));
}

double length_trace_convert(double x, TraceConvert direction) {
  if (direction == TraceConvert::LengthToTrace) {
    require_positive_finite(x, "length");
    return 2.0 * std::cosh(x / 2.0);
  }
  const double t = std::abs(x);
  if (!std::isfinite(t) || t <= 2.0) {
    throw non_hyperbolic_error("|tr| <= 2: element is not hyperbolic");
  }
  return 2.0 * std::acosh(t / 2.0);
}

}  // namespace hyperlab::hypertrig
