#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <utility>

#include "hyperlab/errors.hpp"

// Real Moebius transformations of the upper half-plane and the small
// geometric queries (axes, crossings, angles, distances) built on them.
namespace hyperlab::mobius {

// Matrix entries are kept in extended precision: holonomy generators are
// conjugates by ill-conditioned frames, and relator products cancel
// catastrophically in plain double.
using real = long double;

// Row-major 2x2 real matrix acting on H^2 by z -> (az+b)/(cz+d).
struct Mat2 {
  real a = 1.0, b = 0.0, c = 0.0, d = 1.0;

  real det() const { return a * d - b * c; }
  real trace() const { return a + d; }

  Mat2 inverse() const {
    const real dt = det();
    return Mat2{d / dt, -b / dt, -c / dt, a / dt};
  }

  // Rescale to det +1.  Requires det > 0 (orientation preserving).
  Mat2 unit() const {
    const real dt = det();
    if (!(dt > 0.0)) throw domain_error("Mat2::unit: determinant not positive");
    const real s = 1.0 / std::sqrt(dt);
    return Mat2{a * s, b * s, c * s, d * s};
  }
};

inline Mat2 operator*(const Mat2& x, const Mat2& y) {
  return Mat2{x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
              x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

inline Mat2 identity() { return Mat2{}; }

// Translation of hyperbolic length t along the axis (0, infinity), moving
// toward infinity for t > 0.
inline Mat2 axis_translation(double t) {
  const real e = std::exp(static_cast<real>(t) / 2);
  return Mat2{e, 0.0, 0.0, 1 / e};
}

// Translation of length s along the geodesic with endpoints (-1, 1),
// moving toward +1 for s > 0.
inline Mat2 perp_translation(double s) {
  const real h = static_cast<real>(s) / 2;
  return Mat2{std::cosh(h), std::sinh(h), std::sinh(h), std::cosh(h)};
}

// z -> -1/z: maps the axis (0, infinity) to itself with reversed direction
// and swaps its two sides.
inline Mat2 half_turn() { return Mat2{0.0, -1.0, 1.0, 0.0}; }

// Point of the boundary circle R u {inf} in projective coordinates x/w.
struct BPoint {
  real x = 0.0;
  real w = 1.0;

  bool is_infinity() const { return w == 0.0; }
  real value() const { return x / w; }  // +-inf when w == 0

  // Scale so that max(|x|,|w|) = 1, w >= 0.
  BPoint normalized() const {
    const real m = std::max(std::abs(x), std::abs(w));
    if (m == 0.0) throw domain_error("BPoint: zero vector");
    real s = 1 / m;
    if (w < 0.0 || (w == 0.0 && x < 0.0)) s = -s;
    return BPoint{x * s, w * s};
  }
};

inline BPoint apply(const Mat2& m, const BPoint& p) {
  return BPoint{m.a * p.x + m.b * p.w, m.c * p.x + m.d * p.w}.normalized();
}

// Oriented axis of a hyperbolic element: repelling and attracting endpoints.
struct Axis {
  BPoint rep;
  BPoint att;
  double length = 0.0;  // translation length, 2 arccosh(|tr|/2)
};

// Axis of a hyperbolic matrix (throws non_hyperbolic_error if |tr| <= 2
// after det-1 normalization).
Axis axis_of(const Mat2& m);

// Frame taking the standard oriented axis (0 -> infinity) to the oriented
// axis (rep -> att); det +1.
Mat2 frame_from_endpoints(const BPoint& rep, const BPoint& att);

// Crossing of the geodesic (u -> v) with the standard axis (0, infinity).
struct Crossing {
  bool crosses = false;
  double s = 0.0;          // signed position along the standard axis (log scale)
  double cos_theta = 0.0;  // cosine of the angle from the up direction to u->v
};

Crossing cross_standard_axis(const BPoint& u, const BPoint& v);

// Distance between the standard axis and the disjoint geodesic (u, v).
// Throws degeneracy_error if they cross or share an endpoint.
double distance_from_standard_axis(const BPoint& u, const BPoint& v);

inline std::complex<double> apply(const Mat2& m, std::complex<double> z) {
  const double a = static_cast<double>(m.a), b = static_cast<double>(m.b);
  const double c = static_cast<double>(m.c), d = static_cast<double>(m.d);
  return (a * z + b) / (c * z + d);
}

}  // namespace hyperlab::mobius
