#include "hyperlab/mobius.hpp"

#include <cmath>

namespace hyperlab::mobius {

Axis axis_of(const Mat2& m_in) {
  const Mat2 m = m_in.unit();
  const real tr = m.trace();
  if (std::abs(tr) <= 2.0) {
    throw non_hyperbolic_error("axis_of: |tr| <= 2");
  }
  const real disc = std::sqrt(tr * tr - 4);
  const real sgn = tr >= 0.0 ? 1.0 : -1.0;
  const real lambda_att = (tr + sgn * disc) / 2;  // |lambda| > 1
  const real lambda_rep = 1 / lambda_att;

  auto eigvec = [&m](real lambda) {
    // (m - lambda I) v = 0; take the better-conditioned row.
    const BPoint v1{m.b, lambda - m.a};
    const BPoint v2{lambda - m.d, m.c};
    const real n1 = std::abs(v1.x) + std::abs(v1.w);
    const real n2 = std::abs(v2.x) + std::abs(v2.w);
    return (n1 >= n2 ? v1 : v2).normalized();
  };

  Axis ax;
  ax.att = eigvec(lambda_att);
  ax.rep = eigvec(lambda_rep);
  ax.length = static_cast<double>(2 * std::acosh(std::abs(tr) / 2));
  return ax;
}

Mat2 frame_from_endpoints(const BPoint& rep, const BPoint& att) {
  // Columns: image of infinity = att, image of 0 = rep.
  Mat2 n{att.x, rep.x, att.w, rep.w};
  const real dt = n.det();
  if (dt == 0.0) throw degeneracy_error("frame_from_endpoints: coincident endpoints");
  if (dt < 0.0) {
    n.b = -n.b;
    n.d = -n.d;
  }
  return n.unit();
}

Crossing cross_standard_axis(const BPoint& u, const BPoint& v) {
  Crossing out;
  if (u.is_infinity() || v.is_infinity()) return out;  // vertical line: no transverse crossing
  const real uu = u.value();
  const real vv = v.value();
  if (!(uu * vv < 0.0)) return out;
  out.crosses = true;
  out.s = static_cast<double>(std::log(-uu * vv) / 2);
  out.cos_theta = static_cast<double>((uu + vv) / (vv - uu));
  return out;
}

double distance_from_standard_axis(const BPoint& u, const BPoint& v) {
  if (u.is_infinity() || v.is_infinity()) {
    throw degeneracy_error("geodesics share the endpoint at infinity");
  }
  const real uu = u.value();
  const real vv = v.value();
  if (uu * vv < 0.0) throw degeneracy_error("geodesics cross: zero distance");
  if (uu == 0.0 || vv == 0.0 || uu == vv) {
    throw degeneracy_error("geodesics share an endpoint");
  }
  const real c = std::abs(uu + vv) / std::abs(vv - uu);
  return static_cast<double>(std::acosh(std::max(static_cast<real>(1), c)));
}

}  // namespace hyperlab::mobius
