#include "hyperlab/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hyperlab/hypertrig.hpp"

namespace hyperlab::metrics {

using holonomy::Holonomy;
using surface::CurveClass;
using surface::FNPoint;

CertifiedBound d_fn(const FNPoint& p, const FNPoint& q) {
  if (p.decomp != q.decomp && !(*p.decomp == *q.decomp))
    throw validation_error("d_fn: decompositions differ");
  double sup = 0.0;
  const int nc = static_cast<int>(p.decomp->curves.size());
  for (int i = 0; i < nc; ++i) {
    sup = std::max(sup, std::abs(std::log(p.lengths[i] / q.lengths[i])));
    if (p.decomp->curves[i].interior) {
      // Twist term in length units: l theta (theta in radians).
      sup = std::max(sup, std::abs(p.lengths[i] * p.twists[i] -
                                   q.lengths[i] * q.twists[i]));
    }
  }
  return CertifiedBound{sup, BoundKind::Exact, "fn-coordinate-sup", 0};
}

CertifiedBound d_ls_lower(const Holonomy& hp, const Holonomy& hq, int K,
                          int* skipped) {
  if (hp.decomp != hq.decomp && !(*hp.decomp == *hq.decomp))
    throw validation_error("d_ls_lower: decompositions differ");
  int skip_count = 0;
  double max_ratio = 1.0;
  for (const CurveClass& c : surface::enumerate_curves(*hp.decomp, K)) {
    double lp, lq;
    try {
      lp = holonomy::curve_length(hp, c);
      lq = holonomy::curve_length(hq, c);
    } catch (const non_hyperbolic_error&) {
      ++skip_count;
      continue;
    }
    max_ratio = std::max({max_ratio, lp / lq, lq / lp});
  }
  if (skipped) *skipped = skip_count;
  return CertifiedBound{0.5 * std::log(max_ratio), BoundKind::Lower,
                        "curve-enumeration", K};
}

CertifiedBound twist_dls_upper(const Holonomy& hp, int alpha, double t, int K) {
  const auto& curves = hp.decomp->curves;
  if (alpha < 0 || alpha >= static_cast<int>(curves.size()) ||
      !curves[alpha].interior)
    throw domain_error("twist_dls_upper: not an interior curve");
  const double la =
      holonomy::curve_length(hp, surface::curve_as_class(*hp.decomp, alpha));
  // Any class crossing alpha k >= 1 times has length >= 2 k w(la), so
  // (1/2) sup k|t|/l <= |t| / (4 w(la)); disjoint classes keep their length.
  const double w = hypertrig::collar_halfwidth(la);
  return CertifiedBound{std::abs(t) / (4.0 * w), BoundKind::Upper,
                        "twist-collar-bound", K};
}

CertifiedBound d_arc_lower(const Holonomy& hp, const Holonomy& hq, int K) {
  if (hp.decomp != hq.decomp && !(*hp.decomp == *hq.decomp))
    throw validation_error("d_arc_lower: decompositions differ");
  if (hp.decomp->num_boundary() == 0)
    throw domain_error("d_arc_lower: surface has no boundary");
  double max_ratio = 1.0;
  auto fold = [&max_ratio](double lp, double lq) {
    max_ratio = std::max({max_ratio, lp / lq, lq / lp});
  };
  for (const CurveClass& a : surface::enumerate_arcs(*hp.decomp, K)) {
    try {
      fold(holonomy::ortho_arc_length(hp, a), holonomy::ortho_arc_length(hq, a));
    } catch (const degeneracy_error&) {
      continue;  // crossing axes: arc degenerate for this pair
    }
  }
  const int nc = static_cast<int>(hp.decomp->curves.size());
  for (int i = 0; i < nc; ++i)
    if (!hp.decomp->curves[i].interior) {
      const CurveClass b = surface::curve_as_class(*hp.decomp, i);
      fold(holonomy::curve_length(hp, b), holonomy::curve_length(hq, b));
    }
  return CertifiedBound{std::log(max_ratio), BoundKind::Lower, "arc-enumeration",
                        K};
}

Membership thick_membership(const Holonomy& hp, const ThickPartSpec& spec, int K) {
  if (!(spec.epsilon > 0.0)) throw domain_error("thick_membership: epsilon <= 0");
  const auto& d = *hp.decomp;

  if (spec.epsilon0) {
    for (int i = 0; i < static_cast<int>(d.curves.size()); ++i)
      if (!d.curves[i].interior &&
          holonomy::curve_length(hp, surface::curve_as_class(d, i)) >
              *spec.epsilon0)
        return Membership::Out;
  }
  // Boundary curves are peripheral: they are capped by epsilon0 above but do
  // not count against the closed-curve systole.
  for (const CurveClass& c : surface::enumerate_curves(d, K)) {
    if (c.base == surface::CurveBase::BoundaryCurve) continue;
    try {
      if (holonomy::curve_length(hp, c) < spec.epsilon) return Membership::Out;
    } catch (const non_hyperbolic_error&) {
      return Membership::Out;  // a parabolic class is arbitrarily short
    }
  }

  // Systole certificate: every essential non-peripheral closed curve either
  // is isotopic to an interior decomposition curve or crosses one, picking up
  // 2 w(l) per crossing from the collar lemma.
  double systole = std::numeric_limits<double>::infinity();
  for (int i = 0; i < d.num_interior(); ++i) {
    const double l = holonomy::curve_length(hp, surface::curve_as_class(d, i));
    systole = std::min({systole, l, 2.0 * hypertrig::collar_halfwidth(l)});
  }
  if (systole >= spec.epsilon) return Membership::In;
  return Membership::Unknown;
}

}  // namespace hyperlab::metrics
