#include "hyperlab/holonomy.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdio>
#include <map>

#include "hyperlab/hypertrig.hpp"

namespace hyperlab::holonomy {

using mobius::Axis;
using mobius::BPoint;
using mobius::Mat2;
using surface::CurveClass;
using surface::CurveKind;
using surface::FNPoint;
using surface::Letter;
using surface::PantsDecomposition;

namespace {

// Chart conventions, fixed so that the positive twist direction is the
// paper-style left twist: the first Wolpert derivative (sum of cos theta)
// then matches the forward finite difference of t -> l_t(beta) in sign,
// and cos(theta_t) is strictly increasing along the flow.
constexpr double kTwistSign = 1.0;
constexpr double kAngleSign = 1.0;

// Seam distance between the cuffs at slots i and j of a pants with cuff
// lengths l[0..2]: cosh s = (cosh(lk/2) + cosh(li/2) cosh(lj/2)) /
// (sinh(li/2) sinh(lj/2)), k the remaining slot.
double seam_distance(const std::array<double, 3>& l, int i, int j) {
  const int k = 3 - i - j;
  const double arg =
      (std::cosh(l[k] / 2) + std::cosh(l[i] / 2) * std::cosh(l[j] / 2)) /
      (std::sinh(l[i] / 2) * std::sinh(l[j] / 2));
  return hypertrig::checked_acosh(arg);
}

// Which side of the standard axis (0, infinity) a disjoint geodesic lies on.
double side_of_standard_axis(const BPoint& u, const BPoint& v) {
  if (!u.is_infinity() && u.value() != 0.0) return u.value() > 0 ? 1.0 : -1.0;
  if (!v.is_infinity() && v.value() != 0.0) return v.value() > 0 ? 1.0 : -1.0;
  throw degeneracy_error("reference geodesic touches the axis");
}

// Products of unit-determinant matrices have determinant 1 exactly; once
// entries grow large (deeply pinched surfaces, long words) the computed
// a*d - b*c is cancellation noise, so rescale only when the computed value
// is trustworthy and otherwise keep the product as built.
Mat2 safe_unit(const Mat2& m) {
  const mobius::real dt = m.det();
  if (dt > 0.5 && dt < 2.0) return m.unit();
  return m;
}

struct LocalPants {
  std::array<Mat2, 3> cuff;
  std::array<Mat2, 3> slot_frame;  // standard axis -> cuff axis, pants on Re < 0
};

LocalPants build_local_pants(const std::array<double, 3>& l) {
  LocalPants lp;
  const double s = seam_distance(l, 0, 1);
  const Mat2 c12 = mobius::perp_translation(s);
  lp.cuff[0] = mobius::axis_translation(l[0]);
  lp.cuff[1] = safe_unit(c12 * mobius::axis_translation(-l[1]) * c12.inverse());
  lp.cuff[2] = safe_unit((lp.cuff[0] * lp.cuff[1]).inverse());

  for (int k = 0; k < 3; ++k) {
    const Axis ax = mobius::axis_of(lp.cuff[k]);
    Mat2 n = mobius::frame_from_endpoints(ax.rep, ax.att);
    // Reference: another cuff axis lies on the pants side.
    const Axis ref = mobius::axis_of(lp.cuff[(k + 1) % 3]);
    const Mat2 ninv = n.inverse();
    const double side = side_of_standard_axis(mobius::apply(ninv, ref.rep),
                                              mobius::apply(ninv, ref.att));
    if (side > 0.0) n = safe_unit(n * mobius::half_turn());
    lp.slot_frame[k] = n;
  }
  return lp;
}

double twist_length(const FNPoint& p, int curve) {
  // theta in radians; a full twist (2 pi) is t = l.
  return kTwistSign * p.twists[curve] * p.lengths[curve] / (2.0 * M_PI);
}

std::array<float, 4> ball_key(const Mat2& m) {
  Mat2 u = safe_unit(m);
  // Projective sign canonicalization.
  double lead = u.a;
  if (std::abs(u.b) > std::abs(lead)) lead = u.b;
  if (std::abs(u.c) > std::abs(lead)) lead = u.c;
  if (std::abs(u.d) > std::abs(lead)) lead = u.d;
  if (lead < 0) u = Mat2{-u.a, -u.b, -u.c, -u.d};
  return {static_cast<float>(u.a), static_cast<float>(u.b),
          static_cast<float>(u.c), static_cast<float>(u.d)};
}

}  // namespace

Mat2 Holonomy::evaluate(const std::vector<Letter>& word) const {
  Mat2 m;
  for (const auto& l : word) {
    const Mat2& g = generators.at(l.gen);
    m = m * (l.exp > 0 ? g : g.inverse());
  }
  return safe_unit(m);
}

const std::vector<Mat2>& Holonomy::element_ball(int radius) const {
  if (radius <= ball_radius_ && !ball_.empty()) return ball_;

  std::vector<Mat2> gens;
  for (const auto& g : generators) {
    gens.push_back(safe_unit(g));
    gens.push_back(safe_unit(g.inverse()));
  }

  std::map<std::array<float, 4>, bool> seen;
  ball_.clear();
  ball_.push_back(Mat2{});
  seen[ball_key(Mat2{})] = true;
  size_t frontier_begin = 0;
  for (int r = 0; r < radius; ++r) {
    const size_t frontier_end = ball_.size();
    for (size_t i = frontier_begin; i < frontier_end; ++i) {
      for (const auto& g : gens) {
        const Mat2 m = safe_unit(ball_[i] * g);
        const auto key = ball_key(m);
        if (!seen.emplace(key, true).second) continue;
        ball_.push_back(m);
        if (ball_.size() > 200000) {
          ball_radius_ = radius;
          return ball_;
        }
      }
    }
    frontier_begin = frontier_end;
  }
  ball_radius_ = radius;
  return ball_;
}

Holonomy holonomy_rep(const FNPoint& pt) {
  const PantsDecomposition& d = *pt.decomp;
  if (d.num_punctures() > 0)
    throw degeneracy_error("cusped pants have no hexagon decomposition here");

  Holonomy rep;
  rep.decomp = pt.decomp;

  const int P = static_cast<int>(d.pants.size());
  std::vector<LocalPants> local;
  local.reserve(P);
  for (int p = 0; p < P; ++p) {
    std::array<double, 3> l{};
    for (int k = 0; k < 3; ++k) l[k] = pt.lengths[d.pants[p].slots[k].curve];
    local.push_back(build_local_pants(l));
  }

  rep.pants_frame.assign(P, Mat2{});
  for (int q : d.bfs_order) {
    const int e = d.parent_edge[q];
    if (e < 0) continue;  // root
    const auto& ed = d.edges[e];
    const int par = (ed.q == q) ? ed.p : ed.q;
    const int slot_par = (ed.q == q) ? ed.slot_p : ed.slot_q;
    const int slot_q = (ed.q == q) ? ed.slot_q : ed.slot_p;
    const double t = twist_length(pt, ed.curve);
    rep.pants_frame[q] = safe_unit(
        rep.pants_frame[par] * local[par].slot_frame[slot_par] *
        mobius::axis_translation(t) * mobius::half_turn() *
        local[q].slot_frame[slot_q].inverse());
  }

  rep.generators.assign(d.num_generators(), Mat2{});
  for (int p = 0; p < P; ++p)
    for (int k = 0; k < 3; ++k)
      rep.generators[d.cuff_gen(p, k)] = safe_unit(
          rep.pants_frame[p] * local[p].cuff[k] * rep.pants_frame[p].inverse());
  for (int e = 0; e < d.num_interior(); ++e) {
    const auto& ed = d.edges[e];
    const double t = twist_length(pt, ed.curve);
    rep.generators[d.edge_gen(e)] = safe_unit(
        rep.pants_frame[ed.p] * local[ed.p].slot_frame[ed.slot_p] *
        mobius::axis_translation(t) * mobius::half_turn() *
        local[ed.q].slot_frame[ed.slot_q].inverse() *
        rep.pants_frame[ed.q].inverse());
  }
  return rep;
}

double curve_length(const Holonomy& rep, const CurveClass& c) {
  if (c.kind != CurveKind::Closed)
    throw domain_error("curve_length expects a closed class");
  if (c.word.empty()) throw domain_error("empty word");
  const double tr = std::abs(rep.evaluate(c.word).trace());
  if (tr <= 2.0)
    throw non_hyperbolic_error("class is peripheral/parabolic: |tr| <= 2");
  return 2.0 * std::acosh(tr / 2.0);
}

IntersectionData intersection_data(const Holonomy& rep, const CurveClass& a,
                                   const CurveClass& b) {
  if (a.base != surface::CurveBase::DecompositionCurve)
    throw domain_error("intersection_data: first class must be a decomposition curve");
  if (b.kind != CurveKind::Closed || b.intersections.empty())
    throw domain_error("intersection_data: second class lacks intersection data");
  const int expected = b.intersections[a.base_curve];
  IntersectionData out;
  if (expected == 0) return out;
  if (expected > 2) throw domain_error("intersection numbers above 2 unsupported");

  const Mat2 A = rep.evaluate(a.word);
  const Mat2 B = rep.evaluate(b.word);
  const Axis axA = mobius::axis_of(A);
  const Axis axB = mobius::axis_of(B);
  const double lA = axA.length;
  const double lB = axB.length;
  const Mat2 NA = mobius::frame_from_endpoints(axA.rep, axA.att);
  const Mat2 NAinv = NA.inverse();
  const Mat2 NB = mobius::frame_from_endpoints(axB.rep, axB.att);

  auto reduce_mod = [](double s, double period) {
    double r = std::fmod(s, period);
    if (r < 0) r += period;
    return r;
  };

  std::vector<IntersectionPoint> found;
  for (int radius = 2; radius <= 4 && static_cast<int>(found.size()) < expected;
       ++radius) {
    found.clear();
    for (const Mat2& g : rep.element_ball(radius)) {
      const BPoint u = mobius::apply(NAinv, mobius::apply(g, axB.rep));
      const BPoint v = mobius::apply(NAinv, mobius::apply(g, axB.att));
      const auto cr = mobius::cross_standard_axis(u, v);
      if (!cr.crosses) continue;
      IntersectionPoint pt;
      // The angle is measured per strand, oriented to cross the curve in a
      // fixed transversal direction (negative to positive side), not with
      // beta's global orientation: a doubly-crossing curve passes in opposite
      // directions at its two points.
      const double strand = u.value() < 0.0 ? 1.0 : -1.0;
      pt.cos_theta = kAngleSign * strand * cr.cos_theta;
      pt.sin_theta = std::sqrt(std::max(0.0, 1.0 - pt.cos_theta * pt.cos_theta));
      pt.angle = std::acos(std::clamp(pt.cos_theta, -1.0, 1.0));
      pt.pos_on_curve = reduce_mod(cr.s, lA);
      // Position of the crossing point along the beta lift.
      const std::complex<double> z =
          mobius::apply(NA, std::complex<double>(0.0, std::exp(cr.s)));
      const std::complex<double> w =
          mobius::apply((g * NB).inverse(), z);
      pt.pos_on_class = reduce_mod(std::log(std::abs(w)), lB);

      const bool dup = std::any_of(found.begin(), found.end(), [&](const auto& q) {
        double ds = std::abs(q.pos_on_curve - pt.pos_on_curve);
        ds = std::min(ds, lA - ds);  // positions live on a circle
        return ds < 1e-6 * std::max(1.0, lA) &&
               std::abs(q.cos_theta - pt.cos_theta) < 1e-6;
      });
      if (!dup) found.push_back(pt);
      if (static_cast<int>(found.size()) > expected)
        throw degeneracy_error("found more crossings than the combinatorial count");
    }
  }
  if (static_cast<int>(found.size()) != expected)
    throw degeneracy_error("could not locate all intersection points in the lift ball");

  std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) {
    return x.pos_on_curve < y.pos_on_curve;
  });
  out.points = found;
  if (expected == 1) {
    out.subarcs = {lB};
  } else {
    const double l1 =
        reduce_mod(found[1].pos_on_class - found[0].pos_on_class, lB);
    out.subarcs = {l1, lB - l1};
  }
  return out;
}

double ortho_arc_length(const Holonomy& rep, const CurveClass& arc) {
  if (arc.kind != CurveKind::Arc) throw domain_error("expected an arc class");
  const PantsDecomposition& d = *rep.decomp;
  auto boundary_matrix = [&](int curve) {
    const auto& ci = d.curves.at(curve);
    if (ci.interior) throw domain_error("arc endpoint on a non-boundary curve");
    const auto [p, k] = ci.ends.front();
    return rep.generators[d.cuff_gen(p, k)];
  };
  const Mat2 M1 = boundary_matrix(arc.from_boundary);
  const Mat2 M2 = boundary_matrix(arc.to_boundary);
  const Mat2 g = rep.evaluate(arc.word);
  const Axis ax1 = mobius::axis_of(M1);
  const Axis ax2 = mobius::axis_of(M2);
  const Mat2 n1inv = mobius::frame_from_endpoints(ax1.rep, ax1.att).inverse();
  const BPoint u = mobius::apply(n1inv, mobius::apply(g, ax2.rep));
  const BPoint v = mobius::apply(n1inv, mobius::apply(g, ax2.att));
  return mobius::distance_from_standard_axis(u, v);
}

double max_relator_defect(const Holonomy& rep) {
  const PantsDecomposition& d = *rep.decomp;
  auto defect = [&](const std::vector<Letter>& w) {
    const Mat2 m = rep.evaluate(w);
    mobius::real dp = 0, dm = 0;
    const mobius::real vals[4] = {m.a, m.b, m.c, m.d};
    const mobius::real id[4] = {1, 0, 0, 1};
    for (int i = 0; i < 4; ++i) {
      dp = std::max(dp, std::abs(vals[i] - id[i]));
      dm = std::max(dm, std::abs(vals[i] + id[i]));
    }
    return static_cast<double>(std::min(dp, dm));
  };

  double worst = 0.0;
  for (int p = 0; p < static_cast<int>(d.pants.size()); ++p)
    worst = std::max(worst, defect({Letter{d.cuff_gen(p, 0), 1},
                                    Letter{d.cuff_gen(p, 1), 1},
                                    Letter{d.cuff_gen(p, 2), 1}}));
  for (int e = 0; e < d.num_interior(); ++e) {
    const auto& ed = d.edges[e];
    const Letter cp{d.cuff_gen(ed.p, ed.slot_p), 1};
    const Letter cq{d.cuff_gen(ed.q, ed.slot_q), 1};
    if (ed.in_tree) {
      worst = std::max(worst, defect({cp, cq}));
    } else {
      const Letter de{d.edge_gen(e), 1};
      const Letter dei{d.edge_gen(e), -1};
      worst = std::max(worst, defect({de, cq, dei, cp}));
    }
  }
  return worst;
}

std::string generator_csv(const Holonomy& rep) {
  std::string out = "gen,a,b,c,d\n";
  char buf[160];
  for (size_t i = 0; i < rep.generators.size(); ++i) {
    const Mat2& m = rep.generators[i];
    std::snprintf(buf, sizeof buf, "%zu,%.17g,%.17g,%.17g,%.17g\n", i,
                  static_cast<double>(m.a), static_cast<double>(m.b),
                  static_cast<double>(m.c), static_cast<double>(m.d));
    out += buf;
  }
  return out;
}

}  // namespace hyperlab::holonomy
