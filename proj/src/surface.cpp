#include "hyperlab/surface.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <set>

namespace hyperlab::surface {

int PantsDecomposition::num_interior() const {
  return static_cast<int>(edges.size());
}

int PantsDecomposition::num_boundary() const {
  return static_cast<int>(curves.size()) - num_interior();
}

int PantsDecomposition::num_punctures() const {
  int n = 0;
  for (const auto& p : pants)
    for (const auto& s : p.slots)
      if (s.kind == SlotKind::Puncture) ++n;
  return n;
}

int PantsDecomposition::genus() const {
  // chi = 2 - 2g - (#boundary) - (#punctures), chi = -#pants.
  const int chi = euler_characteristic();
  return (2 - chi - num_boundary() - num_punctures()) / 2;
}

DecompositionPtr build_decomposition(const DecompositionSpec& spec) {
  const int P = static_cast<int>(spec.pants.size());
  if (P == 0) throw validation_error("decomposition has no pants");

  auto decomp = std::make_shared<PantsDecomposition>();
  decomp->pants.resize(P);
  for (int p = 0; p < P; ++p)
    for (int k = 0; k < 3; ++k) decomp->pants[p].slots[k].kind = spec.pants[p][k];

  auto check_slot = [&](std::pair<int, int> s) {
    auto [p, k] = s;
    if (p < 0 || p >= P || k < 0 || k > 2)
      throw validation_error("gluing references nonexistent slot");
    if (spec.pants[p][k] != SlotKind::Interior)
      throw validation_error("gluing references a non-interior slot");
  };

  std::set<std::pair<int, int>> used;
  for (const auto& [s1, s2] : spec.gluings) {
    check_slot(s1);
    check_slot(s2);
    if (s1 == s2) throw validation_error("slot glued to itself");
    if (!used.insert(s1).second || !used.insert(s2).second)
      throw validation_error("slot glued twice");
  }
  for (int p = 0; p < P; ++p)
    for (int k = 0; k < 3; ++k)
      if (spec.pants[p][k] == SlotKind::Interior && !used.count({p, k}))
        throw validation_error("dangling interior slot");

  // Interior curves in gluing order.
  for (int e = 0; e < static_cast<int>(spec.gluings.size()); ++e) {
    const auto& [s1, s2] = spec.gluings[e];
    CurveInfo ci;
    ci.interior = true;
    ci.ends = {s1, s2};
    decomp->curves.push_back(ci);
    decomp->edges.push_back(
        GluingEdge{e, s1.first, s1.second, s2.first, s2.second, false});
    decomp->pants[s1.first].slots[s1.second].curve = e;
    decomp->pants[s2.first].slots[s2.second].curve = e;
  }
  // Boundary curves in (pants, slot) order.
  for (int p = 0; p < P; ++p)
    for (int k = 0; k < 3; ++k)
      if (spec.pants[p][k] == SlotKind::Boundary) {
        CurveInfo ci;
        ci.interior = false;
        ci.ends = {{p, k}};
        decomp->pants[p].slots[k].curve = static_cast<int>(decomp->curves.size());
        decomp->curves.push_back(ci);
      }

  // BFS spanning tree of the dual graph, edges scanned in index order.
  std::vector<bool> seen(P, false);
  decomp->parent_edge.assign(P, -1);
  std::deque<int> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    const int p = queue.front();
    queue.pop_front();
    decomp->bfs_order.push_back(p);
    for (int e = 0; e < static_cast<int>(decomp->edges.size()); ++e) {
      auto& ed = decomp->edges[e];
      int other = -1;
      if (ed.p == p && !seen[ed.q]) other = ed.q;
      else if (ed.q == p && !seen[ed.p]) other = ed.p;
      if (other >= 0) {
        seen[other] = true;
        ed.in_tree = true;
        decomp->parent_edge[other] = e;
        queue.push_back(other);
      }
    }
  }
  if (static_cast<int>(decomp->bfs_order.size()) != P)
    throw validation_error("gluing graph is not connected");

  return decomp;
}

DecompositionPtr preset_decomposition(const std::string& name) {
  using K = SlotKind;
  DecompositionSpec s;
  if (name == "pants") {
    s.pants = {{K::Boundary, K::Boundary, K::Boundary}};
  } else if (name == "one-holed-torus") {
    s.pants = {{K::Interior, K::Interior, K::Boundary}};
    s.gluings = {{{0, 0}, {0, 1}}};
  } else if (name == "four-holed-sphere") {
    s.pants = {{K::Interior, K::Boundary, K::Boundary},
               {K::Interior, K::Boundary, K::Boundary}};
    s.gluings = {{{0, 0}, {1, 0}}};
  } else if (name == "genus-2") {
    s.pants = {{K::Interior, K::Interior, K::Interior},
               {K::Interior, K::Interior, K::Interior}};
    s.gluings = {{{0, 0}, {1, 0}}, {{0, 1}, {1, 1}}, {{0, 2}, {1, 2}}};
  } else {
    throw validation_error("unknown preset: " + name);
  }
  return build_decomposition(s);
}

DecompositionPtr ladder_preset(int k) {
  using K = SlotKind;
  if (k < 1) throw validation_error("ladder-k requires k >= 1");
  DecompositionSpec s;
  const int P = 2 * k;
  s.pants.assign(P, {K::Boundary, K::Boundary, K::Boundary});
  for (int i = 0; i + 1 < P; ++i) {
    s.pants[i][1] = K::Interior;
    s.pants[i + 1][0] = K::Interior;
    s.gluings.push_back({{i, 1}, {i + 1, 0}});
  }
  return build_decomposition(s);
}

double FNPoint::twist_of(int curve) const {
  if (!decomp->curves.at(curve).interior)
    throw domain_error("boundary curve carries no twist parameter");
  return twists.at(curve);
}

FNPoint make_fn_point(DecompositionPtr decomp, std::vector<double> lengths,
                      std::vector<double> twists) {
  if (!decomp) throw validation_error("null decomposition");
  const int nc = static_cast<int>(decomp->curves.size());
  const int ni = decomp->num_interior();
  if (static_cast<int>(lengths.size()) != nc)
    throw validation_error("length count does not match curve count");
  if (static_cast<int>(twists.size()) != ni)
    throw validation_error("twist count does not match interior curve count");
  for (double l : lengths)
    if (!std::isfinite(l) || l <= 0.0)
      throw validation_error("curve lengths must be positive and finite");
  for (double t : twists)
    if (!std::isfinite(t)) throw validation_error("twists must be finite");

  FNPoint p;
  p.decomp = std::move(decomp);
  p.lengths = std::move(lengths);
  // Interior curves come first in curve order, so the per-interior twist
  // vector aligns with curve indices directly.
  p.twists = std::move(twists);
  return p;
}

// --- curve words -----------------------------------------------------------

namespace {

void append_power(std::vector<Letter>& w, int gen, int n) {
  const int e = n >= 0 ? 1 : -1;
  for (int i = 0; i < std::abs(n); ++i) w.push_back(Letter{gen, e});
}

std::vector<Letter> invert_word(const std::vector<Letter>& w) {
  std::vector<Letter> out(w.rbegin(), w.rend());
  for (auto& l : out) l.exp = -l.exp;
  return out;
}

std::vector<Letter> free_reduce(std::vector<Letter> w) {
  std::vector<Letter> out;
  for (const auto& l : w) {
    if (!out.empty() && out.back().gen == l.gen && out.back().exp == -l.exp)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

}  // namespace

std::vector<Letter> canonical_cyclic_word(std::vector<Letter> w) {
  w = free_reduce(std::move(w));
  while (w.size() >= 2 && w.front().gen == w.back().gen &&
         w.front().exp == -w.back().exp) {
    w.erase(w.begin());
    w.pop_back();
    w = free_reduce(std::move(w));
  }
  if (w.empty()) return w;
  auto min_rotation = [](const std::vector<Letter>& v) {
    std::vector<Letter> best = v;
    std::vector<Letter> rot = v;
    for (size_t i = 1; i < v.size(); ++i) {
      std::rotate(rot.begin(), rot.begin() + 1, rot.end());
      if (rot < best) best = rot;
    }
    return best;
  };
  const auto a = min_rotation(w);
  const auto b = min_rotation(invert_word(w));
  return std::min(a, b);
}

CurveClass curve_as_class(const PantsDecomposition& d, int curve) {
  const auto& ci = d.curves.at(curve);
  CurveClass c;
  c.kind = CurveKind::Closed;
  const auto [p, k] = ci.ends.front();
  c.word = {Letter{d.cuff_gen(p, k), 1}};
  c.intersections.assign(d.curves.size(), 0);
  c.base = ci.interior ? CurveBase::DecompositionCurve : CurveBase::BoundaryCurve;
  c.base_curve = curve;
  c.name = (ci.interior ? "C" : "B") + std::to_string(curve);
  return c;
}

namespace {

int other_slot(const PantsDecomposition& d, int p, int avoid) {
  for (int k = 0; k < 3; ++k)
    if (k != avoid) return k;
  return -1;  // unreachable
}

std::vector<Letter> dual_word(const PantsDecomposition& d, int curve, int n) {
  const auto& ed = d.edges.at(curve);
  std::vector<Letter> w;
  if (ed.p == ed.q) {
    // Handle case: the curve is adjacent to one pants on both sides; the
    // dual crosses once and is the handle generator, twisted n times.
    append_power(w, d.cuff_gen(ed.p, std::min(ed.slot_p, ed.slot_q)), n);
    w.push_back(Letter{d.edge_gen(curve), 1});
  } else {
    // Two distinct pants: the dual loops around one adjacent cuff on each
    // side, crossing the curve through its edge transition d_e; the twist
    // inserts c^n at one crossing and c^-n at the other.
    const int i2 = other_slot(d, ed.p, ed.slot_p);
    const int j2 = other_slot(d, ed.q, ed.slot_q);
    w.push_back(Letter{d.cuff_gen(ed.p, i2), 1});
    append_power(w, d.cuff_gen(ed.p, ed.slot_p), n);
    w.push_back(Letter{d.edge_gen(curve), 1});
    w.push_back(Letter{d.cuff_gen(ed.q, j2), 1});
    w.push_back(Letter{d.edge_gen(curve), -1});
    append_power(w, d.cuff_gen(ed.p, ed.slot_p), -n);
  }
  return w;
}

}  // namespace

CurveClass dual_curve(const PantsDecomposition& d, int curve) {
  if (curve < 0 || curve >= static_cast<int>(d.curves.size()))
    throw domain_error("curve index out of range");
  if (!d.curves[curve].interior)
    throw domain_error("dual curve is only defined for interior curves");
  const auto& ed = d.edges[curve];
  CurveClass c;
  c.kind = CurveKind::Closed;
  c.word = dual_word(d, curve, 0);
  c.intersections.assign(d.curves.size(), 0);
  c.intersections[curve] = (ed.p == ed.q) ? 1 : 2;
  c.base = CurveBase::DualCurve;
  c.base_curve = curve;
  c.twist_exp = 0;
  c.name = "beta" + std::to_string(curve);
  return c;
}

CurveClass dehn_twist_class(const PantsDecomposition& d, const CurveClass& c,
                            int about, int n) {
  if (c.kind != CurveKind::Closed)
    throw domain_error("Dehn twists of arc classes are out of scope");
  if (about < 0 || about >= static_cast<int>(d.curves.size()) ||
      !d.curves[about].interior)
    throw domain_error("twist curve must be an interior decomposition curve");
  if (n == 0) return c;
  if (c.intersections.empty())
    throw domain_error("Dehn twists require combinatorial intersection data");
  if (c.intersections[about] == 0) return c;
  if (c.base != CurveBase::DualCurve || c.base_curve != about)
    throw domain_error(
        "Dehn twists are maintained only on the enumerated twist orbits");
  CurveClass out = c;
  out.twist_exp = c.twist_exp + n;
  out.word = dual_word(d, about, out.twist_exp);
  out.name = "Tw^" + std::to_string(out.twist_exp) + "(beta" +
             std::to_string(about) + ")";
  return out;
}

DecompositionPtr double_surface(const PantsDecomposition& d) {
  if (d.num_boundary() == 0)
    throw domain_error("double_surface requires a boundary curve");
  using K = SlotKind;
  const int P = static_cast<int>(d.pants.size());
  DecompositionSpec s;
  s.pants.assign(2 * P, {K::Boundary, K::Boundary, K::Boundary});
  for (int p = 0; p < P; ++p)
    for (int k = 0; k < 3; ++k) {
      K kind = d.pants[p].slots[k].kind;
      if (kind == K::Boundary) kind = K::Interior;  // glued to the mirror
      s.pants[p][k] = kind;
      s.pants[P + p][k] = kind;
    }
  for (const auto& ed : d.edges) {
    s.gluings.push_back({{ed.p, ed.slot_p}, {ed.q, ed.slot_q}});
    s.gluings.push_back({{P + ed.p, ed.slot_p}, {P + ed.q, ed.slot_q}});
  }
  for (int p = 0; p < P; ++p)
    for (int k = 0; k < 3; ++k)
      if (d.pants[p].slots[k].kind == K::Boundary)
        s.gluings.push_back({{p, k}, {P + p, k}});
  return build_decomposition(s);
}

std::vector<CurveClass> enumerate_curves(const PantsDecomposition& d, int K) {
  if (K < 0) K = 0;
  std::vector<CurveClass> out;
  for (int c = 0; c < static_cast<int>(d.curves.size()); ++c)
    out.push_back(curve_as_class(d, c));
  for (int e = 0; e < d.num_interior(); ++e) {
    const CurveClass beta = dual_curve(d, e);
    for (int n = -K; n <= K; ++n)
      out.push_back(n == 0 ? beta : dehn_twist_class(d, beta, e, n));
  }
  return out;
}

std::vector<CurveClass> enumerate_arcs(const PantsDecomposition& d, int K) {
  if (K < 0) K = 0;
  if (d.num_boundary() == 0)
    throw domain_error("surface has no boundary: no arc classes");
  std::vector<CurveClass> out;

  auto push_arc = [&](int b1, int b2, std::vector<Letter> w, std::string name) {
    CurveClass a;
    a.kind = CurveKind::Arc;
    a.from_boundary = b1;
    a.to_boundary = b2;
    a.word = std::move(w);
    a.name = std::move(name);
    out.push_back(std::move(a));
  };

  std::vector<int> boundary;
  for (int c = 0; c < static_cast<int>(d.curves.size()); ++c)
    if (!d.curves[c].interior) boundary.push_back(c);

  // Seed arcs between distinct boundary curves (empty connecting word), and
  // from each boundary to itself around another cuff of its pants.
  for (size_t i = 0; i < boundary.size(); ++i) {
    for (size_t j = i + 1; j < boundary.size(); ++j)
      push_arc(boundary[i], boundary[j], {},
               "arc" + std::to_string(boundary[i]) + "-" + std::to_string(boundary[j]));
    const int b = boundary[i];
    const auto [p, k] = d.curves[b].ends.front();
    for (int k2 = 0; k2 < 3; ++k2)
      if (k2 != k)
        push_arc(b, b, {Letter{d.cuff_gen(p, k2), 1}},
                 "arc" + std::to_string(b) + "-self" + std::to_string(k2));
  }

  // Twist growth: append powers of interior cuff generators.
  const size_t seeds = out.size();
  for (size_t s = 0; s < seeds; ++s)
    for (int e = 0; e < d.num_interior(); ++e)
      for (int n = -K; n <= K; ++n) {
        if (n == 0) continue;
        CurveClass a = out[s];
        append_power(a.word, d.cuff_gen(d.edges[e].p, d.edges[e].slot_p), n);
        a.name += "+tw" + std::to_string(e) + "^" + std::to_string(n);
        out.push_back(std::move(a));
      }
  return out;
}

LengthFamily family_from_values(const std::vector<double>& values) {
  if (values.empty()) throw domain_error("empty length family");
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  return LengthFamily{*lo, *hi};
}

Boundedness boundedness_check(const LengthFamily& f, const ShigaBounds& b) {
  if (!(b.delta > 0.0) || !(b.delta <= b.M))
    throw domain_error("Shiga bounds require 0 < delta <= M");
  if (!(f.sup <= b.M)) return Boundedness::Unbounded;
  if (f.inf >= b.delta) return Boundedness::Shiga;
  return Boundedness::UpperBoundedOnly;
}

}  // namespace hyperlab::surface
