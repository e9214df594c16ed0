#pragma once

#include <string>
#include <vector>

#include "hyperlab/mobius.hpp"
#include "hyperlab/surface.hpp"

namespace hyperlab::holonomy {

// One transverse intersection point of a decomposition curve with a class.
struct IntersectionPoint {
  double angle = 0.0;      // theta(p) in (0, pi), measured from C_i to beta
  double cos_theta = 0.0;
  double sin_theta = 0.0;
  double pos_on_curve = 0.0;  // position along C_i, in [0, l(C_i))
  double pos_on_class = 0.0;  // position along beta, in [0, l(beta))
};

struct IntersectionData {
  std::vector<IntersectionPoint> points;
  // One entry (l(beta)) for a single crossing; the two subarc lengths
  // l1 + l2 = l(beta) for a double crossing.
  std::vector<double> subarcs;
};

// Fuchsian realization of an FNPoint: one det-1 matrix per word generator,
// plus the per-pants frames the gluing chart produced.
class Holonomy {
 public:
  surface::DecompositionPtr decomp;
  std::vector<mobius::Mat2> generators;   // indexed by generator id
  std::vector<mobius::Mat2> pants_frame;  // F_p per pants

  mobius::Mat2 evaluate(const std::vector<surface::Letter>& word) const;

  // Growing, cached ball of group elements used to locate lifts.
  const std::vector<mobius::Mat2>& element_ball(int radius) const;

 private:
  mutable std::vector<mobius::Mat2> ball_;
  mutable int ball_radius_ = -1;
};

// FN -> Fuchsian construction.  Decomposition curves realize their FN
// lengths exactly; all relator words evaluate to +-identity.
Holonomy holonomy_rep(const surface::FNPoint& p);

// 2 arccosh(|tr|/2) of the word image; cyclic-rotation and inversion
// invariant.  Throws non_hyperbolic_error for |tr| <= 2.
double curve_length(const Holonomy& rep, const surface::CurveClass& c);

// Angles and subarc data at the i(a,b) in {1,2} intersection points of a
// decomposition curve a with an enumerated class b.  i = 0 gives an empty
// result; i > 2 is unsupported.
IntersectionData intersection_data(const Holonomy& rep,
                                   const surface::CurveClass& a,
                                   const surface::CurveClass& b);

// Length of the orthogeodesic representative of a boundary-to-boundary arc.
double ortho_arc_length(const Holonomy& rep, const surface::CurveClass& arc);

// Largest deviation of any pants / gluing relator from +-identity.
double max_relator_defect(const Holonomy& rep);

// Generator matrices as CSV (gen id, a, b, c, d; 17 significant digits).
std::string generator_csv(const Holonomy& rep);

}  // namespace hyperlab::holonomy
