#pragma once

#include <optional>

#include "hyperlab/certified.hpp"
#include "hyperlab/holonomy.hpp"
#include "hyperlab/surface.hpp"

namespace hyperlab::metrics {

struct ThickPartSpec {
  double epsilon = 0.0;                 // lower bound for closed-curve lengths
  std::optional<double> epsilon0;       // optional cap on boundary lengths
};

enum class Membership { In, Out, Unknown };

// Fenchel-Nielsen distance: sup over curves of max(|log l/l'|, |l theta - l'
// theta'|); boundary curves contribute only the log term.  Exact.
CertifiedBound d_fn(const surface::FNPoint& p, const surface::FNPoint& q);

// Certified lower bound for the length-spectrum distance: half the log of the
// largest two-sided length ratio over the budget-K curve family.  Classes
// with non-hyperbolic image are skipped (count in *skipped if given).
CertifiedBound d_ls_lower(const holonomy::Holonomy& hp, const holonomy::Holonomy& hq,
                          int K, int* skipped = nullptr);

// Certified upper bound for d_ls of a pure twist of amount t along curve
// alpha: |t| / (4 w(l(alpha))) with w the collar half-width, since any class
// crossing alpha k times has length at least 2 k w.
CertifiedBound twist_dls_upper(const holonomy::Holonomy& hp, int alpha, double t,
                               int K);

// Certified lower bound for the arc metric: log of the largest two-sided
// ratio over enumerated arcs and boundary curves.
CertifiedBound d_arc_lower(const holonomy::Holonomy& hp, const holonomy::Holonomy& hq,
                           int K);

// Thick-part test: "out" on any certified violation, "in" only when the
// decomposition-curve systole certificate min(l_i, 2 w(l_i)) covers epsilon,
// otherwise unknown at this budget.
Membership thick_membership(const holonomy::Holonomy& hp, const ThickPartSpec& spec,
                            int K);

}  // namespace hyperlab::metrics
