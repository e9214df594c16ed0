#pragma once

#include <map>
#include <vector>

#include "hyperlab/certified.hpp"
#include "hyperlab/holonomy.hpp"
#include "hyperlab/surface.hpp"

namespace hyperlab::twistflow {

// Multi-twist amounts in hyperbolic-length units, indexed by interior curve.
struct TwistVector {
  std::map<int, double> entries;
  double sup_norm() const;
};

// Time-t left twist along interior curve i: lengths unchanged,
// theta_i += 2 pi t / l_i (a full twist t = l_i adds 2 pi).
surface::FNPoint twist(const surface::FNPoint& p, int i, double t);

// Simultaneous twists along disjoint curves; order-independent.
surface::FNPoint multi_twist(const surface::FNPoint& p, const TwistVector& tv);

// Samples t -> l_t(beta) along the twist flow of curve i.
std::vector<double> length_along_twist(const surface::FNPoint& p, int i,
                                       const surface::CurveClass& beta,
                                       const std::vector<double>& ts);

// Wolpert derivative formulas at t = 0 (one or two intersection points).
double wolpert_d1(const surface::FNPoint& p, int i, const surface::CurveClass& beta);
double wolpert_d2(const surface::FNPoint& p, int i, const surface::CurveClass& beta);

// Constants assembled per the twist-bound proof; rho0 and L are measured over
// a deterministic sweep of the Shiga box rather than taken from a formula.
struct ProofConstants {
  double delta = 0.0, M = 0.0, D = 0.0;  // inputs
  double L = 0.0;      // measured sup of dual-curve lengths
  double rho0 = 0.0;   // measured min of sin(theta) at dual intersections
  double K = 0.0;      // (e^{L+M}+1) / (4 (e^{L+M}-1))
  double lambda = 0.0; // K rho0^2 delta / 2
  double eD = 0.0;     // (e^D - 1) / D
  double N = 0.0;      // Dehn-twist order cap
  double C = 0.0;      // final constant e(D) (L + N M) / lambda
};

ProofConstants measure_proof_constants(surface::DecompositionPtr d, double delta,
                                       double M, double D, int samples,
                                       unsigned seed);

struct RecoverResult {
  double t_hat = 0.0;
  CertifiedBound bound;  // C * sup_i |log l_q(beta_i)/l_p(beta_i)|, upper bound on |t|
};

// Recovers the twist amount from dual-curve lengths alone, using strict
// convexity of t -> l_t(beta_i): the two convexity preimages of the target
// length are disambiguated by the once-twisted dual's length.
RecoverResult twist_recover(const surface::FNPoint& p, const surface::FNPoint& q,
                            int i, const ProofConstants& pc);

}  // namespace hyperlab::twistflow
