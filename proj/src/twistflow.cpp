#include "hyperlab/twistflow.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace hyperlab::twistflow {

using holonomy::Holonomy;
using surface::CurveClass;
using surface::FNPoint;

double TwistVector::sup_norm() const {
  double s = 0.0;
  for (const auto& [i, t] : entries) s = std::max(s, std::abs(t));
  return s;
}

surface::FNPoint twist(const FNPoint& p, int i, double t) {
  if (i < 0 || i >= static_cast<int>(p.decomp->curves.size()) ||
      !p.decomp->curves[i].interior)
    throw domain_error("twist: curve must be an interior decomposition curve");
  FNPoint q = p;
  q.twists[i] += 2.0 * M_PI * t / p.lengths[i];
  return q;
}

surface::FNPoint multi_twist(const FNPoint& p, const TwistVector& tv) {
  FNPoint q = p;
  for (const auto& [i, t] : tv.entries) q = twist(q, i, t);
  return q;
}

std::vector<double> length_along_twist(const FNPoint& p, int i,
                                       const CurveClass& beta,
                                       const std::vector<double>& ts) {
  std::vector<double> out;
  out.reserve(ts.size());
  for (double t : ts)
    out.push_back(holonomy::curve_length(holonomy::holonomy_rep(twist(p, i, t)), beta));
  return out;
}

namespace {

holonomy::IntersectionData points_at(const FNPoint& p, int i, const CurveClass& beta) {
  const Holonomy rep = holonomy::holonomy_rep(p);
  return holonomy::intersection_data(rep, surface::curve_as_class(*p.decomp, i), beta);
}

}  // namespace

double wolpert_d1(const FNPoint& p, int i, const CurveClass& beta) {
  if (beta.intersections.empty())
    throw domain_error("wolpert_d1: class lacks intersection data");
  if (beta.intersections.at(i) == 0) return 0.0;
  const auto data = points_at(p, i, beta);
  double s = 0.0;
  for (const auto& pt : data.points) s += pt.cos_theta;
  return s;
}

double wolpert_d2(const FNPoint& p, int i, const CurveClass& beta) {
  if (beta.intersections.empty())
    throw domain_error("wolpert_d2: class lacks intersection data");
  if (beta.intersections.at(i) == 0) return 0.0;
  const auto data = points_at(p, i, beta);
  const double lb =
      holonomy::curve_length(holonomy::holonomy_rep(p), beta);
  const double el = std::exp(lb);
  double d2 = 0.0;
  for (const auto& pt : data.points)
    d2 += (el + 1.0) / (2.0 * (el - 1.0)) * pt.sin_theta * pt.sin_theta;
  if (data.points.size() == 2) {
    // Ordered-pair cross term of Wolpert's formula: the two ordered pairs
    // contribute equally, collapsing the 2(e^l - 1) denominator to e^l - 1.
    d2 += (std::exp(data.subarcs[0]) + std::exp(data.subarcs[1])) / (el - 1.0) *
          data.points[0].sin_theta * data.points[1].sin_theta;
  }
  return d2;
}

ProofConstants measure_proof_constants(surface::DecompositionPtr d, double delta,
                                       double M, double D, int samples,
                                       unsigned seed) {
  if (!(delta > 0.0) || !(delta < M)) throw domain_error("need 0 < delta < M");
  if (!(D > 0.0)) throw domain_error("need D > 0");
  if (samples < 1) throw domain_error("need at least one sample");
  if (d->num_interior() == 0) throw domain_error("no interior curves to twist");

  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> ulog(std::log(delta), std::log(M));
  std::uniform_real_distribution<double> utheta(0.0, 2.0 * M_PI);

  ProofConstants pc;
  pc.delta = delta;
  pc.M = M;
  pc.D = D;
  pc.L = 0.0;
  pc.rho0 = 1.0;
  for (int s = 0; s < samples; ++s) {
    std::vector<double> lengths(d->curves.size());
    for (double& l : lengths) l = std::exp(ulog(rng));
    std::vector<double> twists(d->num_interior());
    for (double& t : twists) t = utheta(rng);
    const FNPoint p = surface::make_fn_point(d, lengths, twists);
    const Holonomy rep = holonomy::holonomy_rep(p);
    for (int i = 0; i < d->num_interior(); ++i) {
      const CurveClass beta = surface::dual_curve(*d, i);
      pc.L = std::max(pc.L, holonomy::curve_length(rep, beta));
      const auto data =
          holonomy::intersection_data(rep, surface::curve_as_class(*d, i), beta);
      for (const auto& pt : data.points) pc.rho0 = std::min(pc.rho0, pt.sin_theta);
    }
  }

  pc.K = (std::exp(pc.L + M) + 1.0) / (4.0 * (std::exp(pc.L + M) - 1.0));
  pc.lambda = pc.K * pc.rho0 * pc.rho0 * delta / 2.0;
  pc.eD = (std::exp(D) - 1.0) / D;
  pc.N = 4.0 * (std::exp(pc.L) - 1.0) / (std::exp(pc.L) + 1.0) *
             std::sqrt(1.0 - pc.rho0 * pc.rho0) / (pc.rho0 * pc.rho0) +
         1.0;
  pc.C = pc.eD * (pc.L + pc.N * M) / pc.lambda;
  return pc;
}

namespace {

// l_t(beta) as a function of the twist amount along curve i.
struct TwistLength {
  const FNPoint& p;
  int i;
  const CurveClass& beta;
  double operator()(double t) const {
    return holonomy::curve_length(holonomy::holonomy_rep(twist(p, i, t)), beta);
  }
};

// Bisection for f(t) = target on [a, b] where f is monotone.
double solve_monotone(const TwistLength& f, double a, double b, double target,
                      bool increasing) {
  for (int it = 0; it < 200 && b - a > 1e-10; ++it) {
    const double m = (a + b) / 2.0;
    const bool above = f(m) > target;
    if (above == increasing)
      b = m;
    else
      a = m;
  }
  return (a + b) / 2.0;
}

}  // namespace

RecoverResult twist_recover(const FNPoint& p, const FNPoint& q, int i,
                            const ProofConstants& pc) {
  if (p.decomp != q.decomp && !(*p.decomp == *q.decomp))
    throw validation_error("twist_recover: decompositions differ");
  if (i < 0 || i >= p.decomp->num_interior())
    throw domain_error("twist_recover: not an interior curve");
  for (size_t k = 0; k < p.lengths.size(); ++k)
    if (std::abs(p.lengths[k] - q.lengths[k]) > 1e-12)
      throw validation_error("twist_recover: lengths differ, not a pure twist");
  for (size_t k = 0; k < p.twists.size(); ++k)
    if (static_cast<int>(k) != i && std::abs(p.twists[k] - q.twists[k]) > 1e-12)
      throw validation_error("twist_recover: twists differ off the given curve");

  const CurveClass beta = surface::dual_curve(*p.decomp, i);
  const Holonomy rep_q = holonomy::holonomy_rep(q);
  const double target = holonomy::curve_length(rep_q, beta);
  const TwistLength f{p, i, beta};

  // Locate the convexity minimum via the finite-difference derivative.
  const double h = 1e-6;
  auto fprime = [&](double t) { return (f(t + h) - f(t - h)) / (2.0 * h); };
  double a = -1.0, b = 1.0;
  while (fprime(a) > 0.0) a *= 2.0;
  while (fprime(b) < 0.0) b *= 2.0;
  while (b - a > 1e-9) {
    const double m = (a + b) / 2.0;
    (fprime(m) < 0.0 ? a : b) = m;
  }
  const double t0 = (a + b) / 2.0;
  const double fmin = f(t0);

  RecoverResult out;
  if (target <= fmin + 1e-12) {
    out.t_hat = t0;
  } else {
    // Two preimages, one on each branch; expand brackets until enclosed.
    double right = t0 + 1.0, left = t0 - 1.0;
    while (f(right) < target) right = t0 + 2.0 * (right - t0);
    while (f(left) < target) left = t0 - 2.0 * (t0 - left);
    const double tplus = solve_monotone(f, t0, right, target, true);
    const double tminus = solve_monotone(f, left, t0, target, false);
    // Disambiguate with the once-twisted dual, whose length separates the
    // two candidates.
    const CurveClass beta1 = surface::dehn_twist_class(*p.decomp, beta, i, 1);
    const double target1 = holonomy::curve_length(rep_q, beta1);
    const TwistLength g{p, i, beta1};
    out.t_hat = std::abs(g(tplus) - target1) <= std::abs(g(tminus) - target1)
                    ? tplus
                    : tminus;
  }

  // Certified bound from the twist-bound constant.
  const Holonomy rep_p = holonomy::holonomy_rep(p);
  double sup_log = 0.0;
  for (int j = 0; j < p.decomp->num_interior(); ++j) {
    const CurveClass bj = surface::dual_curve(*p.decomp, j);
    const double lp = holonomy::curve_length(rep_p, bj);
    const double lq = holonomy::curve_length(rep_q, bj);
    sup_log = std::max(sup_log, std::abs(std::log(lq / lp)));
  }
  out.bound = CertifiedBound{pc.C * sup_log, BoundKind::Upper,
                             "twist-bound-constant", 0};
  return out;
}

}  // namespace hyperlab::twistflow
