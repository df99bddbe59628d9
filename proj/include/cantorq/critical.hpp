#pragma once

#include <utility>

#include "cantorq/sets.hpp"

namespace cantorq {

/// p(r) = 6 (r-1)(r^4 + r^2) - (r^7 + r^6 + 4r^5 - 2r^4 - 2r^3 - 8r^2 + 9r - 3).
/// Its unique root in (0, 1/2) is the critical ratio r0 where the beta and
/// gamma three-point distortions cross; the identity
/// p(r) = -48 (r+1) (V(beta3) - V(gamma3)) ties it to the closed forms.
double critical_polynomial(double r);

struct RootResult {
  double root = 0.0;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  double residual = 0.0;  // function value at the root
  int iterations = 0;
};

/// Sign-scan p on a 1000-point grid over (0, 1/2) to confirm exactly one
/// sign change, then bisect to tol. Throws BracketNotFound if no change is
/// seen and MultipleRoots if the uniqueness scan fails.
RootResult solve_r0(double tol = 1e-12);

/// The two ratios bounding the range where the three-point gamma set is a
/// CVT: bisection on the cell-capture margin functions (the Voronoi boundary
/// between the first two points against the enclosing cylinder gap), seeded
/// by a CVT grid scan.
std::pair<double, double> solve_gamma_cvt_endpoints(double tol = 1e-12);

/// The ratio where the three-point delta distortion crosses the beta closed
/// form, from bisection of the engine-computed difference on [0.43, 0.44].
double solve_delta_crossing(double tol = 1e-10);

/// Distortions of the three 3-point candidates at one ratio (closed forms
/// for beta and gamma, engine for delta) and which is smallest.
struct OrderingReport {
  double v_beta3 = 0.0;
  double v_gamma3 = 0.0;
  double v_delta3 = 0.0;
  Family min_label = Family::beta;
};

OrderingReport ordering_report(double r);

}  // namespace cantorq
