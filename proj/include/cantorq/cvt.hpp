#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cantorq/quantizer.hpp"
#include "cantorq/ratio.hpp"
#include "cantorq/sets.hpp"

namespace cantorq {

/// Per-cell diagnostics of the centroid fixed-point test. A codebook is a
/// centroidal Voronoi tessellation when every cell carries positive mass and
/// every codepoint equals its cell's conditional centroid. Zero boundary
/// mass (the tessellation condition itself) holds automatically: boundaries
/// are finitely many points and the distribution is non-atomic.
struct CvtReport {
  struct Cell {
    double point = 0.0;
    double cell_mass = 0.0;
    double cell_centroid = 0.0;
    double residual = 0.0;
  };
  bool is_cvt = false;
  double max_centroid_residual = 0.0;
  std::vector<Cell> per_point;
  std::vector<std::string> failing_inequalities;
};

/// Centroid test on every Voronoi cell, clipped to [0,1]. The moment
/// recursion runs depth-capped with no tolerance-based stop, keeping
/// integration error near 2^-60 so the verdict is decided by the residuals.
CvtReport check_cvt(Ratio r, const Quantizer& alpha, double tol = 1e-9);

/// Direct evaluation of the two cross-cylinder adjacency inequalities the
/// gamma construction needs between consecutive scaled copies, plus the
/// three-point base-set CVT verdict:
///   coarse_ok:  S_122(1) < (a(1212,122) + a(21)) / 2  < S_21(0)
///   fine_ok:    S_122(1) < (a(1212,122) + a(211)) / 2 < S_211(0)
struct GammaInequalities {
  bool coarse_ok = false;
  bool fine_ok = false;
  bool gamma3_cvt = false;
};

GammaInequalities check_gamma_inequalities(Ratio r);

/// Largest ratio for which the beta family stays a CVT: (5 - sqrt(17)) / 2,
/// the root of x^2 - 5x + 2 in (0, 1/2).
double beta_cvt_upper_bound();

/// The ratios where the coarse/fine adjacency inequalities stop holding,
/// recovered by bisection on their margin functions.
std::pair<double, double> solve_gamma_adjacency_bounds(double tol = 1e-12);

/// Uniform grid of CVT verdicts over [r_lo, r_hi]; every flip between
/// adjacent grid points is refined by bisection to 1e-9 and reported in
/// `transitions`.
struct ScanResult {
  std::vector<std::pair<double, bool>> samples;
  std::vector<double> transitions;
};

ScanResult scan_cvt_range(double r_lo, double r_hi, int steps, Family family, int n);

}  // namespace cantorq
