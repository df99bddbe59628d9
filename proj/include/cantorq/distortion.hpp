#pragma once

#include <span>
#include <vector>

#include "cantorq/measure.hpp"
#include "cantorq/quantizer.hpp"

namespace cantorq {

/// The n-1 cell boundaries (midpoints of adjacent codepoints). The cell of
/// point i is [b_{i-1}, b_i] with implicit outer sentinels at -inf and +inf.
std::vector<double> voronoi_boundaries(const Quantizer& alpha);

/// Rigorous enclosure of the distortion integral min-distance-squared.
/// `value` is the midpoint of [lower, upper]; upper - lower stays below the
/// requested tolerance unless the depth cap was hit, in which case
/// unresolved_mass reports how much mass was bounded rather than resolved.
struct DistortionResult {
  double lower = 0.0;
  double upper = 0.0;
  double value = 0.0;
  int resolved_depth = 0;
  double unresolved_mass = 0.0;
};

/// Recursive descent over cylinders: a cylinder wholly inside one Voronoi
/// cell contributes its exact second moment about the owning codepoint; a
/// cylinder with a cell boundary strictly inside it splits into its two
/// children. A straddling cylinder stops early once the spread of its
/// possible contribution is below tol (mass-weighted, so the total enclosure
/// width stays below tol), or at depth_cap, and is then bounded by
/// [mass d_min^2, mass d_max^2] over the cylinder interval.
/// A cylinder touching a boundary only at an endpoint counts as inside.
DistortionResult distortion(Ratio r, const Quantizer& alpha, double tol = 1e-12,
                            int depth_cap = 60);

/// Sum of exact second moments about x0 over pairwise disjoint cylinders.
double distortion_over_union(Ratio r, std::span<const Word> words, double x0);

}  // namespace cantorq
