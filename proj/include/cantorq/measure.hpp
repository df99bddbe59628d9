#pragma once

#include <span>

#include "cantorq/ratio.hpp"
#include "cantorq/word.hpp"

namespace cantorq {

/// Affine map x -> scale * x + offset.
struct Affine {
  double scale = 1.0;
  double offset = 0.0;
  double operator()(double x) const { return scale * x + offset; }
};

/// Expected value of the distribution, constant in r by symmetry.
inline constexpr double kExpectation = 0.5;

/// Composition S_sigma = S_{s1} o S_{s2} o ... o S_{sk} as a single affine
/// map (r^k, t). Symbols are folded left to right: starting from the
/// identity, each symbol i updates (s, t) <- (s*r, t + s*c_i) with c_1 = 0
/// and c_2 = 1 - r.
Affine affine_of_word(Ratio r, const Word& sigma);

/// Level-k cylinder J_sigma = S_sigma([0,1]): an interval of length r^k
/// carrying mass 2^-k, with centroid S_sigma(1/2).
struct Cylinder {
  Word word;
  double left = 0.0;
  double right = 1.0;
  double mass = 1.0;      // 2^-k
  double scale = 1.0;     // r^k
  double centroid = 0.5;  // S_sigma(1/2)
};

Cylinder cylinder(Ratio r, const Word& sigma);

/// Variance V = (1-r) / (4(1+r)).
double variance(Ratio r);

/// Conditional expectation over J_sigma, which equals S_sigma(1/2).
double centroid_of_word(Ratio r, const Word& sigma);

/// Conditional expectation over a union of pairwise disjoint cylinders:
/// sum of 2^-|s| S_s(1/2) over the words, divided by the total mass.
/// Throws OverlappingWords if two cylinders intersect in more than a point.
double centroid_of_union(Ratio r, std::span<const Word> words);

/// Exact second moment of the restriction to J_sigma about x0:
///   2^-k ( r^2k V + (S_sigma(1/2) - x0)^2 ).
/// The empty word gives V + (x0 - 1/2)^2, the global second moment.
double second_moment_about(Ratio r, const Word& sigma, double x0);

/// Mass, conditional mean and conditional second central moment of the
/// restriction to an interval, from an adaptive cylinder recursion.
/// `mean` is NaN when `mass` is zero. `enclosure_width` bounds the error of
/// every reported field caused by straddling cylinders whose recursion was
/// truncated (with U the truncated mass and M the resolved mass, the field
/// errors are at most U, U/M and 3U/M respectively, all <= U*max(1, 3/M)).
struct RestrictedMoments {
  double mass = 0.0;
  double mean = 0.0;
  double second_central = 0.0;
  double enclosure_width = 0.0;
};

/// A cylinder wholly inside [lo, hi] contributes its exact moments; one
/// wholly outside contributes nothing; a straddling cylinder recurses until
/// depth_cap or until its mass * diameter^2 drops below tol. Endpoints that
/// coincide with cylinder endpoints count the cylinder as inside (the
/// distribution is non-atomic, so single points carry no mass). A degenerate
/// interval yields zero mass.
RestrictedMoments restricted_moments(Ratio r, double lo, double hi,
                                     int depth_cap = 60, double tol = 1e-13);

}  // namespace cantorq
