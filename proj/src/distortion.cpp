#include "cantorq/distortion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace cantorq {

std::vector<double> voronoi_boundaries(const Quantizer& alpha) {
  std::vector<double> b;
  b.reserve(static_cast<std::size_t>(alpha.size() - 1));
  for (int i = 0; i + 1 < alpha.size(); ++i) b.push_back(0.5 * (alpha[i] + alpha[i + 1]));
  return b;
}

namespace {

struct EngineState {
  double r;
  double v;  // variance
  const std::vector<double>* pts;
  std::vector<double> bounds;
  double tol;
  int depth_cap;
  double lower = 0.0;
  double upper = 0.0;
  int resolved_depth = 0;
  double unresolved_mass = 0.0;

  double nearest_dist(double x) const {
    auto it = std::lower_bound(pts->begin(), pts->end(), x);
    double d = std::numeric_limits<double>::infinity();
    if (it != pts->end()) d = std::min(d, *it - x);
    if (it != pts->begin()) d = std::min(d, x - *(it - 1));
    return d;
  }

  void recurse(double scale, double offset, double mass, int depth) {
    const double left = offset;
    const double right = offset + scale;
    resolved_depth = std::max(resolved_depth, depth);

    // Boundaries strictly inside (left, right); touching counts as inside.
    const auto first = std::upper_bound(bounds.begin(), bounds.end(), left);
    const auto last = std::lower_bound(bounds.begin(), bounds.end(), right);
    if (first == last) {
      const std::size_t cell = static_cast<std::size_t>(first - bounds.begin());
      const double c = offset + 0.5 * scale;
      const double d = c - (*pts)[cell];
      const double exact = mass * (scale * scale * v + d * d);
      lower += exact;
      upper += exact;
      return;
    }

    // Distance to the nearest codepoint over [left, right] is piecewise
    // linear: extremes occur at the interval endpoints, at codepoints inside
    // (min 0) and at cell boundaries inside (local maxima).
    const bool stop_depth = depth >= depth_cap;
    double dmin = std::min(nearest_dist(left), nearest_dist(right));
    const auto plo = std::lower_bound(pts->begin(), pts->end(), left);
    if (plo != pts->end() && *plo <= right) dmin = 0.0;
    double dmax = std::max(nearest_dist(left), nearest_dist(right));
    for (auto it = first; it != last; ++it) dmax = std::max(dmax, nearest_dist(*it));

    if (stop_depth || dmax * dmax - dmin * dmin <= tol) {
      lower += mass * dmin * dmin;
      upper += mass * dmax * dmax;
      if (stop_depth) unresolved_mass += mass;
      return;
    }
    recurse(scale * r, offset, 0.5 * mass, depth + 1);
    recurse(scale * r, offset + scale * (1.0 - r), 0.5 * mass, depth + 1);
  }
};

}  // namespace

DistortionResult distortion(Ratio ratio, const Quantizer& alpha, double tol, int depth_cap) {
  EngineState st;
  st.r = ratio.value();
  st.v = variance(ratio);
  st.pts = &alpha.points();
  st.bounds = voronoi_boundaries(alpha);
  st.tol = tol;
  st.depth_cap = depth_cap;
  st.recurse(1.0, 0.0, 1.0, 0);

  DistortionResult out;
  out.lower = st.lower;
  out.upper = st.upper;
  out.value = 0.5 * (st.lower + st.upper);
  out.resolved_depth = st.resolved_depth;
  out.unresolved_mass = st.unresolved_mass;
  return out;
}

double distortion_over_union(Ratio r, std::span<const Word> words, double x0) {
  if (words.empty()) throw Error("distortion_over_union needs at least one word");
  // Reuse the overlap check of centroid_of_union.
  (void)centroid_of_union(r, words);
  double total = 0.0;
  for (const auto& w : words) total += second_moment_about(r, w, x0);
  return total;
}

}  // namespace cantorq
