#include "cantorq/measure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace cantorq {

Affine affine_of_word(Ratio ratio, const Word& sigma) {
  const double r = ratio.value();
  Affine a;
  for (int i = 0; i < sigma.size(); ++i) {
    const double c = sigma[i] == 1 ? 0.0 : 1.0 - r;
    a.offset += a.scale * c;
    a.scale *= r;
  }
  return a;
}

Cylinder cylinder(Ratio r, const Word& sigma) {
  const Affine a = affine_of_word(r, sigma);
  Cylinder c;
  c.word = sigma;
  c.left = a.offset;
  c.right = a.offset + a.scale;
  c.mass = std::ldexp(1.0, -sigma.size());
  c.scale = a.scale;
  c.centroid = a.offset + 0.5 * a.scale;
  return c;
}

double variance(Ratio ratio) {
  const double r = ratio.value();
  return (1.0 - r) / (4.0 * (1.0 + r));
}

double centroid_of_word(Ratio r, const Word& sigma) {
  const Affine a = affine_of_word(r, sigma);
  return a.offset + 0.5 * a.scale;
}

namespace {

// Overlap means intersecting in more than a point; cylinders touching at an
// endpoint are fine.
void ensure_disjoint(const std::vector<Cylinder>& cyls) {
  std::vector<const Cylinder*> sorted;
  sorted.reserve(cyls.size());
  for (const auto& c : cyls) sorted.push_back(&c);
  std::sort(sorted.begin(), sorted.end(), [](const Cylinder* a, const Cylinder* b) {
    return a->left < b->left || (a->left == b->left && a->right < b->right);
  });
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i]->left < sorted[i - 1]->right)
      throw OverlappingWords("cylinders of words " + sorted[i - 1]->word.str() + " and " +
                             sorted[i]->word.str() + " overlap");
  }
}

}  // namespace

double centroid_of_union(Ratio r, std::span<const Word> words) {
  if (words.empty()) throw Error("centroid_of_union needs at least one word");
  std::vector<Cylinder> cyls;
  cyls.reserve(words.size());
  for (const auto& w : words) cyls.push_back(cylinder(r, w));
  ensure_disjoint(cyls);
  double num = 0.0, den = 0.0;
  for (const auto& c : cyls) {
    num += c.mass * c.centroid;
    den += c.mass;
  }
  return num / den;
}

double second_moment_about(Ratio r, const Word& sigma, double x0) {
  const Cylinder c = cylinder(r, sigma);
  const double d = c.centroid - x0;
  return c.mass * (c.scale * c.scale * variance(r) + d * d);
}

namespace {

struct MomentAccumulator {
  double m0 = 0.0, m1 = 0.0, m2 = 0.0;  // raw moments about 0
  double unresolved = 0.0;
};

void restricted_rec(double r, double v, double lo, double hi, double scale,
                    double offset, double mass, int depth, int depth_cap,
                    double tol, MomentAccumulator& acc) {
  const double left = offset;
  const double right = offset + scale;
  if (left >= lo && right <= hi) {
    const double c = offset + 0.5 * scale;
    acc.m0 += mass;
    acc.m1 += mass * c;
    acc.m2 += mass * (scale * scale * v + c * c);
    return;
  }
  if (right <= lo || left >= hi) return;
  if (depth >= depth_cap || mass * scale * scale < tol) {
    acc.unresolved += mass;
    return;
  }
  restricted_rec(r, v, lo, hi, scale * r, offset, 0.5 * mass, depth + 1, depth_cap, tol, acc);
  restricted_rec(r, v, lo, hi, scale * r, offset + scale * (1.0 - r), 0.5 * mass, depth + 1,
                 depth_cap, tol, acc);
}

}  // namespace

RestrictedMoments restricted_moments(Ratio ratio, double lo, double hi, int depth_cap,
                                     double tol) {
  RestrictedMoments out;
  out.mean = std::numeric_limits<double>::quiet_NaN();
  if (!(lo < hi)) return out;  // degenerate or empty interval
  MomentAccumulator acc;
  restricted_rec(ratio.value(), variance(ratio), lo, hi, 1.0, 0.0, 1.0, 0, depth_cap, tol, acc);
  out.mass = acc.m0;
  if (acc.m0 > 0.0) {
    out.mean = acc.m1 / acc.m0;
    out.second_central = std::max(0.0, acc.m2 / acc.m0 - out.mean * out.mean);
    out.enclosure_width = acc.unresolved * std::max(1.0, 3.0 / acc.m0);
  } else {
    out.mean = std::numeric_limits<double>::quiet_NaN();
    out.second_central = 0.0;
    out.enclosure_width = acc.unresolved;
  }
  return out;
}

}  // namespace cantorq
