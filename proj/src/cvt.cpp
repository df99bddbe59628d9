#include "cantorq/cvt.hpp"

#include <algorithm>
#include <cmath>

#include "cantorq/distortion.hpp"
#include "cantorq/measure.hpp"

namespace cantorq {

CvtReport check_cvt(Ratio r, const Quantizer& alpha, double tol) {
  const std::vector<double> bounds = voronoi_boundaries(alpha);
  CvtReport rep;
  rep.per_point.reserve(static_cast<std::size_t>(alpha.size()));
  bool ok = true;
  for (int i = 0; i < alpha.size(); ++i) {
    const double lo = i == 0 ? 0.0 : bounds[static_cast<std::size_t>(i - 1)];
    const double hi = i == alpha.size() - 1 ? 1.0 : bounds[static_cast<std::size_t>(i)];
    // Depth-capped recursion only (tol 0): a boundary lying close to a
    // cylinder endpoint spawns a long straddle chain, and any tolerance-based
    // stop there abandons mass far above the centroid test's resolution.
    const RestrictedMoments rm =
        restricted_moments(r, std::max(0.0, lo), std::min(1.0, hi), 60, 0.0);
    CvtReport::Cell cell;
    cell.point = alpha[i];
    cell.cell_mass = rm.mass;
    if (rm.mass > 0.0) {
      cell.cell_centroid = rm.mean;
      cell.residual = std::abs(rm.mean - alpha[i]);
      rep.max_centroid_residual = std::max(rep.max_centroid_residual, cell.residual);
      if (cell.residual > tol) {
        ok = false;
        rep.failing_inequalities.push_back("centroid[" + std::to_string(i) + "]");
      }
    } else {
      ok = false;
      rep.failing_inequalities.push_back("mass[" + std::to_string(i) + "]");
    }
    rep.per_point.push_back(cell);
  }
  rep.is_cvt = ok;
  return rep;
}

namespace {

// Positive inside the valid range, zero exactly where the inequality chain
// turns into an equality.
double coarse_margin(Ratio r) {
  const Word w1212 = Word::parse("1212"), w122 = Word::parse("122");
  const Word words[] = {w1212, w122};
  const double mid = 0.5 * (centroid_of_union(r, words) + centroid_of_word(r, Word::parse("21")));
  const Affine left = affine_of_word(r, w122);
  const Affine right = affine_of_word(r, Word::parse("21"));
  return std::min(mid - left(1.0), right(0.0) - mid);
}

double fine_margin(Ratio r) {
  const Word w1212 = Word::parse("1212"), w122 = Word::parse("122");
  const Word words[] = {w1212, w122};
  const double mid = 0.5 * (centroid_of_union(r, words) + centroid_of_word(r, Word::parse("211")));
  const Affine left = affine_of_word(r, w122);
  const Affine right = affine_of_word(r, Word::parse("211"));
  return std::min(mid - left(1.0), right(0.0) - mid);
}

template <class F>
double bisect_sign_change(F f, double lo, double hi, double tol, int max_iter = 200) {
  double flo = f(lo), fhi = f(hi);
  if (!(flo == 0.0) && !(fhi == 0.0) && (flo > 0.0) == (fhi > 0.0))
    throw BracketNotFound("no sign change in bracket");
  for (int i = 0; i < max_iter && hi - lo > tol; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

GammaInequalities check_gamma_inequalities(Ratio r) {
  GammaInequalities out;
  out.coarse_ok = coarse_margin(r) > 0.0;
  out.fine_ok = fine_margin(r) > 0.0;
  out.gamma3_cvt = check_cvt(r, build_gamma(r, 3)).is_cvt;
  return out;
}

double beta_cvt_upper_bound() { return (5.0 - std::sqrt(17.0)) / 2.0; }

std::pair<double, double> solve_gamma_adjacency_bounds(double tol) {
  const auto coarse = [](double x) { return coarse_margin(Ratio(x)); };
  const auto fine = [](double x) { return fine_margin(Ratio(x)); };
  return {bisect_sign_change(coarse, 0.40, 0.4999, tol),
          bisect_sign_change(fine, 0.40, 0.4999, tol)};
}

ScanResult scan_cvt_range(double r_lo, double r_hi, int steps, Family family, int n) {
  if (!(0.0 < r_lo && r_lo < r_hi && r_hi < 0.5))
    throw InvalidRange("need 0 < r_lo < r_hi < 0.5");
  if (steps < 2) throw InvalidRange("need at least 2 grid steps");

  const auto verdict = [&](double x) {
    const Ratio r(x);
    return check_cvt(r, build_family(r, n, family)).is_cvt;
  };

  ScanResult out;
  out.samples.reserve(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    const double x = r_lo + (r_hi - r_lo) * static_cast<double>(i) / (steps - 1);
    out.samples.emplace_back(x, verdict(x));
  }
  for (std::size_t i = 1; i < out.samples.size(); ++i) {
    if (out.samples[i - 1].second == out.samples[i].second) continue;
    double lo = out.samples[i - 1].first, hi = out.samples[i].first;
    const bool state_lo = out.samples[i - 1].second;
    while (hi - lo > 1e-9) {
      const double mid = 0.5 * (lo + hi);
      if (verdict(mid) == state_lo)
        lo = mid;
      else
        hi = mid;
    }
    out.transitions.push_back(0.5 * (lo + hi));
  }
  return out;
}

}  // namespace cantorq
