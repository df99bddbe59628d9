#include "cantorq/critical.hpp"

#include <cmath>
#include <functional>

#include "cantorq/cvt.hpp"
#include "cantorq/distortion.hpp"

namespace cantorq {

double critical_polynomial(double r) {
  const double r2 = r * r, r3 = r2 * r, r4 = r2 * r2, r5 = r4 * r, r6 = r3 * r3, r7 = r6 * r;
  return 6.0 * (r - 1.0) * (r4 + r2) -
         (r7 + r6 + 4.0 * r5 - 2.0 * r4 - 2.0 * r3 - 8.0 * r2 + 9.0 * r - 3.0);
}

namespace {

constexpr int kMaxBisectIter = 200;

RootResult bisect(const std::function<double(double)>& f, double lo, double hi, double tol) {
  double flo = f(lo), fhi = f(hi);
  if ((flo > 0.0) == (fhi > 0.0))
    throw BracketNotFound("bracket endpoints have equal signs");
  RootResult res;
  res.bracket_lo = lo;
  res.bracket_hi = hi;
  int it = 0;
  while (hi - lo > tol && it < kMaxBisectIter) {
    ++it;
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) {
      lo = hi = mid;
      break;
    }
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
      fhi = fm;
    }
  }
  res.root = 0.5 * (lo + hi);
  res.residual = f(res.root);
  res.iterations = it;
  return res;
}

// Margins of the two capture conditions on the cell of the first gamma3
// point: its right Voronoi boundary must stay inside the gap between the
// second and third cylinder of the union it is meant to own.
double gamma3_lower_margin(double x) {
  const Ratio r(x);
  const Word words[] = {Word::parse("11"), Word::parse("121")};
  const double b1 = 0.5 * (centroid_of_union(r, words) + 0.5);
  return affine_of_word(r, Word::parse("122")).offset - b1;
}

double gamma3_upper_margin(double x) {
  const Ratio r(x);
  const Word words[] = {Word::parse("11"), Word::parse("121")};
  const double b1 = 0.5 * (centroid_of_union(r, words) + 0.5);
  const Affine a = affine_of_word(r, Word::parse("121"));
  return b1 - (a.offset + a.scale);
}

}  // namespace

RootResult solve_r0(double tol) {
  if (!(tol > 0.0)) throw InvalidRange("tolerance must be positive");
  constexpr int kGrid = 1000;
  double prev_x = 0.5 / kGrid;
  double prev_f = critical_polynomial(prev_x);
  double blo = 0.0, bhi = 0.0;
  int changes = 0;
  for (int i = 2; i < kGrid; ++i) {
    const double x = 0.5 * static_cast<double>(i) / kGrid;
    const double fx = critical_polynomial(x);
    if ((fx > 0.0) != (prev_f > 0.0)) {
      ++changes;
      blo = prev_x;
      bhi = x;
    }
    prev_x = x;
    prev_f = fx;
  }
  if (changes == 0) throw BracketNotFound("critical polynomial has no sign change in (0, 1/2)");
  if (changes > 1)
    throw MultipleRoots("critical polynomial changed sign " + std::to_string(changes) +
                        " times in (0, 1/2)");
  return bisect(critical_polynomial, blo, bhi, tol);
}

std::pair<double, double> solve_gamma_cvt_endpoints(double tol) {
  if (!(tol > 0.0)) throw InvalidRange("tolerance must be positive");
  // Seed brackets from a coarse CVT scan of the three-point gamma set.
  const ScanResult scan = scan_cvt_range(0.30, 0.49, 64, Family::gamma, 3);
  if (scan.transitions.size() != 2)
    throw BracketNotFound("expected exactly two CVT transitions for the gamma base set, got " +
                          std::to_string(scan.transitions.size()));
  const double seed_lo = scan.transitions[0];
  const double seed_hi = scan.transitions[1];
  const double pad = 1e-3;
  const RootResult lo = bisect(gamma3_lower_margin, seed_lo - pad, seed_lo + pad, tol);
  const RootResult hi = bisect(gamma3_upper_margin, seed_hi - pad, seed_hi + pad, tol);
  return {lo.root, hi.root};
}

double solve_delta_crossing(double tol) {
  if (!(tol > 0.0)) throw InvalidRange("tolerance must be positive");
  const auto gap = [](double x) {
    const Ratio r(x);
    return distortion(r, build_delta(r, 3, DeltaVariant::left), 1e-12).value -
           closed_form_v_beta3(r);
  };
  return bisect(gap, 0.43, 0.44, tol).root;
}

OrderingReport ordering_report(double x) {
  const Ratio r(x);
  OrderingReport rep;
  rep.v_beta3 = closed_form_v_beta3(r);
  rep.v_gamma3 = closed_form_v_gamma3(r);
  rep.v_delta3 = distortion(r, build_delta(r, 3, DeltaVariant::left), 1e-12).value;
  rep.min_label = Family::beta;
  double best = rep.v_beta3;
  if (rep.v_gamma3 < best) {
    best = rep.v_gamma3;
    rep.min_label = Family::gamma;
  }
  if (rep.v_delta3 < best) {
    best = rep.v_delta3;
    rep.min_label = Family::delta;
  }
  return rep;
}

}  // namespace cantorq
