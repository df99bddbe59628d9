#include "cantorq/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "cantorq/cvt.hpp"
#include "cantorq/distortion.hpp"
#include "cantorq/measure.hpp"

namespace cantorq {

AtomList discretize(Ratio ratio, int k) {
  if (k < 1 || k > 22)
    throw DepthOutOfRange("discretization depth must be in [1, 22], got " + std::to_string(k));
  const double r = ratio.value();
  AtomList atoms;
  atoms.r = r;
  atoms.depth = k;
  atoms.atom_mass = std::ldexp(1.0, -k);
  const double scale_k = std::pow(r, k);
  atoms.within_atom_variance = scale_k * scale_k * variance(ratio);
  const std::uint64_t count = std::uint64_t{1} << k;
  atoms.positions.resize(count);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    // Bit b of idx picks the b-th symbol (0 -> left map, 1 -> right map);
    // lexicographic index order is spatial order.
    double s = 1.0, t = 0.0;
    for (int b = k - 1; b >= 0; --b) {
      if ((idx >> b) & 1u) t += s * (1.0 - r);
      s *= r;
    }
    atoms.positions[idx] = t + 0.5 * s;
  }
  return atoms;
}

namespace {

// Relative slack under which two candidate costs count as exactly tied.
constexpr double kTieRel = 1e-10;

struct DpContext {
  const AtomList* atoms;
  std::int64_t m;
  // Prefix sums in extended precision: cluster costs are differences of
  // large accumulations and the tie rule needs the noise well below kTieRel.
  std::vector<long double> w, wx, wxx;
  std::vector<double> prev, cur;
  std::vector<std::vector<std::int32_t>> split;  // split[q][j]: first atom of last cluster

  explicit DpContext(const AtomList& a, int n)
      : atoms(&a), m(static_cast<std::int64_t>(a.positions.size())) {
    w.assign(static_cast<std::size_t>(m + 1), 0.0L);
    wx.assign(static_cast<std::size_t>(m + 1), 0.0L);
    wxx.assign(static_cast<std::size_t>(m + 1), 0.0L);
    const long double mass = a.atom_mass;
    for (std::int64_t i = 0; i < m; ++i) {
      const long double x = a.positions[static_cast<std::size_t>(i)];
      w[i + 1] = w[i] + mass;
      wx[i + 1] = wx[i] + mass * x;
      wxx[i + 1] = wxx[i] + mass * x * x;
    }
    prev.assign(static_cast<std::size_t>(m), 0.0);
    cur.assign(static_cast<std::size_t>(m), 0.0);
    split.assign(static_cast<std::size_t>(n + 1),
                 std::vector<std::int32_t>(static_cast<std::size_t>(m), 0));
  }

  // Weighted SSE of atoms [i..j], clamped at zero against cancellation.
  double cost(std::int64_t i, std::int64_t j) const {
    const long double dw = w[j + 1] - w[i];
    const long double dwx = wx[j + 1] - wx[i];
    const long double dwxx = wxx[j + 1] - wxx[i];
    return std::max(0.0, static_cast<double>(dwxx - dwx * dwx / dw));
  }

  double centroid(std::int64_t i, std::int64_t j) const {
    return static_cast<double>((wx[j + 1] - wx[i]) / (w[j + 1] - w[i]));
  }

  // Smallest split index whose candidate is within the tie slack of the
  // minimum over [lo..hi]; returns its (possibly slightly supra-minimal)
  // cost so that the reported value is the cost of the reported partition.
  void select(int q, std::int64_t j, std::int64_t lo, std::int64_t hi) {
    lo = std::max<std::int64_t>(lo, q - 1);
    hi = std::min(hi, j);
    double minv = std::numeric_limits<double>::infinity();
    for (std::int64_t i = lo; i <= hi; ++i)
      minv = std::min(minv, prev[static_cast<std::size_t>(i - 1)] + cost(i, j));
    const double slack = minv + kTieRel * minv;
    for (std::int64_t i = lo; i <= hi; ++i) {
      const double cand = prev[static_cast<std::size_t>(i - 1)] + cost(i, j);
      if (cand <= slack) {
        cur[static_cast<std::size_t>(j)] = cand;
        split[static_cast<std::size_t>(q)][static_cast<std::size_t>(j)] =
            static_cast<std::int32_t>(i);
        return;
      }
    }
  }

  void fill_dc(int q, std::int64_t jlo, std::int64_t jhi, std::int64_t ilo, std::int64_t ihi) {
    if (jlo > jhi) return;
    const std::int64_t jm = jlo + (jhi - jlo) / 2;
    select(q, jm, ilo, ihi);
    const std::int64_t arg = split[static_cast<std::size_t>(q)][static_cast<std::size_t>(jm)];
    fill_dc(q, jlo, jm - 1, ilo, arg);
    fill_dc(q, jm + 1, jhi, arg, ihi);
  }

  OracleResult finish(int n) {
    OracleResult res;
    res.n = n;
    res.value = atoms->within_atom_variance + cur[static_cast<std::size_t>(m - 1)];
    res.partition.assign(static_cast<std::size_t>(n), 0);
    std::int64_t j = m - 1;
    for (int q = n; q >= 2; --q) {
      const std::int64_t i = split[static_cast<std::size_t>(q)][static_cast<std::size_t>(j)];
      res.partition[static_cast<std::size_t>(q - 1)] = i;
      j = i - 1;
    }
    std::vector<double> cents;
    cents.reserve(static_cast<std::size_t>(n));
    for (int q = 0; q < n; ++q) {
      const std::int64_t lo = res.partition[static_cast<std::size_t>(q)];
      const std::int64_t hi = q + 1 < n ? res.partition[static_cast<std::size_t>(q + 1)] - 1 : m - 1;
      cents.push_back(centroid(lo, hi));
    }
    res.codepoints = Quantizer(std::move(cents));

    // True optima may split up to n-1 depth-k cylinders; the bound folds the
    // per-cylinder scale term and a slack of the largest inter-atom gap.
    double max_gap = 0.0;
    for (std::int64_t i = 1; i < m; ++i)
      max_gap = std::max(max_gap, atoms->positions[static_cast<std::size_t>(i)] -
                                      atoms->positions[static_cast<std::size_t>(i - 1)]);
    const double scale_k = std::pow(atoms->r, atoms->depth);
    res.discretization_error_bound =
        static_cast<double>(n) * atoms->atom_mass * (scale_k * scale_k + max_gap * max_gap);
    return res;
  }
};

void check_dp_args(const AtomList& atoms, int n) {
  const auto m = static_cast<std::int64_t>(atoms.positions.size());
  if (n < 1 || n > m)
    throw NTooLarge("cluster count " + std::to_string(n) + " not in [1, " + std::to_string(m) +
                    "]");
}

}  // namespace

OracleResult dp_optimal(const AtomList& atoms, int n) {
  check_dp_args(atoms, n);
  DpContext ctx(atoms, n);
  for (std::int64_t j = 0; j < ctx.m; ++j) ctx.cur[static_cast<std::size_t>(j)] = ctx.cost(0, j);
  for (int q = 2; q <= n; ++q) {
    std::swap(ctx.prev, ctx.cur);
    ctx.fill_dc(q, q - 1, ctx.m - 1, q - 1, ctx.m - 1);
  }
  return ctx.finish(n);
}

OracleResult dp_optimal_naive(const AtomList& atoms, int n) {
  check_dp_args(atoms, n);
  if (atoms.positions.size() > 4096)
    throw NTooLarge("naive DP limited to 4096 atoms");
  DpContext ctx(atoms, n);
  for (std::int64_t j = 0; j < ctx.m; ++j) ctx.cur[static_cast<std::size_t>(j)] = ctx.cost(0, j);
  for (int q = 2; q <= n; ++q) {
    std::swap(ctx.prev, ctx.cur);
    for (std::int64_t j = q - 1; j < ctx.m; ++j) ctx.select(q, j, q - 1, j);
  }
  return ctx.finish(n);
}

Quantizer lloyd(Ratio r, const Quantizer& init, int max_iters, double tol) {
  std::vector<double> pts = init.points();
  for (int iter = 0; iter < max_iters; ++iter) {
    std::vector<double> next;
    next.reserve(pts.size());
    double movement = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const double lo = i == 0 ? 0.0 : 0.5 * (pts[i - 1] + pts[i]);
      const double hi = i + 1 == pts.size() ? 1.0 : 0.5 * (pts[i] + pts[i + 1]);
      // tol 0: depth-capped only, so transient boundaries inside the support
      // cannot leave mass unresolved above the 2^-60 scale.
      const RestrictedMoments rm = restricted_moments(r, lo, hi, 60, 0.0);
      if (!(rm.mass > 0.0))
        throw EmptyCellEncountered("cell of codepoint " + std::to_string(pts[i]) +
                                   " carries no mass");
      next.push_back(rm.mean);
      movement = std::max(movement, std::abs(rm.mean - pts[i]));
    }
    pts = std::move(next);
    if (movement < tol) break;
  }
  return Quantizer(std::move(pts));
}

Quantizer quantile_init(const AtomList& atoms, int n) {
  check_dp_args(atoms, n);
  const auto m = static_cast<std::int64_t>(atoms.positions.size());
  std::vector<double> pts;
  pts.reserve(static_cast<std::size_t>(n));
  for (int q = 0; q < n; ++q) {
    const std::int64_t lo = m * q / n;
    const std::int64_t hi = m * (q + 1) / n - 1;
    double sum = 0.0;
    for (std::int64_t i = lo; i <= hi; ++i) sum += atoms.positions[static_cast<std::size_t>(i)];
    pts.push_back(sum / static_cast<double>(hi - lo + 1));
  }
  return Quantizer(std::move(pts));
}

CompareRow compare(Ratio r, int n, int k) {
  CompareRow row;
  row.r = r.value();
  row.n = n;
  row.depth = k;
  row.v_beta = beta_distortion_formula(r, n);
  row.v_gamma = distortion(r, build_gamma(r, n), 1e-12).value;
  row.v_delta = distortion(r, build_delta(r, n, DeltaVariant::left), 1e-12).value;
  const OracleResult oracle = dp_optimal(discretize(r, k), n);
  row.oracle = oracle.value;
  row.discretization_error_bound = oracle.discretization_error_bound;
  row.argmin = Family::beta;
  double best = row.v_beta;
  if (row.v_gamma < best) {
    best = row.v_gamma;
    row.argmin = Family::gamma;
  }
  if (row.v_delta < best) {
    best = row.v_delta;
    row.argmin = Family::delta;
  }
  row.exploratory = row.r > 0.4350411707;
  return row;
}

}  // namespace cantorq
