#pragma once

#include <cstdint>
#include <vector>

#include "cantorq/quantizer.hpp"
#include "cantorq/ratio.hpp"
#include "cantorq/sets.hpp"

namespace cantorq {

/// The measure collapsed to depth k: one atom of mass 2^-k at each cylinder
/// centroid, in spatial order, plus the exact within-cylinder variance
/// r^2k V that every quantizer pays regardless of the atom clustering.
struct AtomList {
  double r = 0.0;
  int depth = 0;
  double atom_mass = 0.0;
  double within_atom_variance = 0.0;
  std::vector<double> positions;
};

AtomList discretize(Ratio r, int k);  // 1 <= k <= 22, else DepthOutOfRange

/// Exact optimum over partitions of the atoms into n contiguous clusters.
/// `value` = within-atom variance + minimal weighted SSE; it equals the true
/// distortion of `codepoints` whenever no Voronoi cell splits a depth-k
/// cylinder, and bounds the true n-point optimum from above in general.
/// `partition[i]` is the first atom index of cluster i (partition[0] == 0).
struct OracleResult {
  int n = 0;
  double value = 0.0;
  Quantizer codepoints{std::vector<double>{0.5}};
  std::vector<std::int64_t> partition;
  double discretization_error_bound = 0.0;
};

/// Divide-and-conquer layer fill, O(n m log m); the cluster-cost matrix is
/// Monge so row argmins are monotone. Candidate costs within 1e-10 relative
/// of the row minimum count as tied and the smallest split index wins, which
/// keeps exactly symmetric optima (they occur at r = 1/3) deterministic
/// instead of letting rounding noise pick the winner.
OracleResult dp_optimal(const AtomList& atoms, int n);

/// Reference O(n m^2) scan with the identical selection rule; refuses more
/// than 4096 atoms. Must agree with dp_optimal bit for bit.
OracleResult dp_optimal_naive(const AtomList& atoms, int n);

/// Alternate Voronoi boundaries and cell centroids until the largest point
/// movement drops below tol. Cell centroids come from the depth-capped
/// moment recursion, so fixed points pass check_cvt. Throws
/// EmptyCellEncountered when a cell carries no mass.
Quantizer lloyd(Ratio r, const Quantizer& init, int max_iters = 200, double tol = 1e-10);

/// Centroids of n equal-count runs of the atom list; an initializer for
/// lloyd that does not presuppose any candidate construction.
Quantizer quantile_init(const AtomList& atoms, int n);

/// Head-to-head row: the three candidate constructions against the oracle.
/// Above the critical ratio no construction is proven optimal, so oracle
/// values there are exploratory rather than certified optima.
struct CompareRow {
  double r = 0.0;
  int n = 0;
  int depth = 0;
  double v_beta = 0.0;
  double v_gamma = 0.0;
  double v_delta = 0.0;
  double oracle = 0.0;
  double discretization_error_bound = 0.0;
  Family argmin = Family::beta;
  bool exploratory = false;
};

CompareRow compare(Ratio r, int n, int k);

}  // namespace cantorq
