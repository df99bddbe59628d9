#pragma once

#include <optional>
#include <vector>

#include "cantorq/measure.hpp"
#include "cantorq/quantizer.hpp"
#include "cantorq/ratio.hpp"
#include "cantorq/word.hpp"

namespace cantorq {

enum class Family { beta, gamma, delta };
enum class DeltaVariant { left, right };
enum class Regime { power, lower_half, upper_half };

/// n with 2^ell <= n < 2^(ell+1) and the branch of the construction it
/// selects: power (n = 2^ell), lower half (n <= 3*2^(ell-1)) or upper half.
struct LevelIndex {
  int n = 2;
  int ell = 1;
  Regime regime = Regime::power;
};

LevelIndex level_index(int n);  // throws InvalidN for n < 2

/// A set of distinct words, all of one length, selecting which cylinders of
/// that level get the refined treatment in a construction.
struct IndexSet {
  int level = 0;
  std::vector<Word> words;  // sorted, distinct, all of length `level`
};

/// The `count` lexicographically smallest words of the given length.
IndexSet canonical_index_set(int level, int count);

/// One codepoint together with the cylinder words whose union it is the
/// conditional centroid of.
struct LabeledPoint {
  std::vector<Word> words;
  double point = 0.0;
};

/// A codebook with per-point generating words, sorted by position.
struct LabeledQuantizer {
  std::vector<LabeledPoint> points;
  Quantizer quantizer() const;
};

// The first candidate family: midpoints of level-ell(n) cylinders, with the
// cylinders listed in I refined one level. I must have level ell(n) and
// cardinality n - 2^ell(n).
LabeledQuantizer build_beta_labeled(Ratio r, int n, const IndexSet& I);
Quantizer build_beta(Ratio r, int n, const IndexSet& I);
Quantizer build_beta(Ratio r, int n);  // canonical I

/// Distortion of beta_n(I), independent of I:
///   2^-ell r^(2 ell) V (2^(ell+1) - n + r^2 (n - 2^ell)).
double beta_distortion_formula(Ratio r, int n);

// The second family, built from the three-point base set of union centroids
// {a(11,121), a(122,211), a(212,22)} scaled into level ell(n)-1 cylinders.
// For n >= 4, I has level ell(n)-1 and cardinality n - 2^ell(n) (lower half)
// or n - 3*2^(ell(n)-1) (upper half); for n in {2,3} the fixed base sets are
// returned and I is ignored.
LabeledQuantizer build_gamma_labeled(Ratio r, int n, const IndexSet& I);
Quantizer build_gamma(Ratio r, int n, const IndexSet& I);
Quantizer build_gamma(Ratio r, int n);

/// Distortion of gamma_n(I) by regime: r^(2 ell) V at powers of two,
/// otherwise the mass-weighted mix of the base-set distortions V2, V3, V4.
double gamma_distortion_formula(Ratio r, int n);

// The third family; its three-point base set exists in two mirror-image
// variants and the recursion otherwise matches build_gamma.
LabeledQuantizer build_delta_labeled(Ratio r, int n, const IndexSet& I, DeltaVariant variant);
Quantizer build_delta(Ratio r, int n, const IndexSet& I, DeltaVariant variant);
Quantizer build_delta(Ratio r, int n, DeltaVariant variant = DeltaVariant::left);

/// Closed form for the three-point beta distortion:
///   -(r-1)(r^4+r^2) / (8(r+1)), identical to beta_distortion_formula(r, 3).
double closed_form_v_beta3(Ratio r);

/// Closed form for the three-point gamma distortion:
///   -(r^7+r^6+4r^5-2r^4-2r^3-8r^2+9r-3) / (48(r+1)).
double closed_form_v_gamma3(Ratio r);

/// Build any family with canonical index set (delta takes a variant).
Quantizer build_family(Ratio r, int n, Family family,
                       DeltaVariant variant = DeltaVariant::left);

const char* family_name(Family f);

}  // namespace cantorq
