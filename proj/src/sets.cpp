#include "cantorq/sets.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace cantorq {

namespace {

constexpr int kMaxN = 1 << 20;  // constructions allocate 2^ell(n) words

std::int64_t pow2(int e) { return std::int64_t{1} << e; }

std::vector<Word> parse_all(std::initializer_list<const char*> texts) {
  std::vector<Word> out;
  out.reserve(texts.size());
  for (const char* t : texts) out.push_back(Word::parse(t));
  return out;
}

// Base sets as word unions; every point of every family is the conditional
// centroid of such a union, and scaling by S_omega is word prefixing.
const std::vector<std::vector<Word>>& gamma2_words() {
  static const std::vector<std::vector<Word>> w = {parse_all({"1"}), parse_all({"2"})};
  return w;
}
const std::vector<std::vector<Word>>& gamma3_words() {
  static const std::vector<std::vector<Word>> w = {
      parse_all({"11", "121"}), parse_all({"122", "211"}), parse_all({"212", "22"})};
  return w;
}
const std::vector<std::vector<Word>>& gamma4_words() {
  static const std::vector<std::vector<Word>> w = {
      parse_all({"11"}), parse_all({"12"}), parse_all({"21"}), parse_all({"22"})};
  return w;
}
const std::vector<std::vector<Word>>& delta3_words(DeltaVariant v) {
  static const std::vector<std::vector<Word>> left = {
      parse_all({"11", "121", "1221"}), parse_all({"1222", "21"}), parse_all({"22"})};
  static const std::vector<std::vector<Word>> right = {
      parse_all({"11"}), parse_all({"12", "2111"}), parse_all({"2112", "212", "22"})};
  return v == DeltaVariant::left ? left : right;
}

void check_index_set(const IndexSet& I, int level, std::int64_t count) {
  if (I.level != level)
    throw IndexSetMismatch("index set level " + std::to_string(I.level) + ", expected " +
                           std::to_string(level));
  if (static_cast<std::int64_t>(I.words.size()) != count)
    throw IndexSetMismatch("index set cardinality " + std::to_string(I.words.size()) +
                           ", expected " + std::to_string(count));
  for (std::size_t i = 0; i < I.words.size(); ++i) {
    if (I.words[i].size() != level) throw IndexSetMismatch("index word of wrong length");
    if (i > 0 && !(I.words[i - 1] < I.words[i]))
      throw IndexSetMismatch("index words must be sorted and distinct");
  }
}

LabeledQuantizer assemble(Ratio r, std::vector<std::vector<Word>> unions) {
  LabeledQuantizer lq;
  lq.points.reserve(unions.size());
  for (auto& ws : unions) {
    LabeledPoint p;
    p.point = centroid_of_union(r, ws);
    p.words = std::move(ws);
    lq.points.push_back(std::move(p));
  }
  std::sort(lq.points.begin(), lq.points.end(),
            [](const LabeledPoint& a, const LabeledPoint& b) { return a.point < b.point; });
  return lq;
}

// Shared recursion shape of the gamma and delta constructions: scale the
// 3-point base set into the I-cylinders of level ell-1 (lower half) or the
// complement (upper half), filling the rest with the 2- or 4-point set.
LabeledQuantizer build_mixed(Ratio r, int n, const IndexSet& I,
                             const std::vector<std::vector<Word>>& base3) {
  const LevelIndex li = level_index(n);
  if (n > kMaxN) throw NTooLarge("n above 2^20 not supported");
  const bool lower = li.regime != Regime::upper_half;
  const std::int64_t count =
      lower ? n - pow2(li.ell) : n - 3 * pow2(li.ell - 1);
  check_index_set(I, li.ell - 1, count);

  std::vector<std::vector<Word>> unions;
  unions.reserve(static_cast<std::size_t>(n));
  const auto& in_set = lower ? base3 : gamma4_words();
  const auto& out_set = lower ? gamma2_words() : base3;
  std::size_t next = 0;  // I.words is sorted, the level enumeration is too
  for (std::int64_t i = 0; i < pow2(li.ell - 1); ++i) {
    const Word omega = word_at(li.ell - 1, static_cast<std::uint64_t>(i));
    bool selected = next < I.words.size() && I.words[next] == omega;
    if (selected) ++next;
    for (const auto& member : selected ? in_set : out_set) {
      std::vector<Word> prefixed;
      prefixed.reserve(member.size());
      for (const auto& w : member) prefixed.push_back(omega.concat(w));
      unions.push_back(std::move(prefixed));
    }
  }
  return assemble(r, std::move(unions));
}

}  // namespace

Quantizer LabeledQuantizer::quantizer() const {
  std::vector<double> pts;
  pts.reserve(points.size());
  for (const auto& p : points) pts.push_back(p.point);
  return Quantizer(std::move(pts));
}

LevelIndex level_index(int n) {
  if (n < 2) throw InvalidN("n must be at least 2, got " + std::to_string(n));
  LevelIndex li;
  li.n = n;
  li.ell = 0;
  while (pow2(li.ell + 1) <= n) ++li.ell;
  if (n == pow2(li.ell))
    li.regime = Regime::power;
  else if (n <= 3 * pow2(li.ell - 1))
    li.regime = Regime::lower_half;
  else
    li.regime = Regime::upper_half;
  return li;
}

IndexSet canonical_index_set(int level, int count) {
  if (level < 0 || level > 20) throw NTooLarge("index level above 20 not supported");
  if (count < 0 || static_cast<std::int64_t>(count) > pow2(level))
    throw CountOutOfRange("index set count " + std::to_string(count) +
                          " not in [0, 2^" + std::to_string(level) + "]");
  IndexSet I;
  I.level = level;
  I.words.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) I.words.push_back(word_at(level, static_cast<std::uint64_t>(i)));
  return I;
}

LabeledQuantizer build_beta_labeled(Ratio r, int n, const IndexSet& I) {
  const LevelIndex li = level_index(n);
  if (n > kMaxN) throw NTooLarge("n above 2^20 not supported");
  check_index_set(I, li.ell, n - pow2(li.ell));

  std::vector<std::vector<Word>> unions;
  unions.reserve(static_cast<std::size_t>(n));
  std::size_t next = 0;
  for (std::int64_t i = 0; i < pow2(li.ell); ++i) {
    const Word sigma = word_at(li.ell, static_cast<std::uint64_t>(i));
    bool refined = next < I.words.size() && I.words[next] == sigma;
    if (refined) ++next;
    if (refined) {
      Word s1 = sigma, s2 = sigma;
      s1.push_back(1);
      s2.push_back(2);
      unions.push_back({std::move(s1)});
      unions.push_back({std::move(s2)});
    } else {
      unions.push_back({sigma});
    }
  }
  return assemble(r, std::move(unions));
}

Quantizer build_beta(Ratio r, int n, const IndexSet& I) {
  return build_beta_labeled(r, n, I).quantizer();
}

Quantizer build_beta(Ratio r, int n) {
  const LevelIndex li = level_index(n);
  return build_beta(r, n, canonical_index_set(li.ell, static_cast<int>(n - pow2(li.ell))));
}

double beta_distortion_formula(Ratio ratio, int n) {
  const LevelIndex li = level_index(n);
  const double r = ratio.value();
  const double rl = std::pow(r, li.ell);
  return std::ldexp(1.0, -li.ell) * rl * rl * variance(ratio) *
         (static_cast<double>(pow2(li.ell + 1) - n) +
          r * r * static_cast<double>(n - pow2(li.ell)));
}

LabeledQuantizer build_gamma_labeled(Ratio r, int n, const IndexSet& I) {
  if (n < 2) throw InvalidN("n must be at least 2");
  if (n == 2) return assemble(r, gamma2_words());
  if (n == 3) return assemble(r, gamma3_words());
  return build_mixed(r, n, I, gamma3_words());
}

Quantizer build_gamma(Ratio r, int n, const IndexSet& I) {
  return build_gamma_labeled(r, n, I).quantizer();
}

Quantizer build_gamma(Ratio r, int n) {
  if (n <= 3) return build_gamma_labeled(r, n, IndexSet{}).quantizer();
  const LevelIndex li = level_index(n);
  const std::int64_t count = li.regime != Regime::upper_half ? n - pow2(li.ell)
                                                             : n - 3 * pow2(li.ell - 1);
  return build_gamma(r, n, canonical_index_set(li.ell - 1, static_cast<int>(count)));
}

double gamma_distortion_formula(Ratio ratio, int n) {
  const double r = ratio.value();
  const double v2 = r * r * variance(ratio);
  if (n == 2) return v2;
  if (n == 3) return closed_form_v_gamma3(ratio);
  const LevelIndex li = level_index(n);
  const double rl1 = std::pow(r, li.ell - 1);
  const double unit = std::ldexp(1.0, -(li.ell - 1)) * rl1 * rl1;
  switch (li.regime) {
    case Regime::power:
      return std::pow(r, 2 * li.ell) * variance(ratio);
    case Regime::lower_half:
      return unit * (closed_form_v_gamma3(ratio) * static_cast<double>(n - pow2(li.ell)) +
                     v2 * static_cast<double>(3 * pow2(li.ell - 1) - n));
    case Regime::upper_half: {
      const double v4 = std::pow(r, 4) * variance(ratio);
      return unit * (closed_form_v_gamma3(ratio) * static_cast<double>(pow2(li.ell + 1) - n) +
                     v4 * static_cast<double>(n - 3 * pow2(li.ell - 1)));
    }
  }
  return 0.0;  // unreachable
}

LabeledQuantizer build_delta_labeled(Ratio r, int n, const IndexSet& I, DeltaVariant variant) {
  if (n < 2) throw InvalidN("n must be at least 2");
  if (n == 2) return assemble(r, gamma2_words());
  if (n == 3) return assemble(r, delta3_words(variant));
  return build_mixed(r, n, I, delta3_words(variant));
}

Quantizer build_delta(Ratio r, int n, const IndexSet& I, DeltaVariant variant) {
  return build_delta_labeled(r, n, I, variant).quantizer();
}

Quantizer build_delta(Ratio r, int n, DeltaVariant variant) {
  if (n <= 3) return build_delta_labeled(r, n, IndexSet{}, variant).quantizer();
  const LevelIndex li = level_index(n);
  const std::int64_t count = li.regime != Regime::upper_half ? n - pow2(li.ell)
                                                             : n - 3 * pow2(li.ell - 1);
  return build_delta(r, n, canonical_index_set(li.ell - 1, static_cast<int>(count)), variant);
}

double closed_form_v_beta3(Ratio ratio) {
  const double r = ratio.value();
  return -(r - 1.0) * (r * r * r * r + r * r) / (8.0 * (r + 1.0));
}

double closed_form_v_gamma3(Ratio ratio) {
  const double r = ratio.value();
  const double r2 = r * r, r3 = r2 * r, r4 = r2 * r2, r5 = r4 * r, r6 = r3 * r3, r7 = r6 * r;
  return -(r7 + r6 + 4.0 * r5 - 2.0 * r4 - 2.0 * r3 - 8.0 * r2 + 9.0 * r - 3.0) /
         (48.0 * (r + 1.0));
}

Quantizer build_family(Ratio r, int n, Family family, DeltaVariant variant) {
  switch (family) {
    case Family::beta: return build_beta(r, n);
    case Family::gamma: return build_gamma(r, n);
    case Family::delta: return build_delta(r, n, variant);
  }
  throw Error("unknown family");
}

const char* family_name(Family f) {
  switch (f) {
    case Family::beta: return "beta";
    case Family::gamma: return "gamma";
    case Family::delta: return "delta";
  }
  return "?";
}

}  // namespace cantorq
