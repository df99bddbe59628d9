// Acceptance suite: one pass/fail line per criterion, every tolerance pinned
// in code. Exit status is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "cantorq/critical.hpp"
#include "cantorq/cvt.hpp"
#include "cantorq/distortion.hpp"
#include "cantorq/measure.hpp"
#include "cantorq/oracle.hpp"
#include "cantorq/sets.hpp"
#include "test_util.hpp"

using namespace cantorq;
using tq::operator""_w;

namespace {

const double kR0Decimal = 0.4350411707;

struct Recorder {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& detail) {
    if (!ok) {
      pass = false;
      notes.push_back(detail);
    }
  }
  void require_close(const std::string& what, double computed, double expected, double tol) {
    char buf[256];
    if (std::abs(computed - expected) <= tol) return;
    std::snprintf(buf, sizeof(buf), "%s: computed %.12g, expected %.10g, |diff| %.3g > tol %.1g",
                  what.c_str(), computed, expected, std::abs(computed - expected), tol);
    pass = false;
    notes.push_back(buf);
  }
  void budget(double seconds, double limit) {
    char buf[128];
    if (seconds <= limit) return;
    std::snprintf(buf, sizeof(buf), "runtime %.1f s exceeded budget %.0f s", seconds, limit);
    pass = false;
    notes.push_back(buf);
  }
};

double now_seconds() {
  return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

void criterion_1_constants(Recorder& rec) {
  rec.require_close("critical ratio", solve_r0(1e-12).root, 0.4350411707, 5e-9);
  rec.require_close("beta CVT bound", beta_cvt_upper_bound(), 0.4384471872, 5e-9);
  const auto [glo, ghi] = solve_gamma_cvt_endpoints(1e-12);
  rec.require_close("gamma CVT low endpoint", glo, 0.3613249509, 5e-9);
  rec.require_close("gamma CVT high endpoint", ghi, 0.4376259168, 5e-9);
  rec.require_close("delta crossing", solve_delta_crossing(1e-10), 0.4371985206, 5e-8);
}

void criterion_2_distortion(Recorder& rec) {
  const Ratio r(kR0Decimal);
  rec.require_close("V2", beta_distortion_formula(r, 2), 0.0186274, 5e-7);
  rec.require_close("V3", beta_distortion_formula(r, 3), 0.0110764, 5e-7);
  rec.require_close("V4", beta_distortion_formula(r, 4), 0.00352544, 5e-7);
  std::vector<double> five;
  for (const char* w : {"11", "12", "21", "221", "222"})
    five.push_back(centroid_of_word(r, Word::parse(w)));
  rec.require_close("five-point set", distortion(r, Quantizer(five)).value, 0.00281089, 5e-7);
  rec.require_close("beta 8", distortion(r, build_beta(r, 8)).value, 0.000667229, 5e-7);
  rec.require_close("beta 16", distortion(r, build_beta(r, 16)).value, 0.00012628, 5e-7);
  rec.require_close("J1 about a(1)",
                    second_moment_about(r, "1"_w, centroid_of_word(r, "1"_w)), 0.00931372, 5e-7);
  rec.require_close("J1 about r", second_moment_about(r, "1"_w, kR0Decimal), 0.0329713, 5e-7);
  const Word u[] = {"11"_w, "121"_w};
  rec.require_close("J11+J121 about their centroid",
                    distortion_over_union(r, u, centroid_of_union(r, u)), 0.00404695, 5e-7);
  const Word v[] = {"12122"_w, "122"_w};
  rec.require_close("J12122+J122 about 0.305124", distortion_over_union(r, v, 0.305124),
                    0.00107592, 5e-7);
  const Word w[] = {"12212"_w, "1222"_w};
  rec.require_close("J12212+J1222 about 0.3700816", distortion_over_union(r, w, 0.3700816),
                    0.000150535, 5e-7);
}

void criterion_3_geometry(Recorder& rec) {
  const Ratio r(kR0Decimal);
  const auto end = [&](const char* word, double x) {
    return affine_of_word(r, Word::parse(word))(x);
  };
  rec.require_close("a(1)", centroid_of_word(r, "1"_w), 0.2175, 5e-5);
  rec.require_close("a(2)", centroid_of_word(r, "2"_w), 0.7825, 5e-5);
  rec.require_close("S11(1)", end("11", 1.0), 0.189261, 5e-7);
  rec.require_close("S121(1)", end("121", 1.0), 0.328117, 5e-7);
  rec.require_close("S122(0)", end("122", 0.0), 0.352705, 5e-7);
  rec.require_close("S1212(0)", end("1212", 0.0), 0.292297, 5e-7);
  rec.require_close("S1211(1)", end("1211", 1.0), 0.2816, 5e-7);
  rec.require_close("S12122(0)", end("12122", 0.0), 0.312534, 5e-7);
  rec.require_close("S12212(0)", end("12212", 0.0), 0.372942, 5e-7);
  const Word three[] = {"11"_w, "1211"_w, "12121"_w};
  rec.require_close("a(11,1211,12121)", centroid_of_union(r, three), 0.144047, 5e-7);
  const Word two[] = {"11"_w, "1211"_w};
  rec.require_close("(a(11,1211)+r)/2", 0.5 * (centroid_of_union(r, two) + kR0Decimal),
                    0.281742, 5e-7);
  rec.require_close("3r-1", 3.0 * kR0Decimal - 1.0, 0.305124, 5e-7);
  rec.require_close("2r-1/2", 2.0 * kR0Decimal - 0.5, 0.370082, 5e-7);
}

void criterion_4_tie(Recorder& rec) {
  const double root = solve_r0(1e-12).root;
  const Ratio r(root);
  rec.require_close("closed-form tie at the critical ratio",
                    closed_form_v_beta3(r) - closed_form_v_gamma3(r), 0.0, 1e-11);
  const DistortionResult vb = distortion(r, build_beta(r, 3), 1e-12);
  const DistortionResult vg = distortion(r, build_gamma(r, 3), 1e-12);
  const double combined = (vb.upper - vb.lower) + (vg.upper - vg.lower) + 1e-12;
  rec.require(std::abs(vb.value - vg.value) <= combined,
              "engine distortions of the two 3-point candidates disagree beyond enclosures");
}

void criterion_5_formula_regime(Recorder& rec) {
  const Ratio r(1.0 / 3.0);
  const AtomList atoms = discretize(r, 14);
  for (int n = 2; n <= 16; ++n) {
    const OracleResult res = dp_optimal(atoms, n);
    char what[64];
    std::snprintf(what, sizeof(what), "oracle value at n=%d", n);
    rec.require_close(what, res.value, beta_distortion_formula(r, n), 2e-6);
    const Quantizer beta = build_beta(r, n);
    double worst = 0.0;
    for (int i = 0; i < n; ++i) worst = std::max(worst, std::abs(res.codepoints[i] - beta[i]));
    std::snprintf(what, sizeof(what), "oracle centroids at n=%d (max dev %.3g)", n, worst);
    rec.require(worst < 1e-4, what);
  }
}

void criterion_6_supercritical(Recorder& rec) {
  {
    const Ratio r(0.437);
    const double oracle = dp_optimal(discretize(r, 14), 3).value;
    const double v_beta = closed_form_v_beta3(r);
    const double v_gamma = distortion(r, build_gamma(r, 3), 1e-12).value;
    const double v_delta = distortion(r, build_delta(r, 3, DeltaVariant::left), 1e-12).value;
    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "oracle %.12g must undercut v_beta3 %.12g by more than 1e-5", oracle, v_beta);
    rec.require(oracle < v_beta - 1e-5, buf);
    const double best_candidate = std::min(v_gamma, v_delta);
    std::snprintf(buf, sizeof(buf),
                  "|oracle - min(v_gamma3, v_delta3)| = |%.12g - %.12g| = %.3g exceeds 2e-6 "
                  "(the oracle's codebook is a strictly better CVT than both candidates)",
                  oracle, best_candidate, std::abs(oracle - best_candidate));
    rec.require(std::abs(oracle - best_candidate) <= 2e-6, buf);
  }
  {
    const Ratio r(0.42);
    const double oracle = dp_optimal(discretize(r, 14), 3).value;
    rec.require_close("oracle at r=0.42 vs the closed form", oracle, closed_form_v_beta3(r),
                      2e-6);
  }
}

void criterion_7_cvt(Recorder& rec) {
  for (const double rv : {1.0 / 3.0, 0.42, 0.4384471872}) {
    const Ratio r(rv);
    for (int n = 2; n <= 16; ++n) {
      char what[64];
      std::snprintf(what, sizeof(what), "beta n=%d should be a CVT at r=%.10g", n, rv);
      rec.require(check_cvt(r, build_beta(r, n)).is_cvt, what);
    }
  }
  {
    const Ratio r(0.44);
    rec.require(!check_cvt(r, build_beta(r, 3)).is_cvt,
                "beta n=3 should not be a CVT at r=0.44");
  }
  {
    const Ratio r(0.40);
    for (int n = 2; n <= 12; ++n) {
      char what[64];
      std::snprintf(what, sizeof(what), "gamma n=%d should be a CVT at r=0.40", n);
      rec.require(check_cvt(r, build_gamma(r, n)).is_cvt, what);
    }
  }
  {
    const Ratio r(0.35);
    rec.require(!check_cvt(r, build_gamma(r, 3)).is_cvt,
                "gamma n=3 should not be a CVT at r=0.35");
  }
}

void criterion_8_invariants(Recorder& rec) {
  // self-similarity of second-moment sums
  for (const double rv : {1.0 / 3.0, kR0Decimal}) {
    const Ratio r(rv);
    for (const double x0 : {0.0, 0.3, 0.5, 0.77, 1.0}) {
      const double expected = variance(r) + (x0 - 0.5) * (x0 - 0.5);
      for (int k = 1; k <= 8; ++k) {
        double sum = 0.0;
        for (std::uint64_t i = 0; i < (std::uint64_t{1} << k); ++i)
          sum += second_moment_about(r, word_at(k, i), x0);
        rec.require(std::abs(sum - expected) < 1e-12, "self-similarity sum identity");
      }
    }
  }

  // mass conservation
  {
    const Ratio r(0.41);
    for (const int k : {5, 12, 20}) {
      double sum = 0.0;
      for (std::uint64_t i = 0; i < (std::uint64_t{1} << k); ++i)
        sum += cylinder(r, word_at(k, i)).mass;
      rec.require(sum == 1.0, "mass conservation at level " + std::to_string(k));
    }
  }

  // reflection symmetry
  {
    std::mt19937 rng(2024);
    const Ratio r(0.44);
    for (int rep = 0; rep < 100; ++rep) {
      const Word w = tq::random_word(rng, static_cast<int>(rng() % 13));
      rec.require(
          std::abs(centroid_of_word(r, w.mirror()) - (1.0 - centroid_of_word(r, w))) < 1e-14,
          "reflection symmetry of centroids");
    }
  }

  // index-set independence of the beta distortion
  {
    std::mt19937 rng(77);
    const Ratio r(0.42);
    for (const int n : {3, 5, 7, 12}) {
      const LevelIndex li = level_index(n);
      const double reference = distortion(r, build_beta(r, n), 1e-12).value;
      for (int rep = 0; rep < 4; ++rep) {
        const IndexSet I = tq::random_index_set(rng, li.ell, n - (1 << li.ell));
        rec.require(std::abs(distortion(r, build_beta(r, n, I), 1e-12).value - reference) <
                        1e-12,
                    "index-set independence at n=" + std::to_string(n));
      }
    }
  }

  // split identity across the first-level cylinders
  for (const double rv : {0.42, kR0Decimal}) {
    const Ratio r(rv);
    const Quantizer parts[] = {build_beta(r, 2), build_beta(r, 3), build_beta(r, 4)};
    for (const Quantizer& left : parts) {
      for (const Quantizer& right : parts) {
        const Quantizer alpha =
            tq::merge(tq::apply_map(r, "1"_w, left), tq::apply_map(r, "2"_w, right));
        const double lhs = distortion(r, alpha, 1e-13).value;
        const double rhs = 0.5 * rv * rv *
                           (distortion(r, left, 1e-13).value + distortion(r, right, 1e-13).value);
        rec.require(std::abs(lhs - rhs) < 1e-11, "split identity");
      }
    }
  }

  // DP against exhaustive enumeration
  {
    const struct {
      double r;
      int k;
      int max_n;
    } combos[] = {{0.437, 8, 3}, {1.0 / 3.0, 5, 6}};
    for (const auto& c : combos) {
      const AtomList atoms = discretize(Ratio(c.r), c.k);
      for (int n = 1; n <= c.max_n; ++n) {
        const double brute = atoms.within_atom_variance + tq::brute_force_sse(atoms, n);
        const double dp = dp_optimal(atoms, n).value;
        rec.require(std::abs(dp - brute) <= 1e-12 * std::max(1.0, brute),
                    "DP vs exhaustive enumeration");
      }
    }
  }

  // Lloyd monotonicity
  {
    const Ratio r(0.42);
    Quantizer current = tq::quantizer_of({0.15, 0.4, 0.62, 0.9});
    DistortionResult prev = distortion(r, current);
    for (int step = 0; step < 8; ++step) {
      current = lloyd(r, current, 1, 0.0);
      const DistortionResult next = distortion(r, current);
      rec.require(next.value <= prev.value + (prev.upper - prev.lower) +
                                    (next.upper - next.lower) + 1e-14,
                  "Lloyd iteration increased the distortion");
      prev = next;
    }
  }
}

}  // namespace

int main() {
  struct Entry {
    const char* name;
    void (*fn)(Recorder&);
    double budget_seconds;
  };
  const Entry entries[] = {
      {"solved constants", criterion_1_constants, 30.0},
      {"distortion reference values", criterion_2_distortion, 10.0},
      {"geometry reference values", criterion_3_geometry, 10.0},
      {"three-point tie at the critical ratio", criterion_4_tie, 10.0},
      {"closed-formula regime at r=1/3", criterion_5_formula_regime, 120.0},
      {"super-critical regime", criterion_6_supercritical, 60.0},
      {"CVT behavior of the candidate families", criterion_7_cvt, 60.0},
      {"module invariant suites", criterion_8_invariants, 300.0},
  };

  int failures = 0;
  int id = 0;
  for (const Entry& e : entries) {
    ++id;
    Recorder rec;
    const double t0 = now_seconds();
    try {
      e.fn(rec);
    } catch (const std::exception& ex) {
      rec.require(false, std::string("exception: ") + ex.what());
    }
    const double elapsed = now_seconds() - t0;
    rec.budget(elapsed, e.budget_seconds);
    std::printf("%s  %d. %s (%.2f s)\n", rec.pass ? "PASS" : "FAIL", id, e.name, elapsed);
    for (const std::string& note : rec.notes) std::printf("      - %s\n", note.c_str());
    if (!rec.pass) ++failures;
  }
  std::printf("%d of %zu criteria passed\n",
              static_cast<int>(std::size(entries)) - failures, std::size(entries));
  return failures;
}
