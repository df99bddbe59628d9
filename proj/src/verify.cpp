#include "cantorq/verify.hpp"

#include <cmath>

#include "cantorq/critical.hpp"
#include "cantorq/cvt.hpp"
#include "cantorq/distortion.hpp"
#include "cantorq/measure.hpp"
#include "cantorq/oracle.hpp"
#include "cantorq/sets.hpp"

namespace cantorq {

namespace {

constexpr double kR0 = 0.4350411707;

void add(std::vector<Anchor>& out, std::string name, double computed, double expected,
         double tol) {
  Anchor a;
  a.name = std::move(name);
  a.computed = computed;
  a.expected = expected;
  a.tol = tol;
  a.pass = std::abs(computed - expected) <= tol;
  out.push_back(std::move(a));
}

double map_end(Ratio r, const char* word, double x) {
  return affine_of_word(r, Word::parse(word))(x);
}

}  // namespace

std::vector<Anchor> run_reference_checks() {
  std::vector<Anchor> out;
  const Ratio r(kR0);
  constexpr double kTol = 5e-7;

  // Solved constants.
  const RootResult r0 = solve_r0(1e-12);
  add(out, "critical-ratio", r0.root, 0.4350411707, 5e-9);
  add(out, "beta-cvt-bound", beta_cvt_upper_bound(), 0.4384471872, 5e-9);
  const auto [glo, ghi] = solve_gamma_cvt_endpoints(1e-12);
  add(out, "gamma-cvt-low", glo, 0.3613249509, 5e-9);
  add(out, "gamma-cvt-high", ghi, 0.4376259168, 5e-9);
  add(out, "delta-crossing", solve_delta_crossing(1e-10), 0.4371985206, 5e-8);

  // Cylinder geometry.
  add(out, "a(1)", centroid_of_word(r, Word::parse("1")), 0.2175, 5e-5);
  add(out, "a(2)", centroid_of_word(r, Word::parse("2")), 0.7825, 5e-5);
  add(out, "S11(1)", map_end(r, "11", 1.0), 0.189261, kTol);
  add(out, "S121(1)", map_end(r, "121", 1.0), 0.328117, kTol);
  add(out, "S122(0)", map_end(r, "122", 0.0), 0.352705, kTol);
  add(out, "S1212(0)", map_end(r, "1212", 0.0), 0.292297, kTol);
  add(out, "S1211(1)", map_end(r, "1211", 1.0), 0.2816, kTol);
  add(out, "S12122(0)", map_end(r, "12122", 0.0), 0.312534, kTol);
  add(out, "S12212(0)", map_end(r, "12212", 0.0), 0.372942, kTol);
  {
    const Word u[] = {Word::parse("11"), Word::parse("1211"), Word::parse("12121")};
    add(out, "a(11,1211,12121)", centroid_of_union(r, u), 0.144047, kTol);
    const Word v[] = {Word::parse("11"), Word::parse("1211")};
    add(out, "mid(a(11,1211),r)", 0.5 * (centroid_of_union(r, v) + kR0), 0.281742, kTol);
  }
  add(out, "3r-1", 3.0 * kR0 - 1.0, 0.305124, kTol);
  add(out, "2r-1/2", 2.0 * kR0 - 0.5, 0.370082, kTol);

  // Distortions.
  add(out, "V2", beta_distortion_formula(r, 2), 0.0186274, kTol);
  add(out, "V3", beta_distortion_formula(r, 3), 0.0110764, kTol);
  add(out, "V4", beta_distortion_formula(r, 4), 0.00352544, kTol);
  {
    std::vector<double> five;
    for (const char* w : {"11", "12", "21", "221", "222"})
      five.push_back(centroid_of_word(r, Word::parse(w)));
    add(out, "five-point-set", distortion(r, Quantizer(std::move(five))).value, 0.00281089, kTol);
  }
  add(out, "beta8", distortion(r, build_beta(r, 8)).value, 0.000667229, kTol);
  add(out, "beta16", distortion(r, build_beta(r, 16)).value, 0.00012628, kTol);
  add(out, "J1-about-a(1)",
      second_moment_about(r, Word::parse("1"), centroid_of_word(r, Word::parse("1"))),
      0.00931372, kTol);
  add(out, "J1-about-r", second_moment_about(r, Word::parse("1"), kR0), 0.0329713, kTol);
  {
    const Word u[] = {Word::parse("11"), Word::parse("121")};
    add(out, "J11+J121-union", distortion_over_union(r, u, centroid_of_union(r, u)),
        0.00404695, kTol);
    const Word v[] = {Word::parse("12122"), Word::parse("122")};
    add(out, "J12122+J122-union", distortion_over_union(r, v, 0.305124), 0.00107592, kTol);
    const Word w[] = {Word::parse("12212"), Word::parse("1222")};
    add(out, "J12212+J1222-union", distortion_over_union(r, w, 0.3700816), 0.000150535, kTol);
  }

  // The two three-point closed forms meet at the solved critical ratio.
  const Ratio root(r0.root);
  add(out, "beta3-gamma3-tie",
      std::abs(closed_form_v_beta3(root) - closed_form_v_gamma3(root)), 0.0, 1e-11);

  return out;
}

bool all_pass(const std::vector<Anchor>& anchors) {
  for (const auto& a : anchors)
    if (!a.pass) return false;
  return true;
}

}  // namespace cantorq
